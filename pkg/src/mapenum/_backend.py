"""Kernel selection.

The compiled kernel is used when it was built; set ``MAPENUM_PURE_PYTHON=1``
to force the pure-Python kernel.
"""

import os

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

KERNELS = {"python": _pykernel}
if _ckernel is not None:
    KERNELS["compiled"] = _ckernel

if _ckernel is not None and not os.environ.get("MAPENUM_PURE_PYTHON"):
    DEFAULT = "compiled"
else:
    DEFAULT = "python"


def get_kernel(name=None):
    """Return the kernel module called ``name`` (``None`` or "auto" for the default)."""
    if name in (None, "auto"):
        name = DEFAULT
    try:
        return KERNELS[name]
    except KeyError:
        raise ValueError(
            f"unknown or unavailable backend {name!r}; available: {sorted(KERNELS)}"
        ) from None
