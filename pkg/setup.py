"""Build script for the optional GMP-backed Cython kernel.

The extension is optional: when Cython, a C compiler or libgmp is missing the
package installs without it and falls back to the pure-Python kernel.
"""
import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._warn(exc)

    def _warn(self, exc):
        sys.stderr.write(
            "warning: compiled kernel not built (%s); "
            "the pure-Python kernel will be used\n" % exc
        )


def _extensions():
    if os.environ.get("MAPENUM_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "mapenum._ckernel",
        ["src/mapenum/_ckernel.pyx"],
        libraries=["gmp"],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
    )
    return cythonize(
        [ext],
        compiler_directives={"language_level": "3"},
        quiet=True,
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
