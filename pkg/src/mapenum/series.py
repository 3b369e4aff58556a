"""Fixed-genus formulas for ``m_g(n)`` with ``g >= 1``.

For positive genus the generating function is rational in
``m = (1 - sqrt(1 - 12 z)) / 6``::

    M_g(z) = z^(2g) P_g(m) / ((1-2m)^(3g-2) (1-3m)^2 (1-6m)^(5g-3))

with ``deg P_g <= 4g - 4``. This module extracts the integer coefficients of
``P_g`` from the first ``6g - 4`` table values, evaluates ``m_g(n)`` in closed
form from them, and provides the linear recurrence in ``n`` that holds for
``n >= 6g - 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import TableTooSmallError
from .rooted import EdgeTable

SUBSTITUTION = "m = (1 - sqrt(1 - 12z))/6"


@lru_cache(maxsize=4096)
def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 for ``b < 0`` or ``b > a``."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)


def _check_genus(g):
    if isinstance(g, bool) or not isinstance(g, int) or g < 1:
        raise ValueError(f"genus must be a positive int, got {g!r}")


@dataclass(frozen=True)
class GenusPolynomial:
    """Coefficients ``p_{g,0} .. p_{g,4g-4}`` of ``P_g(m)``."""

    genus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _check_genus(self.genus)
        if len(self.coeffs) != 4 * self.genus - 3:
            raise ValueError(
                f"P_{self.genus} needs {4 * self.genus - 3} coefficients, got {len(self.coeffs)}"
            )

    @property
    def degree_bound(self) -> int:
        return 4 * self.genus - 4

    def __call__(self, m):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * m + c
        return acc


@dataclass(frozen=True)
class RationalForm:
    """``M_g(z) = z^(2g) P_g(m) / ((1-2m)^a (1-3m)^b (1-6m)^c)``."""

    genus: int
    numerator: GenusPolynomial
    z_power: int
    exponents: tuple[int, int, int]
    substitution: str = SUBSTITUTION

    @property
    def text(self) -> str:
        a, b, c = self.exponents
        return (
            f"z^{self.z_power} * ({format_polynomial(self.numerator.coeffs)})"
            f" / ((1-2m)^{a} (1-3m)^{b} (1-6m)^{c})"
        )

    def __str__(self):
        return f"{self.text}, where {self.substitution}"


def format_polynomial(coeffs: Sequence[int], var: str = "m") -> str:
    """Write every coefficient, lowest power first: ``3 - 2*m + 0*m^2``."""
    parts = []
    for power, c in enumerate(coeffs):
        mag = abs(c)
        if power == 0:
            term = str(mag)
        elif power == 1:
            term = f"{mag}*{var}"
        else:
            term = f"{mag}*{var}^{power}"
        if not parts:
            parts.append(f"-{term}" if c < 0 else term)
        else:
            parts.append(f"- {term}" if c < 0 else f"+ {term}")
    return " ".join(parts)


def compute_pg(g: int, edge_table: EdgeTable) -> GenusPolynomial:
    """Coefficients of ``P_g(m)`` from ``m_g(2g) .. m_g(6g-4)``.

    Raises:
        TableTooSmallError: the table does not reach genus ``g`` and
            ``6g - 4`` edges.
    """
    _check_genus(g)
    top = 6 * g - 4
    if edge_table.max_genus < g or edge_table.max_edges < top:
        raise TableTooSmallError(
            f"P_{g} needs m_{g}(n) up to n={top}; table covers "
            f"g<={edge_table.max_genus}, n<={edge_table.max_edges}"
        )
    a, c = 3 * g - 2, 5 * g - 3
    coeffs = []
    for l in range(4 * g - 3):
        total = 0
        for n in range(2 * g, min(top, l + 2 * g) + 1):
            b = n - 2 * g + 2
            s = l - n + 2 * g
            inner = 0
            for i in range(min(a, s) + 1):
                for j in range(min(b, s - i) + 1):
                    k = s - i - j
                    if k > c:
                        continue
                    inner += 2 ** (i + k) * 3 ** (j + k) * binom(a, i) * binom(b, j) * binom(c, k)
            term = edge_table.rows[g][n] * inner
            total += -term if (l - n) % 2 else term
        coeffs.append(total)
    return GenusPolynomial(g, tuple(coeffs))


def fixed_genus_next(g: int, prefix: Sequence[int], n: int) -> int:
    """``m_g(n)`` from ``prefix = (m_g(2g), ..., m_g(n-1))``, valid for ``n >= 6g - 3``."""
    _check_genus(g)
    if n < 6 * g - 3:
        raise ValueError(f"the genus-{g} recurrence only holds for n >= {6 * g - 3}, got n={n}")
    if len(prefix) != n - 2 * g:
        raise ValueError(
            f"prefix must hold m_{g}(e) for {2 * g} <= e <= {n - 1} "
            f"({n - 2 * g} values), got {len(prefix)}"
        )
    b, c = 3 * g - 2, 5 * g - 3
    total = 0
    for e, value in zip(range(2 * g, n), prefix):
        if not value:
            continue
        a = e - 2 * g + 2
        s = n - e
        inner = 0
        for i in range(min(a, s) + 1):
            for j in range(min(b, s - i) + 1):
                k = s - i - j
                if k > c:
                    continue
                inner += 2 ** (j + k) * 3 ** (i + k) * binom(a, i) * binom(b, j) * binom(c, k)
        total += -value * inner if (n - e - 1) % 2 else value * inner
    return total


def fixed_genus_sequence(g: int, seed: Sequence[int], max_edges: int) -> list[int]:
    """Extend ``m_g(2g) .. m_g(6g-4)`` to ``m_g(0) .. m_g(max_edges)``."""
    _check_genus(g)
    if len(seed) != 4 * g - 3:
        raise ValueError(f"seed must hold m_{g}(n) for {2 * g} <= n <= {6 * g - 4}")
    values = list(seed)
    for n in range(6 * g - 3, max_edges + 1):
        values.append(fixed_genus_next(g, values, n))
    return ([0] * (2 * g) + values)[: max_edges + 1]


def closed_form_value(poly: GenusPolynomial, n: int) -> int:
    """Evaluate ``m_g(n)`` in closed form from the coefficients of ``P_g``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    g = poly.genus
    total = 0
    for l, p in enumerate(poly.coeffs):
        s = n - 2 * g - l
        if s < 0 or not p:
            continue
        inner = 0
        for i in range(s + 1):
            ci = 2 ** i * binom(i + 3 * g - 3, i)
            for j in range(s - i + 1):
                k = s - i - j
                inner += (ci * 3 ** j * binom(j + n - 2 * g + 2, j)
                          * 6 ** k * binom(k + 5 * g - 5, k))
        total += p * inner
    return total


def render_rational(poly: GenusPolynomial) -> RationalForm:
    """Rational form of ``M_g(z)``; ``str()`` of the result is the canonical text."""
    g = poly.genus
    return RationalForm(
        genus=g,
        numerator=poly,
        z_power=2 * g,
        exponents=(3 * g - 2, 2, 5 * g - 3),
    )
