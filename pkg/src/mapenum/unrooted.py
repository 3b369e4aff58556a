"""Unrooted map counts from rooted ones.

Each unrooted map ``M`` with ``e >= 1`` edges has ``2e / |Aut M|`` rootings,
so summing ``|Aut M|`` over rooted maps and dividing by ``2e`` counts
unrooted maps. The sum is split by the order ``ell`` of the automorphism.
Pairs (rooted map, automorphism of order ``ell``) correspond to rooted maps
on the quotient orbifold together with an order-preserving epimorphism of the
orbifold group onto ``Z_ell``:

* quotient vertices and faces may carry branch points of any order
  ``k | ell`` (a branched vertex lifts to ``ell / k`` vertices instead of
  ``ell``),
* order-2 branch points may also sit at edge midpoints, where the quotient
  has a semi-edge,
* a rooted quotient with ``e_q`` edges and ``s`` semi-edges is a rooted map
  with ``e_q`` edges plus ``s`` semi-edges inserted into its corners; there
  are ``C(2 e_q + s, s) * m_gamma(e_q, V)`` of them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial, gcd, prod

from ._backend import get_kernel
from .errors import ExactnessError, TableTooSmallError
from .rooted import EdgeVertexTable


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def totient(n: int) -> int:
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def ramanujan_sum(q: int, k: int) -> int:
    """Sum of ``exp(2 pi i k a / q)`` over ``a`` coprime to ``q``."""
    d = q // gcd(q, k)
    return mobius(d) * totient(q) // totient(d)


@dataclass(frozen=True, order=True)
class OrbifoldSignature:
    """Quotient of a surface by a cyclic group of order ``period``.

    ``branch_orders`` is sorted ascending; each order is at least 2 and
    divides ``period``.
    """

    quotient_genus: int
    period: int
    branch_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.quotient_genus < 0 or self.period < 1:
            raise ValueError(f"invalid signature {self}")
        for m in self.branch_orders:
            if m < 2 or self.period % m:
                raise ValueError(f"branch order {m} does not divide period {self.period}")
        object.__setattr__(self, "branch_orders", tuple(sorted(self.branch_orders)))

    def euler_characteristic(self) -> Fraction:
        """Euler characteristic of the covering surface, ``2 - 2g``."""
        orb = 2 - 2 * self.quotient_genus - sum(1 - Fraction(1, m) for m in self.branch_orders)
        return self.period * orb

    def satisfies_riemann_hurwitz(self, g: int) -> bool:
        return self.euler_characteristic() == 2 - 2 * g

    def __str__(self):
        orders = ", ".join(map(str, self.branch_orders)) or "-"
        return f"({self.quotient_genus}; {orders}) / Z_{self.period}"


@lru_cache(maxsize=None)
def _signatures(g, period):
    kinds = [k for k in divisors(period) if k > 1]
    # a branch point of order k uses period * (1 - 1/k) of the Euler budget
    costs = [period // k * (k - 1) for k in kinds]
    found = []

    def extend(gamma, idx, remaining, acc):
        if idx == len(kinds):
            if remaining == 0:
                found.append(OrbifoldSignature(gamma, period, tuple(acc)))
            return
        q = 0
        while q * costs[idx] <= remaining:
            extend(gamma, idx + 1, remaining - q * costs[idx], acc + [kinds[idx]] * q)
            q += 1

    for gamma in range(g + 1):
        budget = period * (2 - 2 * gamma) - (2 - 2 * g)
        if budget >= 0:
            extend(gamma, 0, budget, [])
    return tuple(sorted(found, key=lambda s: (s.quotient_genus, s.branch_orders)))


def enumerate_signatures(g: int, period: int) -> list[OrbifoldSignature]:
    """All cyclic quotient signatures of period ``period`` covered by genus ``g``.

    Ordered by quotient genus, then by branch orders lexicographically.
    """
    if g < 0 or period < 2:
        raise ValueError(f"need g >= 0 and period >= 2, got g={g}, period={period}")
    return list(_signatures(g, period))


@lru_cache(maxsize=None)
def epimorphism_count(sig: OrbifoldSignature) -> int:
    """Order-preserving epimorphisms from the orbifold group of ``sig`` onto ``Z_period``.

    Handle generators go anywhere, the generator around a branch point of
    order ``m`` must land on an element of order exactly ``m``, and the
    branch generators sum to zero. Homomorphisms into each subgroup ``Z_d``
    are counted with Ramanujan sums and surjectivity is restored by Moebius
    inversion over ``d | period``.
    """
    ell, gamma, orders = sig.period, sig.quotient_genus, sig.branch_orders
    total = 0
    for d in divisors(ell):
        mu = mobius(ell // d)
        if mu == 0 or any(d % m for m in orders):
            continue
        mult = Counter(orders).items()
        zero_sum = sum(prod(ramanujan_sum(m, k) ** c for m, c in mult) for k in range(d))
        total += mu * d ** (2 * gamma) * (zero_sum // d)
    return total


def _require(rooted, g, e):
    if g > rooted.max_genus or e > rooted.max_edges:
        raise TableTooSmallError(
            f"rooted table g<={rooted.max_genus}, e<={rooted.max_edges} "
            f"does not cover (g={g}, e={e})"
        )


@lru_cache(maxsize=None)
def _placement_terms(period, rest):
    """Ways to put branch points on quotient vertices and faces.

    ``rest`` is a sorted tuple of ``(order, count)``. Returns tuples
    ``(A, B, lost, weight)``: ``A`` points on vertices, ``B`` on faces,
    ``lost`` = vertices of the cover lost to branching, and ``weight`` the
    number of ways to assign orders to the chosen ``A`` vertices and ``B``
    faces. The total placement count for a quotient with ``V`` vertices and
    ``F`` faces is then ``weight * C(V, A) * C(F, B)``.
    """
    kinds = [k for k, _ in rest]
    totals = [c for _, c in rest]
    merged = Counter()
    for on_vertices in product(*(range(c + 1) for c in totals)):
        on_faces = [c - a for c, a in zip(totals, on_vertices)]
        A, B = sum(on_vertices), sum(on_faces)
        lost = sum(a * (period - period // k) for k, a in zip(kinds, on_vertices))
        ways = factorial(A) // prod(map(factorial, on_vertices))
        ways *= factorial(B) // prod(map(factorial, on_faces))
        merged[(A, B, lost)] += ways
    return tuple((A, B, lost, w) for (A, B, lost), w in sorted(merged.items()))


def quotient_contributions(g: int, e: int, period: int, rooted: EdgeVertexTable,
                           *, backend: str | None = None) -> list[int]:
    """Rooted maps with a chosen automorphism of order ``period``, by vertex count.

    Entry ``v - 1`` counts pairs (rooted genus-``g`` map with ``e`` edges and
    ``v`` vertices, automorphism of order ``period``) for
    ``v = 1 .. e + 1 - 2g``. ``period = 1`` gives the rooted counts.
    """
    if e < 2 * g or e < 0:
        return []
    _require(rooted, g, e)
    width = e + 1 - 2 * g
    if period == 1:
        return list(rooted.row(g, e))
    out = [0] * width
    if period < 1 or (2 * e) % period:
        return out
    accumulate = get_kernel(backend).accumulate_quotient
    darts = 2 * e // period
    for sig in enumerate_signatures(g, period):
        epi = epimorphism_count(sig)
        if not epi:
            continue
        gamma = sig.quotient_genus
        counts = Counter(sig.branch_orders)
        order_two = counts.pop(2, 0)
        for s in range(darts % 2, min(order_two, darts) + 1, 2):
            eq = (darts - s) // 2
            if eq < 2 * gamma:
                continue
            cells = eq + 2 - 2 * gamma
            rest = dict(counts)
            if order_two - s:
                rest[2] = order_two - s
            if sum(rest.values()) > cells:
                continue
            terms = _placement_terms(period, tuple(sorted(rest.items())))
            accumulate(out, rooted.row(gamma, eq), cells, period,
                       epi * comb(darts, s), terms)
    return out


def quotient_contribution(g: int, e: int, v: int, period: int, rooted: EdgeVertexTable) -> int:
    """Single-cell form of :func:`quotient_contributions`."""
    row = quotient_contributions(g, e, period, rooted)
    return row[v - 1] if 1 <= v <= len(row) else 0


@dataclass(frozen=True)
class UnrootedTable:
    """``u_g(e, v)`` for ``g <= max_genus``, ``2g <= e <= max_edges``.

    ``rows[g][e]`` holds ``u_g(e, 1) .. u_g(e, e + 1 - 2g)`` and is empty
    when ``e < 2g``.
    """

    max_genus: int
    max_edges: int
    rows: tuple[tuple[tuple[int, ...], ...], ...]

    def row(self, g: int, e: int) -> tuple[int, ...]:
        if not (0 <= g <= self.max_genus and 0 <= e <= self.max_edges):
            raise IndexError(
                f"(g={g}, e={e}) outside table bounds g<={self.max_genus}, e<={self.max_edges}"
            )
        return self.rows[g][e]

    def lookup(self, g: int, e: int, v: int) -> int:
        row = self.row(g, e)
        return row[v - 1] if 1 <= v <= len(row) else 0

    def row_sum(self, g: int, e: int) -> int:
        return sum(self.row(g, e))


def unrooted_row(g: int, e: int, rooted: EdgeVertexTable,
                 *, backend: str | None = None) -> tuple[int, ...]:
    """``u_g(e, v)`` for ``v = 1 .. e + 1 - 2g``."""
    if e < 2 * g:
        return ()
    _require(rooted, g, e)
    if e == 0:
        return (1,)
    total = [0] * (e + 1 - 2 * g)
    for period in divisors(2 * e):
        for idx, c in enumerate(quotient_contributions(g, e, period, rooted, backend=backend)):
            total[idx] += c
    row = []
    for idx, c in enumerate(total):
        q, r = divmod(c, 2 * e)
        if r:
            raise ExactnessError("quotient sum", 2 * e, (g, e, idx + 1))
        row.append(q)
    return tuple(row)


def build_unrooted_table(rooted: EdgeVertexTable, max_genus: int | None = None,
                         *, backend: str | None = None) -> UnrootedTable:
    """Unrooted counts for every ``(g, e)`` the rooted table covers.

    The rooted table must be vertex-indexed (see
    :func:`~mapenum.rooted.reinterpret_as_vertices`).
    """
    if rooted.axis_meaning != "vertices":
        raise ValueError("build_unrooted_table needs a vertex-indexed rooted table")
    G = rooted.max_genus if max_genus is None else min(max_genus, rooted.max_genus)
    E = rooted.max_edges
    rows = tuple(
        tuple(unrooted_row(g, e, rooted, backend=backend) for e in range(E + 1)) for g in range(G + 1)
    )
    return UnrootedTable(G, E, rows)
