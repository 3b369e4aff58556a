"""Independent reference computations used by the tests.

Nothing here imports the recurrences under test.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial, gcd


def tutte_planar(n):
    """Rooted planar maps with n edges: 2 * 3^n * (2n)! / (n! (n+2)!)."""
    return 2 * 3 ** n * factorial(2 * n) // (factorial(n) * factorial(n + 2))


def _cycles(perm):
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if not seen[start]:
            count += 1
            x = start
            while not seen[x]:
                seen[x] = True
                x = perm[x]
    return count


def _transitive(sigma, alpha):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in (sigma[x], alpha[x]):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(sigma)


def _canonical(sigma, alpha):
    """Smallest relabelled encoding over all choices of root dart."""
    best = None
    D = len(sigma)
    for root in range(D):
        label = {root: 0}
        order = [root]
        i = 0
        while i < len(order):
            d = order[i]
            for nxt in (sigma[d], alpha[d]):
                if nxt not in label:
                    label[nxt] = len(order)
                    order.append(nxt)
            i += 1
        code = tuple((label[sigma[d]], label[alpha[d]]) for d in order)
        if best is None or code < best:
            best = code
    return best


@lru_cache(maxsize=None)
def brute_force_maps(n):
    """Enumerate all maps with n >= 1 edges as (sigma, alpha) on 2n darts.

    Returns ``(rooted, unrooted)``: dicts keyed by ``(g, v, f)``. Rooted counts
    are labelled counts divided by ``(2n - 1)!``; unrooted counts are the
    number of distinct canonical forms.
    """
    D = 2 * n
    alpha = tuple(d ^ 1 for d in range(D))
    labelled = Counter()
    classes = {}
    for sigma in permutations(range(D)):
        if not _transitive(sigma, alpha):
            continue
        v = _cycles(sigma)
        f = _cycles([sigma[alpha[d]] for d in range(D)])
        g = (2 - v + n - f) // 2
        labelled[(g, v, f)] += 1
        classes.setdefault((g, v, f), set()).add(_canonical(sigma, alpha))
    # fixing alpha leaves (2n-1)!! of the matchings; labelled/(2n-1)! = count/(2^(n-1)(n-1)!)
    norm = 2 ** (n - 1) * factorial(n - 1)
    rooted = {k: c // norm for k, c in labelled.items()}
    unrooted = {k: len(s) for k, s in classes.items()}
    return rooted, unrooted


def series_m(order):
    """Coefficients of m(z) = (1 - sqrt(1 - 12z)) / 6 up to z^order, via m = z + 3 m^2."""
    m = [0] * (order + 1)
    for _ in range(order + 1):
        sq = mul_series(m, m, order)
        m = [0] + [0] * order
        if order >= 1:
            m[1] = 1
        m = [a + 3 * b for a, b in zip(m, sq)]
    return m


def mul_series(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def compose_poly(coeffs, s, order):
    """coeffs[0] + coeffs[1] s + ... as a series, by Horner."""
    acc = [0] * (order + 1)
    for c in reversed(coeffs):
        acc = mul_series(acc, s, order)
        acc[0] += c
    return acc


def inverse_series(a, order):
    """1 / a for a series with a[0] = 1, integer coefficients."""
    assert a[0] == 1
    inv = [0] * (order + 1)
    inv[0] = 1
    for n in range(1, order + 1):
        inv[n] = -sum(a[k] * inv[n - k] for k in range(1, min(n, len(a) - 1) + 1))
    return inv


def expand_rational(genus, coeffs, order):
    """Power series of z^(2g) P(m) / ((1-2m)^(3g-2) (1-3m)^2 (1-6m)^(5g-3)) up to z^order."""
    m = series_m(order)
    one = [1] + [0] * order
    den = one
    for factor, power in ((2, 3 * genus - 2), (3, 2), (6, 5 * genus - 3)):
        base = [1 - 0] + [0] * order
        base = [x - factor * y for x, y in zip(one, m)]
        for _ in range(power):
            den = mul_series(den, base, order)
    num = compose_poly(coeffs, m, order)
    body = mul_series(num, inverse_series(den, order), order)
    return ([0] * (2 * genus) + body)[: order + 1]


def _order(x, ell):
    return ell // gcd(x, ell)


def brute_force_epimorphisms(gamma, orders, ell):
    """Count homs onto Z_ell with branch generators of exact order, by enumeration."""
    choices = [[x for x in range(ell) if _order(x, ell) == m] for m in orders]
    count = 0
    for handles in product(range(ell), repeat=2 * gamma):
        for branch in product(*choices):
            if sum(branch) % ell:
                continue
            g = ell
            for x in handles + branch:
                g = gcd(g, x)
            if g == 1:
                count += 1
    return count


def brute_force_signatures(g, ell):
    """All (gamma, sorted orders) satisfying Riemann-Hurwitz, within safe bounds."""
    from fractions import Fraction

    divs = [k for k in range(2, ell + 1) if ell % k == 0]
    rmax = 2 + (2 * g * ell) // (ell - 1) + 2
    out = set()
    for gamma in range(g + 1):
        for r in range(rmax + 1):
            for orders in combinations_with_replacement(divs, r):
                chi = ell * (2 - 2 * gamma - sum(1 - Fraction(1, m) for m in orders))
                if chi == 2 - 2 * g:
                    out.add((gamma, tuple(sorted(orders))))
    return out
