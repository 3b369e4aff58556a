"""Pure-Python table kernels.

Reference implementation of the two rooted-map recurrences. The compiled
kernel in ``_ckernel.pyx`` computes the same tables with the same summation
order and must agree with this module bit for bit.

Both kernels use the (i, k, u) <-> (j, l, v) symmetry of the convolution
term: only pairs with (i, k) <= (j, l) are visited and off-diagonal pairs are
weighted twice.
"""

from math import comb
from operator import mul

from .errors import ExactnessError

NAME = "python"


def edge_rows(max_genus, max_edges):
    """Return ``rows[g][n] = m_g(n)`` for ``g <= max_genus``, ``n <= max_edges``."""
    N = max_edges
    rows = [[0] * (N + 1) for _ in range(max_genus + 1)]
    if N >= 0 and max_genus >= 0:
        rows[0][0] = 1
    for n in range(1, N + 1):
        for g in range(0, min(max_genus, n // 2) + 1):
            acc = (8 * n - 4) * rows[g][n - 1]
            if g >= 1 and n >= 2:
                acc += (2 * n - 3) * (n - 1) * (2 * n - 1) * rows[g - 1][n - 2]
            conv = 0
            for i in range(0, g // 2 + 1):
                j = g - i
                ri, rj = rows[i], rows[j]
                for k in range(2 * i, n - 2 - 2 * j + 1):
                    l = n - 2 - k
                    if i == j and k > l:
                        break
                    w = (2 * k + 1) * (2 * l + 1)
                    if i != j or k != l:
                        w *= 2
                    conv += w * ri[k] * rj[l]
            acc += 3 * conv
            q, r = divmod(acc, n + 1)
            if r:
                raise ExactnessError("edge recurrence", n + 1, (g, n))
            rows[g][n] = q
    return rows


def _bivariate_entry(rows, g, n, f):
    acc = 0
    if n - 1 >= 2 * g:
        prev = rows[g][n - 1]
        width = len(prev)
        if f <= width:
            acc += prev[f - 1]
        if 2 <= f <= width + 1:
            acc += prev[f - 2]
        acc *= 4 * n - 2
    if g >= 1 and n >= 2:
        lower = rows[g - 1][n - 2]
        if f <= len(lower):
            acc += (2 * n - 3) * (n - 1) * (2 * n - 1) * lower[f - 1]
    conv = 0
    for i in range(0, g // 2 + 1):
        j = g - i
        for k in range(2 * i, n - 2 - 2 * j + 1):
            l = n - 2 - k
            if i == j and k > l:
                break
            a = rows[i][k]
            b = rows[j][l]
            # u runs over faces of the left factor, f - u over the right one
            ulo = max(1, f - len(b))
            uhi = min(len(a), f - 1)
            if ulo > uhi:
                continue
            t = sum(map(mul, a[ulo - 1:uhi], reversed(b[f - uhi - 1:f - ulo])))
            w = 3 * (2 * k + 1) * (2 * l + 1)
            if i != j or k != l:
                w *= 2
            conv += w * t
    acc += conv
    q, r = divmod(acc, n + 1)
    if r:
        raise ExactnessError("edge-face recurrence", n + 1, (g, n, f))
    return q


def edge_face_rows(max_genus, max_edges, threads=1):
    """Return ``rows[g][n][f - 1] = m_g(n, f)``; rows with ``n < 2g`` are empty.

    ``threads`` is accepted for signature compatibility with the compiled
    kernel and ignored.
    """
    N = max_edges
    rows = [[[] for _ in range(N + 1)] for _ in range(max_genus + 1)]
    if N >= 0 and max_genus >= 0:
        rows[0][0] = [1]
    for n in range(1, N + 1):
        for g in range(0, min(max_genus, n // 2) + 1):
            rows[g][n] = [
                _bivariate_entry(rows, g, n, f) for f in range(1, n + 2 - 2 * g)
            ]
    return rows


def accumulate_quotient(out, quotient_row, cells, period, weight, terms):
    """Add lifted quotient counts into ``out`` (indexed by cover vertices - 1).

    For each placement term ``(A, B, lost, w)`` and each quotient vertex count
    ``V`` (so ``cells - V`` faces), adds
    ``weight * w * m(V) * C(V, A) * C(cells - V, B)`` at ``period * V - lost``.
    """
    top = len(quotient_row)
    for A, B, lost, w in terms:
        scale = weight * w
        for V in range(max(A, 1), min(top, cells - B) + 1):
            mq = quotient_row[V - 1]
            if mq:
                out[period * V - lost - 1] += scale * mq * comb(V, A) * comb(cells - V, B)
