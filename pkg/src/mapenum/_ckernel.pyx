# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""GMP-backed table kernels.

Same recurrences, loop order and symmetry folding as ``_pykernel``; the tables
live in one flat ``mpz_t`` array and are converted to Python ints at the end.
Within one edge layer every entry depends only on smaller layers, so a layer
can be filled in parallel (OpenMP) when ``threads > 1``.
"""

from libc.stdlib cimport malloc, calloc, free
from cpython.bytes cimport PyBytes_FromStringAndSize
from cython.parallel cimport prange, threadid

from .errors import ExactnessError

NAME = "compiled"


cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    ctypedef const __mpz_struct* mpz_srcptr
    void mpz_init(mpz_ptr) nogil
    void mpz_clear(mpz_ptr) nogil
    void mpz_set_ui(mpz_ptr, unsigned long) nogil
    void mpz_add(mpz_ptr, mpz_srcptr, mpz_srcptr) nogil
    void mpz_mul_ui(mpz_ptr, mpz_srcptr, unsigned long) nogil
    void mpz_addmul(mpz_ptr, mpz_srcptr, mpz_srcptr) nogil
    void mpz_addmul_ui(mpz_ptr, mpz_srcptr, unsigned long) nogil
    int mpz_divisible_ui_p(mpz_srcptr, unsigned long) nogil
    void mpz_divexact_ui(mpz_ptr, mpz_srcptr, unsigned long) nogil
    size_t mpz_sizeinbase(mpz_srcptr, int) nogil
    void* mpz_export(void*, size_t*, int, size_t, int, size_t, mpz_srcptr) nogil
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void*) nogil
    void mpz_mul(mpz_ptr, mpz_srcptr, mpz_srcptr) nogil
    int mpz_sgn(mpz_srcptr) nogil


cdef object _to_int(mpz_srcptr x):
    cdef size_t count = 0
    cdef size_t nbytes = (mpz_sizeinbase(x, 2) + 7) // 8
    cdef char* buf = <char*>malloc(nbytes + 1)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_export(buf, &count, -1, 1, 0, 0, x)
        return int.from_bytes(PyBytes_FromStringAndSize(buf, count), "little")
    finally:
        free(buf)


cdef int _from_int(mpz_ptr dst, object value) except -1:
    # non-negative Python int -> mpz
    cdef bytes raw = value.to_bytes((value.bit_length() + 7) // 8, "little")
    mpz_import(dst, len(raw), -1, 1, 0, 0, <const char*>raw)
    return 0


cdef class _MpzArray:
    """Owns ``size`` initialised mpz values."""
    cdef __mpz_struct* data
    cdef Py_ssize_t size

    def __cinit__(self, Py_ssize_t size):
        cdef Py_ssize_t t
        self.size = 0
        self.data = <__mpz_struct*>malloc((size if size > 0 else 1) * sizeof(__mpz_struct))
        if self.data == NULL:
            raise MemoryError()
        for t in range(size):
            mpz_init(&self.data[t])
        self.size = size

    def __dealloc__(self):
        cdef Py_ssize_t t
        if self.data != NULL:
            for t in range(self.size):
                mpz_clear(&self.data[t])
            free(self.data)


def edge_rows(int max_genus, int max_edges):
    """Return ``rows[g][n] = m_g(n)`` for ``g <= max_genus``, ``n <= max_edges``."""
    cdef int N = max_edges, G = max_genus
    cdef int g, n, i, j, k, l
    cdef unsigned long w
    cdef _MpzArray tab = _MpzArray((G + 1) * (N + 1))
    cdef _MpzArray scratch = _MpzArray(1)
    cdef __mpz_struct* m = tab.data
    cdef mpz_ptr acc = &scratch.data[0]
    if N >= 0 and G >= 0:
        mpz_set_ui(&m[0], 1)
    for n in range(1, N + 1):
        for g in range(0, min(G, n // 2) + 1):
            mpz_set_ui(acc, 0)
            mpz_addmul_ui(acc, &m[g * (N + 1) + n - 1], 8 * n - 4)
            if g >= 1 and n >= 2:
                mpz_addmul_ui(acc, &m[(g - 1) * (N + 1) + n - 2],
                              <unsigned long>(2 * n - 3) * (n - 1) * (2 * n - 1))
            for i in range(0, g // 2 + 1):
                j = g - i
                for k in range(2 * i, n - 2 - 2 * j + 1):
                    l = n - 2 - k
                    if i == j and k > l:
                        break
                    w = 3 * <unsigned long>(2 * k + 1) * (2 * l + 1)
                    if i != j or k != l:
                        w *= 2
                    # acc += w * m_i(k) * m_j(l), split to keep one temporary
                    mpz_set_ui(&m[g * (N + 1) + n], 0)
                    mpz_addmul(&m[g * (N + 1) + n], &m[i * (N + 1) + k], &m[j * (N + 1) + l])
                    mpz_addmul_ui(acc, &m[g * (N + 1) + n], w)
            if not mpz_divisible_ui_p(acc, n + 1):
                raise ExactnessError("edge recurrence", n + 1, (g, n))
            mpz_divexact_ui(&m[g * (N + 1) + n], acc, n + 1)
    return [[_to_int(&m[g * (N + 1) + n]) for n in range(N + 1)] for g in range(G + 1)]


cdef int _entry(__mpz_struct* m, const Py_ssize_t* off, int N, int g, int n, int f,
                mpz_ptr tmp) noexcept nogil:
    """Compute m_g(n, f) in place; return -1 if the division by n+1 is inexact."""
    cdef mpz_ptr acc = &m[off[g * (N + 1) + n] + f - 1]
    cdef int i, j, k, l, u, ulo, uhi, wa, wb, width
    cdef Py_ssize_t base, bi, bj
    cdef unsigned long w
    mpz_set_ui(acc, 0)
    if n - 1 >= 2 * g:
        base = off[g * (N + 1) + n - 1]
        width = n - 2 * g
        if f <= width:
            mpz_add(acc, acc, &m[base + f - 1])
        if f >= 2 and f <= width + 1:
            mpz_add(acc, acc, &m[base + f - 2])
        mpz_mul_ui(acc, acc, 4 * n - 2)
    if g >= 1 and n >= 2:
        width = n + 1 - 2 * g
        if f <= width:
            mpz_addmul_ui(acc, &m[off[(g - 1) * (N + 1) + n - 2] + f - 1],
                          <unsigned long>(2 * n - 3) * (n - 1) * (2 * n - 1))
    for i in range(0, g // 2 + 1):
        j = g - i
        for k in range(2 * i, n - 2 - 2 * j + 1):
            l = n - 2 - k
            if i == j and k > l:
                break
            wa = k + 1 - 2 * i
            wb = l + 1 - 2 * j
            ulo = f - wb if f - wb > 1 else 1
            uhi = wa if wa < f - 1 else f - 1
            if ulo > uhi:
                continue
            bi = off[i * (N + 1) + k]
            bj = off[j * (N + 1) + l]
            mpz_set_ui(tmp, 0)
            for u in range(ulo, uhi + 1):
                mpz_addmul(tmp, &m[bi + u - 1], &m[bj + f - u - 1])
            w = 3 * <unsigned long>(2 * k + 1) * (2 * l + 1)
            if i != j or k != l:
                w *= 2
            mpz_addmul_ui(acc, tmp, w)
    if not mpz_divisible_ui_p(acc, n + 1):
        return -1
    mpz_divexact_ui(acc, acc, n + 1)
    return 0


def edge_face_rows(int max_genus, int max_edges, int threads=1):
    """Return ``rows[g][n][f - 1] = m_g(n, f)``; rows with ``n < 2g`` are empty."""
    cdef int N = max_edges, G = max_genus
    cdef int g, n, f, t, ntasks, width
    cdef Py_ssize_t total = 0
    cdef Py_ssize_t* off
    cdef int* task_g
    cdef int* task_f
    cdef int* status
    if threads < 1:
        threads = 1
    off = <Py_ssize_t*>malloc((G + 1) * (N + 1) * sizeof(Py_ssize_t))
    task_g = <int*>malloc((N + 2) * sizeof(int) * (G + 1) + sizeof(int))
    task_f = <int*>malloc((N + 2) * sizeof(int) * (G + 1) + sizeof(int))
    status = <int*>calloc((N + 2) * (G + 1) + 1, sizeof(int))
    if off == NULL or task_g == NULL or task_f == NULL or status == NULL:
        free(off); free(task_g); free(task_f); free(status)
        raise MemoryError()
    try:
        for g in range(G + 1):
            for n in range(N + 1):
                if n >= 2 * g:
                    off[g * (N + 1) + n] = total
                    total += n + 1 - 2 * g
                else:
                    off[g * (N + 1) + n] = -1
        tab = _MpzArray(total)
        scratch = _MpzArray(threads)
        _fill(tab, scratch, off, task_g, task_f, status, G, N, threads)
        rows = []
        for g in range(G + 1):
            per_n = []
            for n in range(N + 1):
                if n < 2 * g:
                    per_n.append([])
                else:
                    width = n + 1 - 2 * g
                    per_n.append([_to_int(&tab.data[off[g * (N + 1) + n] + f])
                                  for f in range(width)])
            rows.append(per_n)
        return rows
    finally:
        free(off); free(task_g); free(task_f); free(status)


cdef _fill(_MpzArray tab, _MpzArray scratch, Py_ssize_t* off, int* task_g,
           int* task_f, int* status, int G, int N, int threads):
    cdef __mpz_struct* m = tab.data
    cdef __mpz_struct* tmps = scratch.data
    cdef int g, n, f, t, ntasks
    if N >= 0 and G >= 0:
        mpz_set_ui(&m[0], 1)
    for n in range(1, N + 1):
        ntasks = 0
        for g in range(0, min(G, n // 2) + 1):
            for f in range(1, n + 2 - 2 * g):
                task_g[ntasks] = g
                task_f[ntasks] = f
                ntasks += 1
        if threads == 1:
            for t in range(ntasks):
                if _entry(m, off, N, task_g[t], n, task_f[t], &tmps[0]) != 0:
                    raise ExactnessError("edge-face recurrence", n + 1,
                                         (task_g[t], n, task_f[t]))
        else:
            for t in prange(ntasks, nogil=True, num_threads=threads, schedule="dynamic"):
                status[t] = _entry(m, off, N, task_g[t], n, task_f[t], &tmps[threadid()])
            for t in range(ntasks):
                if status[t] != 0:
                    raise ExactnessError("edge-face recurrence", n + 1,
                                         (task_g[t], n, task_f[t]))


cdef _MpzArray _pascal = _MpzArray(1)
cdef int _pascal_rows = 0


cdef void _grow_pascal(int rows) except *:
    """Ensure binomials C(a, b) for a < rows are cached, row-major, width ``rows``."""
    global _pascal, _pascal_rows
    if rows <= _pascal_rows:
        return
    rows = max(rows, 2 * _pascal_rows)
    cdef _MpzArray tab = _MpzArray(rows * rows)
    cdef int a, b
    for a in range(rows):
        mpz_set_ui(&tab.data[a * rows], 1)
        for b in range(1, a + 1):
            mpz_add(&tab.data[a * rows + b], &tab.data[(a - 1) * rows + b - 1],
                    &tab.data[(a - 1) * rows + b])
    _pascal = tab
    _pascal_rows = rows


def accumulate_quotient(list out, quotient_row, int cells, int period, weight, terms):
    """Add lifted quotient counts into ``out``; see ``_pykernel.accumulate_quotient``."""
    cdef int top = len(quotient_row)
    cdef int width = len(out)
    cdef int A, B, lost, V, idx, lo, hi
    if top == 0 or not terms:
        return
    _grow_pascal(cells + 1)
    cdef int R = _pascal_rows
    cdef __mpz_struct* C = _pascal.data
    cdef _MpzArray q = _MpzArray(top)
    cdef _MpzArray acc = _MpzArray(width)
    cdef _MpzArray tmp = _MpzArray(2)
    cdef bint touched = False
    for V in range(top):
        _from_int(&q.data[V], quotient_row[V])
    for A, B, lost, w in terms:
        _from_int(&tmp.data[1], weight * w)
        lo = max(A, 1)
        hi = min(top, cells - B)
        for V in range(lo, hi + 1):
            if mpz_sgn(&q.data[V - 1]) == 0:
                continue
            idx = period * V - lost - 1
            if idx < 0 or idx >= width:
                raise IndexError(f"cover vertex index {idx + 1} outside 1..{width}")
            mpz_mul(&tmp.data[0], &q.data[V - 1], &C[V * R + A])
            mpz_mul(&tmp.data[0], &tmp.data[0], &C[(cells - V) * R + B])
            mpz_addmul(&acc.data[idx], &tmp.data[0], &tmp.data[1])
            touched = True
    if touched:
        for idx in range(width):
            if mpz_sgn(&acc.data[idx]):
                out[idx] += _to_int(&acc.data[idx])
