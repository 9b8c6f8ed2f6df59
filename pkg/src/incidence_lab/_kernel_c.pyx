# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset kernel: the hot path for grid subset searches.

Same contract as _kernel_py.subset_stats.  The dispatcher only routes here
after bounds-checking coordinates into int64-safe range (|coord| < 2^30),
so all arithmetic below fits C long long; direction keys pack the reduced
(dx, dy) into one 64-bit word for a branch-free dedupe scan.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

cdef unsigned long long _OFF = 1ULL << 31


cdef long long _gcd_ll(long long a, long long b) noexcept nogil:
    cdef long long t
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _core(const long long* xs, const long long* ys, Py_ssize_t n,
               long long* best_out) noexcept nogil:
    """Fills best_out; returns 1 if collinear, 0 if not, -1 on alloc failure."""
    cdef Py_ssize_t i, j, k, m
    cdef long long dx, dy, g, best = 0
    cdef unsigned long long key
    cdef bint fresh
    cdef unsigned long long* keys = <unsigned long long*> malloc(
        (n if n > 1 else 1) * sizeof(unsigned long long))
    if keys == NULL:
        return -1
    for i in range(n):
        m = 0
        for j in range(n):
            if j == i:
                continue
            dx = xs[j] - xs[i]
            dy = ys[j] - ys[i]
            if dx == 0 and dy == 0:
                continue  # duplicate input point; contract says none
            g = _gcd_ll(dx, dy)
            dx = dx // g
            dy = dy // g
            if dx < 0 or (dx == 0 and dy < 0):
                dx = -dx
                dy = -dy
            key = ((<unsigned long long> (dx + (<long long> _OFF))) << 32) \
                | (<unsigned long long> (dy + (<long long> _OFF)) & 0xffffffffULL)
            fresh = 1
            for k in range(m):
                if keys[k] == key:
                    fresh = 0
                    break
            if fresh:
                keys[m] = key
                m += 1
        if i == 0 and m == 1 and n >= 2:
            free(keys)
            best_out[0] = 1
            return 1
        if m > best:
            best = m
    free(keys)
    best_out[0] = best
    return 0


def subset_stats(xs, ys):
    """(max_degree, collinear) for distinct integer points (w = 1)."""
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t i
    cdef long long best = 0
    cdef int status
    if n < 2:
        return 0, True
    cdef long long* cx = <long long*> malloc(n * sizeof(long long))
    cdef long long* cy = <long long*> malloc(n * sizeof(long long))
    if cx == NULL or cy == NULL:
        free(cx)
        free(cy)
        raise MemoryError()
    try:
        for i in range(n):
            cx[i] = xs[i]
            cy[i] = ys[i]
        with nogil:
            status = _core(cx, cy, n, &best)
    finally:
        free(cx)
        free(cy)
    if status < 0:
        raise MemoryError()
    return int(best), status == 1
