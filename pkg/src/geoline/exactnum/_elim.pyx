# cython: language_level=3, boundscheck=False, wraparound=False
"""Mod-p row reduction, compiled backend.

Same contract as the pure twin in ``_elim_py``: reduce an int64 matrix
to reduced row echelon form modulo p in place, returning pivot columns
and the row permutation.  p < 2**31 keeps every product below 2**62.
"""

from libc.stdint cimport int64_t


cdef inline int64_t modpow(int64_t base, int64_t exp, int64_t p) noexcept:
    cdef int64_t acc = 1
    base %= p
    while exp > 0:
        if exp & 1:
            acc = (acc * base) % p
        base = (base * base) % p
        exp >>= 1
    return acc


def rref_mod(int64_t[:, ::1] a, int64_t p):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k, sel
    cdef int64_t inv, f, tmp
    order = list(range(n))
    piv_cols = []
    for c in range(m):
        if r == n:
            break
        sel = -1
        for i in range(r, n):
            if a[i, c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for k in range(m):
                tmp = a[r, k]
                a[r, k] = a[sel, k]
                a[sel, k] = tmp
            order[r], order[sel] = order[sel], order[r]
        inv = modpow(a[r, c], p - 2, p)
        for k in range(c, m):
            a[r, k] = (a[r, k] * inv) % p
        for i in range(n):
            if i == r:
                continue
            f = a[i, c]
            if f == 0:
                continue
            for k in range(c, m):
                a[i, k] = (a[i, k] - f * a[r, k]) % p
                if a[i, k] < 0:
                    a[i, k] += p
        piv_cols.append(c)
        r += 1
    return piv_cols, order
