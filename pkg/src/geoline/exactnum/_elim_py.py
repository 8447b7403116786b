"""Mod-p row reduction, vectorized numpy backend.

Fallback twin of the compiled kernel in ``_elim.pyx``; same contract.
All arithmetic stays below 2**62 provided p < 2**31, so int64 never
overflows.
"""

from __future__ import annotations

import numpy as np


def rref_mod(a: np.ndarray, p: int) -> tuple[list[int], list[int]]:
    """In-place reduced row echelon form of ``a`` modulo ``p``.

    ``a`` must be a C-contiguous int64 array with entries in [0, p).
    Returns (pivot_cols, row_order); row_order[i] is the original index
    of the row sitting at position i after pivoting, so the first
    len(pivot_cols) entries name an independent row set of the input.
    """
    n, m = a.shape
    order = list(range(n))
    piv_cols: list[int] = []
    r = 0
    for c in range(m):
        if r == n:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            order[r], order[i] = order[i], order[r]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            a[rows] = (a[rows] - a[rows, c, None] * a[r]) % p
        piv_cols.append(c)
        r += 1
    return piv_cols, order
