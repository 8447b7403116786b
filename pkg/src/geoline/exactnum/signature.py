"""Exact Sylvester signature of symmetric rational matrices."""

from __future__ import annotations

from fractions import Fraction

from .matrix import RationalMatrix


def signature(S: RationalMatrix) -> tuple[int, int, int]:
    """(positive, negative, null) inertia of a symmetric matrix.

    Symmetric congruence elimination with full diagonal pivot search;
    when every remaining diagonal entry vanishes but an off-diagonal
    survives, a hyperbolic 2x2 block is split off, contributing one
    positive and one negative direction.
    """
    if not S.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = S.rows
    a = S.to_rows()
    active = list(range(n))
    pos = neg = 0

    def eliminate(pivots: list[int], others: list[int]):
        # congruence: clear rows and columns of `others` against the
        # invertible principal block on `pivots`
        if len(pivots) == 1:
            i = pivots[0]
            d = a[i][i]
            for k in others:
                if a[k][i]:
                    f = a[k][i] / d
                    for j in range(n):
                        a[k][j] -= f * a[i][j]
                    for j in range(n):
                        a[j][k] -= f * a[j][i]
        else:
            i, j = pivots
            b = a[i][j]
            for k in others:
                fi = a[k][j] / b
                fj = a[k][i] / b
                if fi or fj:
                    for t in range(n):
                        a[k][t] -= fi * a[i][t] + fj * a[j][t]
                    for t in range(n):
                        a[t][k] -= fi * a[t][i] + fj * a[t][j]

    while active:
        diag = [(abs(a[i][i]), i) for i in active if a[i][i]]
        if diag:
            _, i = max(diag)
            rest = [k for k in active if k != i]
            eliminate([i], rest)
            if a[i][i] > 0:
                pos += 1
            else:
                neg += 1
            active = rest
            continue
        off = next(((i, j) for i in active for j in active
                    if j > i and a[i][j]), None)
        if off is None:
            break
        i, j = off
        rest = [k for k in active if k not in (i, j)]
        eliminate([i, j], rest)
        pos += 1
        neg += 1
        active = rest
    return pos, neg, len(active)
