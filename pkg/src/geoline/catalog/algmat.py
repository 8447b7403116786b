"""Matrices over small scalar algebras, and structure-constant assembly.

The unitary and quaternionic builders both realify matrix algebras over
an associative scalar algebra (C or H).  A scalar is a coordinate tuple
over the algebra's real basis; a matrix is a nested tuple of scalars.
Structure constants are then assembled generically: flatten the basis
matrices, invert a pivot block once, and express each commutator in the
basis with an exact reproduction check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from ..exactnum import RationalMatrix, inverse, rref
from ..exactnum.matrix import _frac


class ScalarAlgebra:
    """Associative unital algebra over Q with conjugation on the basis.

    table[i][j] is the coordinate tuple of b_i * b_j; conj_signs[i] gives
    conj(b_i) = sign * b_i (basis elements are real or imaginary units).
    """

    def __init__(self, name: str, table, conj_signs):
        self.name = name
        self.dim = len(conj_signs)
        self.table = tuple(tuple(tuple(_frac(x) for x in cell) for cell in row)
                           for row in table)
        self.conj_signs = tuple(int(s) for s in conj_signs)
        self.unit = tuple(Fraction(int(i == 0)) for i in range(self.dim))

    def mul(self, a: Sequence, b: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if not bj:
                    continue
                f = ai * bj
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] += f * t
        return tuple(out)

    def conj(self, a: Sequence) -> tuple:
        return tuple(s * x for s, x in zip(self.conj_signs, a))

    def scalar(self, *coords) -> tuple:
        out = [Fraction(0)] * self.dim
        for i, c in enumerate(coords):
            out[i] = _frac(c)
        return tuple(out)


REALS = ScalarAlgebra("R", [[(1,)]], [1])

COMPLEX = ScalarAlgebra(
    "C",
    [[(1, 0), (0, 1)],
     [(0, 1), (-1, 0)]],
    [1, -1])

# basis 1, i, j, k
QUATERNIONS = ScalarAlgebra(
    "H",
    [[(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)],
     [(0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)],
     [(0, 0, 1, 0), (0, 0, 0, -1), (-1, 0, 0, 0), (0, 1, 0, 0)],
     [(0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0), (-1, 0, 0, 0)]],
    [1, -1, -1, -1])


def kmat(K: ScalarAlgebra, n: int, entries=None):
    """n x n matrix of K-scalars; entries is {(i, j): scalar}."""
    zero = tuple(Fraction(0) for _ in range(K.dim))
    m = [[zero] * n for _ in range(n)]
    for (i, j), val in (entries or {}).items():
        m[i][j] = tuple(_frac(x) for x in val)
    return tuple(tuple(row) for row in m)


def kmat_add(K, A, B):
    return tuple(tuple(tuple(x + y for x, y in zip(a, b))
                       for a, b in zip(ra, rb))
                 for ra, rb in zip(A, B))


def kmat_scale(K, s, A):
    s = _frac(s)
    return tuple(tuple(tuple(s * x for x in a) for a in ra) for ra in A)


def kmat_mul(K, A, B):
    n = len(A)
    zero = tuple(Fraction(0) for _ in range(K.dim))
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for t in range(n):
                a = A[i][t]
                if any(a):
                    b = B[t][j]
                    if any(b):
                        acc = tuple(x + y for x, y in zip(acc, K.mul(a, b)))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def kmat_commutator(K, A, B):
    return kmat_add(K, kmat_mul(K, A, B), kmat_scale(K, -1, kmat_mul(K, B, A)))


def kmat_conj_transpose(K, A):
    n = len(A)
    return tuple(tuple(K.conj(A[j][i]) for j in range(n)) for i in range(n))


def kmat_flatten(K, A) -> tuple:
    return tuple(x for row in A for cell in row for x in cell)


def eta_anti_hermitian_residual(K, A, eta: Sequence[int]):
    """A* eta + eta A, with eta a real diagonal given by signs."""
    n = len(A)
    star = kmat_conj_transpose(K, A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            left = tuple(_frac(eta[j]) * x for x in star[i][j])
            right = tuple(_frac(eta[i]) * x for x in A[i][j])
            row.append(tuple(a + b for a, b in zip(left, right)))
        out.append(tuple(row))
    return tuple(out)


def kmat_is_zero(A) -> bool:
    return all(not x for row in A for cell in row for x in cell)


class FlatBasis:
    """Coordinate solver for a list of independent flattened vectors."""

    def __init__(self, flats: Sequence[Sequence]):
        self.flats = [tuple(_frac(x) for x in f) for f in flats]
        self.dim = len(self.flats)
        B = RationalMatrix.from_rows(self.flats)
        _, piv = rref(B)
        if len(piv) != self.dim:
            raise ValueError("basis vectors are dependent")
        self.pivots = piv
        block = RationalMatrix.from_rows(
            [[f[c] for c in piv] for f in self.flats])
        self.block_inv = inverse(block)

    def coords(self, flat: Sequence) -> tuple:
        """Exact coordinates; raises if the vector is outside the span."""
        flat = [_frac(x) for x in flat]
        sub = [flat[c] for c in self.pivots]
        coords = self.block_inv.transpose().apply(sub)
        recon = [Fraction(0)] * len(flat)
        for cf, bf in zip(coords, self.flats):
            if cf:
                for t, x in enumerate(bf):
                    if x:
                        recon[t] += cf * x
        if recon != flat:
            raise ValueError("vector is not in the span of the basis")
        return tuple(coords)


def algebra_from_kmats(K: ScalarAlgebra, mats: Sequence, labels: Sequence[str]):
    """LieAlgebra with the matrix commutator bracket on the given basis."""
    from ..liealg import LieAlgebra
    flats = [kmat_flatten(K, m) for m in mats]
    c = structure_constants(
        flats,
        lambda i, j: kmat_flatten(K, kmat_commutator(K, mats[i], mats[j])))
    return LieAlgebra(labels, c)


def structure_constants(flats: Sequence[Sequence],
                        bracket_flat: Callable[[int, int], Sequence]) -> list:
    """Dense c[i][j] coordinate table from pairwise brackets.

    bracket_flat(i, j) returns the flattened bracket of basis elements
    i, j for i < j; antisymmetry fills the rest.  Every bracket is
    re-expanded in the basis and compared exactly inside FlatBasis.
    """
    fb = FlatBasis(flats)
    n = fb.dim
    zero = tuple(Fraction(0) for _ in range(n))
    c = [[zero for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            co = fb.coords(bracket_flat(i, j))
            c[i][j] = co
            c[j][i] = tuple(-x for x in co)
    return c
