"""Lie algebras as dense rational structure-constant tensors.

The bracket is [b_i, b_j] = sum_k c[i][j][k] b_k over a named basis.
Validation, Killing forms and Jacobi checks run on integer-scaled
tensors with numpy fast paths that are exact by construction: either
the int64 bound is proven before use, or the check drops to object
dtype (arbitrary precision) instead of floats.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exactnum import RationalMatrix, kernel_basis, rank
from .exactnum.matrix import _frac

_INT64_SAFE = 2 ** 62


class LieAlgebra:
    """Immutable structure-constant table with labeled basis."""

    __slots__ = ("dim", "basis_labels", "c", "_scaled")

    def __init__(self, basis_labels: Sequence[str], c):
        dim = len(basis_labels)
        table = tuple(
            tuple(tuple(_frac(c[i][j][k]) for k in range(dim))
                  for j in range(dim))
            for i in range(dim))
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis_labels", tuple(basis_labels))
        object.__setattr__(self, "c", table)
        object.__setattr__(self, "_scaled", None)

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """Coordinates of [x, y] for coordinate vectors x, y."""
        n = self.dim
        x = [_frac(v) for v in x]
        y = [_frac(v) for v in y]
        if len(x) != n or len(y) != n:
            raise ValueError("dimension mismatch")
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            ci = self.c[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                f = xi * yj
                for k, cc in enumerate(ci[j]):
                    if cc:
                        out[k] += f * cc
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def scaled_tensor(self) -> tuple[np.ndarray, int]:
        """(integer tensor as object array, common denominator)."""
        if self._scaled is None:
            den = 1
            for plane in self.c:
                for row in plane:
                    for v in row:
                        den = math.lcm(den, v.denominator)
            arr = np.array(
                [[[int(v * den) for v in row] for row in plane]
                 for plane in self.c], dtype=object)
            object.__setattr__(self, "_scaled", (arr, den))
        return self._scaled

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim})"


class Subspace:
    """Subspace of a LieAlgebra given by independent coordinate vectors."""

    __slots__ = ("parent", "basis", "_red")

    def __init__(self, parent: LieAlgebra, basis: Sequence[Sequence]):
        vecs = tuple(tuple(_frac(v) for v in b) for b in basis)
        for b in vecs:
            if len(b) != parent.dim:
                raise ValueError("basis vector of wrong length")
        if vecs and rank(RationalMatrix.from_rows(vecs)) != len(vecs):
            raise ValueError("subspace basis is linearly dependent")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "basis", vecs)
        object.__setattr__(self, "_red", None)

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _reducer(self):
        if self._red is not None:
            return self._red
        reduced: list[list[Fraction]] = []
        pivots: list[int] = []
        for vec in self.basis:
            v = list(vec)
            for prow, pcol in zip(reduced, pivots):
                if v[pcol]:
                    f = v[pcol]
                    v = [a - f * b for a, b in zip(v, prow)]
            pivot = next(j for j, x in enumerate(v) if x)
            inv = 1 / v[pivot]
            reduced.append([x * inv for x in v])
            pivots.append(pivot)
        object.__setattr__(self, "_red", (reduced, pivots))
        return reduced, pivots

    def contains(self, vec: Sequence) -> bool:
        v = [_frac(x) for x in vec]
        reduced, pivots = self._reducer()
        for prow, pcol in zip(reduced, pivots):
            if v[pcol]:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
        return all(x == 0 for x in v)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.parent.dim})"


def _int64_tensor(arr: np.ndarray) -> np.ndarray | None:
    hi = max((abs(int(v)) for v in arr.flat), default=0)
    if hi and 3 * arr.shape[0] * hi * hi >= _INT64_SAFE:
        return None
    return arr.astype(np.int64)


def validate(g: LieAlgebra) -> str:
    """"ok", or a description naming the first violating triple."""
    n = g.dim
    c = g.c
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if c[i][j][k] != -c[j][i][k]:
                    return (f"antisymmetry violation at ({i}, {j}, {k}): "
                            f"[{g.basis_labels[i]}, {g.basis_labels[j]}]")
    arr, _ = g.scaled_tensor()
    C = _int64_tensor(arr)
    if C is None:
        C = arr  # object dtype: exact, slower
    T = np.einsum("ijm,mkl->ijkl", C, C)
    J = T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3)
    bad = np.argwhere(J != 0)
    if bad.size:
        i, j, k, _ = (int(v) for v in bad[0])
        return (f"jacobi violation at ({i}, {j}, {k}): "
                f"[[{g.basis_labels[i]}, {g.basis_labels[j]}], {g.basis_labels[k]}] + cyclic != 0")
    return "ok"


def adjoint(g: LieAlgebra, x: Sequence) -> RationalMatrix:
    """Matrix of y -> [x, y] in the basis of g."""
    n = g.dim
    x = [_frac(v) for v in x]
    if len(x) != n:
        raise ValueError("dimension mismatch")
    M = [[Fraction(0)] * n for _ in range(n)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        ci = g.c[i]
        for j in range(n):
            for k, cc in enumerate(ci[j]):
                if cc:
                    M[k][j] += xi * cc
    return RationalMatrix.from_rows(M)


def killing(g: LieAlgebra) -> RationalMatrix:
    """Killing form B(x, y) = trace(ad x ad y) on the basis, exact."""
    arr, den = g.scaled_tensor()
    n = g.dim
    hi = max((abs(int(v)) for v in arr.flat), default=0)
    if hi and n * n * hi * hi < _INT64_SAFE:
        C = arr.astype(np.int64)
        B = np.einsum("iab,jba->ij", C, C)
    else:
        B = np.einsum("iab,jba->ij", arr, arr)
    d2 = den * den
    return RationalMatrix(n, n, [Fraction(int(v), d2) for v in B.flat])


def centralizer(g: LieAlgebra, S: Subspace) -> Subspace:
    """{x in g : [x, s] = 0 for all s in S}, one stacked kernel."""
    if S.parent is not g:
        raise ValueError("subspace belongs to a different algebra")
    n = g.dim
    rows = []
    for s in S.basis:
        # row for output coordinate k: sum_i x_i (sum_j c[i][j][k] s_j)
        coef = [[Fraction(0)] * n for _ in range(n)]
        for j, sj in enumerate(s):
            if not sj:
                continue
            for i in range(n):
                cij = g.c[i][j]
                for k, cc in enumerate(cij):
                    if cc:
                        coef[k][i] += sj * cc
        rows.extend(coef)
    if not rows:
        return Subspace(g, [g.basis_vector(i) for i in range(n)])
    return Subspace(g, kernel_basis(RationalMatrix.from_rows(rows)))


def center(g: LieAlgebra) -> Subspace:
    """Centralizer of the whole algebra in itself."""
    full = Subspace(g, [g.basis_vector(i) for i in range(g.dim)])
    return centralizer(g, full)


def subalgebra_closure_check(g: LieAlgebra, S: Subspace) -> bool:
    """True iff [S, S] lands back in S, checked exactly pair by pair."""
    if S.parent is not g:
        raise ValueError("subspace belongs to a different algebra")
    for a in range(S.dim):
        for b in range(a + 1, S.dim):
            if not S.contains(g.bracket(S.basis[a], S.basis[b])):
                return False
    return True
