"""Derivation algebra of the 27-dimensional exceptional Jordan algebra.

The algebra is realized concretely: a derivation is a 27x27 rational
matrix D with D(x∘y) = Dx∘y + x∘Dy for the symmetrised product, and the
full solution space of that linear system is the compact exceptional
algebra of dimension 52.  The gradation structure used downstream is
recovered through a distinguished element rather than built from roots.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import sparse

from ..exactnum.matrix import RationalMatrix, kernel_basis
from ..exactnum.modp import certified_kernel
from ..liealg import LieAlgebra, Subspace, centralizer, killing
from .jordan import DIM, product_table
from .labeled import LabeledAlgebra

_EXPECTED_DIM = 52
_STAB_DIM = 36
_CENTRALIZER_DIM = 22


def leibniz_system() -> sparse.csr_matrix:
    """Integer constraint matrix whose kernel is the derivation space.

    Unknowns are the 27x27 matrix entries of D flattened row-major; one
    row per (basis pair, output component).  The product table lives in
    (1/2)Z, so every row is doubled to stay integral.
    """
    T = product_table()
    T2 = [[tuple(int(2 * x) for x in T[a][b]) for b in range(DIM)] for a in range(DIM)]
    # by_col[b][w] lists (u, coeff of e_w in 2 e_u∘e_b) over nonzero coeffs
    by_col = [[[] for _ in range(DIM)] for _ in range(DIM)]
    for u in range(DIM):
        for b in range(DIM):
            row = T2[u][b]
            for w in range(DIM):
                if row[w]:
                    by_col[b][w].append((u, row[w]))
    rows_i: list[int] = []
    cols_i: list[int] = []
    vals: list[int] = []
    nrow = 0
    for a in range(DIM):
        for b in range(a, DIM):
            prod = T2[a][b]
            for w in range(DIM):
                ent: dict[int, int] = {}
                for v in range(DIM):
                    if prod[v]:
                        key = w * DIM + v
                        ent[key] = ent.get(key, 0) + prod[v]
                for u, val in by_col[b][w]:
                    key = u * DIM + a
                    ent[key] = ent.get(key, 0) - val
                for u, val in by_col[a][w]:
                    key = u * DIM + b
                    ent[key] = ent.get(key, 0) - val
                live = [(k, v) for k, v in ent.items() if v]
                if not live:
                    continue
                for k, v in live:
                    rows_i.append(nrow)
                    cols_i.append(k)
                    vals.append(v)
                nrow += 1
    mat = sparse.coo_matrix(
        (np.array(vals, dtype=np.int64), (rows_i, cols_i)),
        shape=(nrow, DIM * DIM),
    )
    return mat.tocsr()


def _free_columns(V: np.ndarray, scale: int) -> list[int]:
    """Echelon shape check: one column per basis vector carrying its 1."""
    colnnz = np.count_nonzero(V, axis=0)
    free = []
    for k in range(V.shape[0]):
        hits = np.flatnonzero((V[k] == scale) & (colnnz == 1))
        if hits.size == 0:
            raise ArithmeticError("derivation kernel basis is not in echelon shape")
        free.append(int(hits[0]))
    if len(set(free)) != V.shape[0]:
        raise ArithmeticError("derivation kernel basis is not in echelon shape")
    return free


def _structure_constants(V: np.ndarray, free: list[int], scale: int) -> list:
    """Expand pairwise commutators of the scaled matrices in their own span.

    V holds the flattened scaled derivations.  The echelon shape makes
    coordinate extraction a lookup: the coefficient of basis vector k in a
    commutator is its entry at free[k], divided by the scale.  Every
    expansion is verified exactly before being trusted.
    """
    n = V.shape[0]
    mats = [V[k].reshape(DIM, DIM) for k in range(n)]
    vmax = int(np.abs(V).max())
    # commutator entries are bounded by 2*27*vmax^2; the expansion check
    # multiplies them by vmax again and sums 52 terms
    exact64 = (2 * DIM * vmax * vmax) * vmax * n < 2 ** 62
    if not exact64:
        mats = [m.astype(object) for m in mats]
        V = V.astype(object)
    zero = tuple(Fraction(0) for _ in range(n))
    c = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            com = mats[i] @ mats[j] - mats[j] @ mats[i]
            flat = com.reshape(-1)
            coeff = [int(flat[f]) for f in free]
            recon = np.zeros_like(V[0]) if exact64 else np.zeros(V.shape[1], dtype=object)
            for k, ck in enumerate(coeff):
                if ck:
                    recon = recon + ck * V[k]
            if not np.array_equal(recon, scale * flat):
                raise ArithmeticError("commutator left the derivation span")
            row = tuple(Fraction(ck, scale) for ck in coeff)
            c[i][j] = row
            c[j][i] = tuple(-x for x in row)
    return c


@lru_cache(maxsize=1)
def _kernel_data() -> tuple[np.ndarray, list[int], int]:
    vecs = certified_kernel(leibniz_system())
    if len(vecs) != _EXPECTED_DIM:
        raise ArithmeticError(
            f"derivation kernel has dimension {len(vecs)}, expected {_EXPECTED_DIM}"
        )
    scale = math.lcm(*(x.denominator for vec in vecs for x in vec))
    V = np.array([[int(x * scale) for x in vec] for vec in vecs], dtype=np.int64)
    free = _free_columns(V, scale)
    return V, free, scale


def derivation_matrices() -> list[RationalMatrix]:
    """Concrete 27x27 matrices realizing the abstract basis, in order.

    These are the integer-rescaled kernel vectors; the abstract structure
    constants are their literal commutator expansions, so matrix k here IS
    basis vector k of the built algebra.
    """
    V, _, _ = _kernel_data()
    return [RationalMatrix(DIM, DIM, [int(x) for x in row]) for row in V]


@lru_cache(maxsize=1)
def build_f4() -> LabeledAlgebra:
    """Compact exceptional algebra as the Jordan derivation kernel.

    Named element h1 lies in the orthocomplement part and has a
    22-dimensional centralizer; named subspaces are h (stabilizer of the
    first diagonal idempotent) and p (its orthocomplement under the
    Killing form).
    """
    V, free, scale = _kernel_data()
    c = _structure_constants(V, free, scale)
    g = LieAlgebra(tuple(f"d{k}" for k in range(_EXPECTED_DIM)), c)

    # stabilizer of E11 = diag(1,0,0): derivations killing basis column 0
    col0 = RationalMatrix.from_rows(
        [[Fraction(int(V[k][w * DIM + 0]), scale) for k in range(_EXPECTED_DIM)] for w in range(DIM)]
    )
    stab_vecs = kernel_basis(col0)
    if len(stab_vecs) != _STAB_DIM:
        raise ArithmeticError(
            f"idempotent stabilizer has dimension {len(stab_vecs)}, expected {_STAB_DIM}"
        )
    h_sub = Subspace(g, stab_vecs)

    G = killing(g)
    ortho_rows = RationalMatrix.from_rows([G.apply(s) for s in stab_vecs])
    p_vecs = kernel_basis(ortho_rows)
    if len(p_vecs) != _EXPECTED_DIM - _STAB_DIM:
        raise ArithmeticError("orthocomplement dimension is off")
    p_sub = Subspace(g, p_vecs)

    h1 = p_vecs[0]
    nxt = 1
    while centralizer(g, Subspace(g, [h1])).dim != _CENTRALIZER_DIM:
        if nxt >= len(p_vecs):
            raise ArithmeticError("no regular element found in the orthocomplement")
        h1 = tuple(a + b for a, b in zip(h1, p_vecs[nxt]))
        nxt += 1

    return LabeledAlgebra(g, {"h1": h1}, {"h": h_sub, "p": p_sub})
