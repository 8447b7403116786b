"""Quaternionic unitary algebras sp(n+1) and sp(1, n), realified.

Matrices are (n+1) x (n+1) over H, anti-Hermitian for eta = identity
or diag(1, -1, ..., -1).  The basis mirrors the complex case with
quaternionic multiplicity: the plane part carries imaginary-quaternion
triples (h0, E1, E2 carriers) plus the real rotation h1, the block
part is sp(n-1), and the mixing part has two H^{n-1} columns.

(x1, x2, X1, X2) with x1, x2 imaginary quaternions is the matrix
[[x1, eps x2, -eps X1^*], [x2, -x1, -X2^*], [X1, X2, 0]]; the x1 and
x2 coordinates sit on the E1 and E2 basis triples, so the embedding
is again an index map.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactnum.matrix import _frac
from ..liealg import Subspace
from .algmat import (
    QUATERNIONS,
    algebra_from_kmats,
    eta_anti_hermitian_residual,
    kmat,
    kmat_is_zero,
)
from .labeled import LabeledAlgebra

_UNITS = ("1", "i", "j", "k")


def _params(p: int, q: int):
    if p + q < 2:
        raise ValueError("need at least two quaternionic dimensions")
    if q == 0:
        eps = 1
    elif p == 1:
        eps = -1
    else:
        raise ValueError("only definite (p, 0) or Lorentz-type (1, q) forms")
    return eps, p + q


def _layout(p: int, q: int) -> dict:
    eps, N = _params(p, q)
    n = N - 1
    block = (n - 1) * (2 * (n - 1) + 1)
    e1 = 4 + block
    return {
        "eps": eps, "N": N, "n": n,
        "h0": 0, "h1": 3,
        "block_start": 4, "block_count": block,
        "E1": e1, "E2": e1 + 3, "V": e1 + 6,
        "dim": N * (2 * N + 1),
    }


def _q(idx: int):
    return QUATERNIONS.scalar(*[int(t == idx) for t in range(4)])


def _basis(p: int, q: int):
    lay = _layout(p, q)
    eps, N, n = lay["eps"], lay["N"], lay["n"]
    K = QUATERNIONS
    mats = []
    labels = []
    for u in (1, 2, 3):
        mats.append(kmat(K, N, {(0, 0): _q(u), (1, 1): _q(u)}))
        labels.append(f"h0{_UNITS[u]}")
    mats.append(kmat(K, N, {(0, 1): K.scalar(-eps), (1, 0): K.scalar(1)}))
    labels.append("h1")
    for t in range(n - 1):
        for u in (1, 2, 3):
            mats.append(kmat(K, N, {(2 + t, 2 + t): _q(u)}))
            labels.append(f"D{t}{_UNITS[u]}")
    for a in range(2, N):
        for b in range(a + 1, N):
            for u in range(4):
                ent = {(a, b): _q(u), (b, a): tuple(-x for x in K.conj(_q(u)))}
                mats.append(kmat(K, N, ent))
                labels.append(f"S{a - 2},{b - 2}{_UNITS[u]}")
    for u in (1, 2, 3):
        ent = {(0, 0): _q(u), (1, 1): tuple(-x for x in _q(u))}
        mats.append(kmat(K, N, ent))
        labels.append(f"E1{_UNITS[u]}")
    for u in (1, 2, 3):
        ent = {(0, 1): tuple(eps * x for x in _q(u)), (1, 0): _q(u)}
        mats.append(kmat(K, N, ent))
        labels.append(f"E2{_UNITS[u]}")
    for k in range(n - 1):
        r = 2 + k
        for u in range(4):
            ent = {(r, 0): _q(u),
                   (0, r): tuple(-eps * x for x in K.conj(_q(u)))}
            mats.append(kmat(K, N, ent))
            labels.append(f"X1{_UNITS[u]}{k}")
        for u in range(4):
            ent = {(r, 1): _q(u),
                   (1, r): tuple(-x for x in K.conj(_q(u)))}
            mats.append(kmat(K, N, ent))
            labels.append(f"X2{_UNITS[u]}{k}")
    return lay, mats, labels


def sp_matrix(p: int, q: int, coords):
    """Quaternionic matrix of a coordinate vector, for cross-checks."""
    lay, mats, _ = _basis(p, q)
    N = lay["N"]
    zero = QUATERNIONS.scalar(0)
    out = [[list(zero) for _ in range(N)] for _ in range(N)]
    for x, m in zip(coords, mats):
        x = _frac(x)
        if x:
            for i in range(N):
                for j in range(N):
                    for t in range(4):
                        out[i][j][t] += x * m[i][j][t]
    return tuple(tuple(tuple(cell) for cell in row) for row in out)


def sp_element(p: int, q: int, x1, x2, X1, X2) -> tuple:
    """Coordinates of (x1, x2, X1, X2).

    x1, x2 are imaginary quaternions as (i, j, k) triples; X1, X2 are
    sequences of quaternion 4-tuples of length n-1.
    """
    lay = _layout(p, q)
    n = lay["n"]
    if len(X1) != n - 1 or len(X2) != n - 1:
        raise ValueError("column vectors must have length n-1")
    vec = [Fraction(0)] * lay["dim"]
    for t in range(3):
        vec[lay["E1"] + t] = _frac(x1[t])
        vec[lay["E2"] + t] = _frac(x2[t])
    for k, quad in enumerate(X1):
        for u in range(4):
            vec[lay["V"] + 8 * k + u] = _frac(quad[u])
    for k, quad in enumerate(X2):
        for u in range(4):
            vec[lay["V"] + 8 * k + 4 + u] = _frac(quad[u])
    return tuple(vec)


def sp_central_element(p: int, q: int, a, alpha) -> tuple:
    """Coordinates of a*h0 + alpha*h1, a an (i, j, k) triple."""
    lay = _layout(p, q)
    vec = [Fraction(0)] * lay["dim"]
    for t in range(3):
        vec[lay["h0"] + t] = _frac(a[t])
    vec[lay["h1"]] = _frac(alpha)
    return tuple(vec)


def sp_block_indices(p: int, q: int) -> range:
    """Basis index range of the sp(n-1) block inside build_sp(p, q)."""
    lay = _layout(p, q)
    return range(lay["block_start"], lay["block_start"] + lay["block_count"])


def build_sp(p: int, q: int) -> LabeledAlgebra:
    lay, mats, labels = _basis(p, q)
    eps, N, n = lay["eps"], lay["N"], lay["n"]
    eta = [1] * p + [-1] * q
    for m, lab in zip(mats, labels):
        if not kmat_is_zero(eta_anti_hermitian_residual(QUATERNIONS, m, eta)):
            raise ArithmeticError(f"basis element {lab} breaks anti-Hermiticity")
    alg = algebra_from_kmats(QUATERNIONS, mats, labels)

    elements = {"h1": alg.basis_vector(lay["h1"])}
    for t, u in enumerate(("i", "j", "k")):
        elements[f"h0{u}"] = alg.basis_vector(lay["h0"] + t)
        elements[f"E1{u}"] = alg.basis_vector(lay["E1"] + t)
        elements[f"E2{u}"] = alg.basis_vector(lay["E2"] + t)

    v0 = [alg.basis_vector(lay["E1"] + t) for t in range(6)]
    vpart = [alg.basis_vector(i) for i in range(lay["V"], alg.dim)]
    h_basis = [alg.basis_vector(i) for i in range(lay["E1"])]
    m_basis = v0 + vpart
    subspaces = {
        "V0": Subspace(alg, v0),
        "h": Subspace(alg, h_basis),
        "m": Subspace(alg, m_basis),
    }
    if eps == 1:
        subspaces["V1"] = Subspace(alg, vpart)
    else:
        def xe(sign):
            out = []
            for t in range(3):
                v = [Fraction(0)] * alg.dim
                v[lay["E1"] + t] = Fraction(1)
                v[lay["E2"] + t] = Fraction(sign)
                out.append(tuple(v))
            return out

        def vv(sign):
            out = []
            for k in range(n - 1):
                for u in range(4):
                    v = [Fraction(0)] * alg.dim
                    v[lay["V"] + 8 * k + u] = Fraction(1)
                    v[lay["V"] + 8 * k + 4 + u] = Fraction(sign)
                    out.append(tuple(v))
            return out

        subspaces["V2"] = Subspace(alg, xe(1))
        subspaces["V-2"] = Subspace(alg, xe(-1))
        subspaces["V1"] = Subspace(alg, vv(-1))
        subspaces["V-1"] = Subspace(alg, vv(1))
    return LabeledAlgebra(alg, elements, subspaces)
