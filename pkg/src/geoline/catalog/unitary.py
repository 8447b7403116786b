"""Realified special unitary algebras su(n+1) and su(1, n).

Matrices are (n+1) x (n+1) over C, anti-Hermitian for the diagonal
form eta (identity, or diag(1, -1, ..., -1)) and traceless.  The basis
singles out the plane spanned by the first two complex directions:
rotations inside it (h1, E1, E2), the block algebra su(n-1) of the
orthogonal directions, the balancing diagonal h0, and the mixing part
parametrised by two column vectors X1, X2 in C^{n-1}.

Coordinate convention for the mixing part ("l-elements"):
(x1, x2, X1, X2) is the matrix with upper 2x2 block
[[i x1, eps i x2], [i x2, -i x1]], columns X1, X2 below it and rows
-eps X1^*, -X2^* to the right.  x1 and x2 are exactly the E1 and E2
coefficients, so the embedding is a plain index map.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactnum.matrix import _frac
from ..liealg import Subspace
from .algmat import (
    COMPLEX,
    algebra_from_kmats,
    eta_anti_hermitian_residual,
    kmat,
    kmat_is_zero,
)
from .labeled import LabeledAlgebra


def _params(p: int, q: int):
    if p + q < 2:
        raise ValueError("need at least two complex dimensions")
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
    block = (n - 1) * (n - 1) - 1 if n >= 2 else 0
    h0 = 0 if n >= 2 else None
    h1 = 1 if n >= 2 else 0
    e1 = h1 + 1 + block
    return {
        "eps": eps, "N": N, "n": n,
        "h0": h0, "h1": h1,
        "block_start": h1 + 1, "block_count": block,
        "E1": e1, "E2": e1 + 1, "V": e1 + 2,
        "dim": N * N - 1,
    }


def _basis(p: int, q: int):
    lay = _layout(p, q)
    eps, N, n = lay["eps"], lay["N"], lay["n"]
    K = COMPLEX

    def C(re, im=0):
        return K.scalar(re, im)

    mats = []
    labels = []
    if n >= 2:
        ent = {(0, 0): C(0, 1), (1, 1): C(0, 1)}
        for t in range(2, N):
            ent[(t, t)] = C(0, Fraction(-2, n - 1))
        mats.append(kmat(K, N, ent))
        labels.append("h0")
    mats.append(kmat(K, N, {(0, 1): C(-eps), (1, 0): C(1)}))
    labels.append("h1")
    for k in range(n - 2):
        a, b = 2 + k, 3 + k
        mats.append(kmat(K, N, {(a, a): C(0, 1), (b, b): C(0, -1)}))
        labels.append(f"D{k}")
    for a in range(2, N):
        for b in range(a + 1, N):
            mats.append(kmat(K, N, {(a, b): C(1), (b, a): C(-1)}))
            labels.append(f"S{a - 2},{b - 2}")
            mats.append(kmat(K, N, {(a, b): C(0, 1), (b, a): C(0, 1)}))
            labels.append(f"T{a - 2},{b - 2}")
    mats.append(kmat(K, N, {(0, 0): C(0, 1), (1, 1): C(0, -1)}))
    labels.append("E1")
    mats.append(kmat(K, N, {(0, 1): C(0, eps), (1, 0): C(0, 1)}))
    labels.append("E2")
    for k in range(n - 1):
        r = 2 + k
        mats.append(kmat(K, N, {(r, 0): C(1), (0, r): C(-eps)}))
        labels.append(f"X1r{k}")
        mats.append(kmat(K, N, {(r, 0): C(0, 1), (0, r): C(0, eps)}))
        labels.append(f"X1i{k}")
        mats.append(kmat(K, N, {(r, 1): C(1), (1, r): C(-1)}))
        labels.append(f"X2r{k}")
        mats.append(kmat(K, N, {(r, 1): C(0, 1), (1, r): C(0, 1)}))
        labels.append(f"X2i{k}")
    return lay, mats, labels


def su_matrix(p: int, q: int, coords):
    """Complex matrix of a coordinate vector, for cross-checks."""
    lay, mats, _ = _basis(p, q)
    N = lay["N"]
    zero = COMPLEX.scalar(0)
    out = [[list(zero) for _ in range(N)] for _ in range(N)]
    for x, m in zip(coords, mats):
        x = _frac(x)
        if x:
            for i in range(N):
                for j in range(N):
                    for t in range(2):
                        out[i][j][t] += x * m[i][j][t]
    return tuple(tuple(tuple(cell) for cell in row) for row in out)


def su_element(p: int, q: int, x1, x2, X1, X2) -> tuple:
    """Coordinates of the l-element (x1, x2, X1, X2).

    X1, X2 are sequences of (re, im) pairs of length n-1.
    """
    lay = _layout(p, q)
    n = lay["n"]
    if len(X1) != n - 1 or len(X2) != n - 1:
        raise ValueError("column vectors must have length n-1")
    vec = [Fraction(0)] * lay["dim"]
    vec[lay["E1"]] = _frac(x1)
    vec[lay["E2"]] = _frac(x2)
    for k, (re, im) in enumerate(X1):
        vec[lay["V"] + 4 * k] = _frac(re)
        vec[lay["V"] + 4 * k + 1] = _frac(im)
    for k, (re, im) in enumerate(X2):
        vec[lay["V"] + 4 * k + 2] = _frac(re)
        vec[lay["V"] + 4 * k + 3] = _frac(im)
    return tuple(vec)


def su_block_indices(p: int, q: int) -> range:
    """Basis index range of the su(n-1) block inside build_su(p, q)."""
    lay = _layout(p, q)
    return range(lay["block_start"], lay["block_start"] + lay["block_count"])


def build_su(p: int, q: int) -> LabeledAlgebra:
    lay, mats, labels = _basis(p, q)
    eps, N, n = lay["eps"], lay["N"], lay["n"]
    eta = [1] * p + [-1] * q
    for m, lab in zip(mats, labels):
        if not kmat_is_zero(eta_anti_hermitian_residual(COMPLEX, m, eta)):
            raise ArithmeticError(f"basis element {lab} breaks anti-Hermiticity")
        tr = [sum(m[t][t][c] for t in range(N)) for c in range(2)]
        if any(tr):
            raise ArithmeticError(f"basis element {lab} has nonzero trace")
    alg = algebra_from_kmats(COMPLEX, mats, labels)

    elements = {"h1": alg.basis_vector(lay["h1"]),
                "E1": alg.basis_vector(lay["E1"]),
                "E2": alg.basis_vector(lay["E2"])}
    if lay["h0"] is not None:
        elements["h0"] = alg.basis_vector(lay["h0"])
    if eps == -1:
        e1v = elements["E1"]
        e2v = elements["E2"]
        elements["E+"] = tuple(a + b for a, b in zip(e1v, e2v))
        elements["E-"] = tuple(a - b for a, b in zip(e1v, e2v))

    # V+/V- carry the ad_{h1} eigenvalue convention: X2 = -s X1 on V+
    # and X2 = s X1 on V-, where s = i compact, s = 1 otherwise.
    def v_pair(k, sign):
        b = lay["V"] + 4 * k
        va = [Fraction(0)] * lay["dim"]
        vb = [Fraction(0)] * lay["dim"]
        if eps == 1:
            va[b] = Fraction(1)
            va[b + 3] = Fraction(-sign)
            vb[b + 1] = Fraction(1)
            vb[b + 2] = Fraction(sign)
        else:
            va[b] = Fraction(1)
            va[b + 2] = Fraction(-sign)
            vb[b + 1] = Fraction(1)
            vb[b + 3] = Fraction(-sign)
        return tuple(va), tuple(vb)

    vplus = []
    vminus = []
    for k in range(n - 1):
        a, b = v_pair(k, 1)
        vplus += [a, b]
        a, b = v_pair(k, -1)
        vminus += [a, b]
    h_basis = [alg.basis_vector(i) for i in range(lay["E1"])]
    m_basis = [alg.basis_vector(i) for i in range(lay["E1"], alg.dim)]
    subspaces = {
        "V0": Subspace(alg, [elements["E1"], elements["E2"]]),
        "V+": Subspace(alg, vplus),
        "V-": Subspace(alg, vminus),
        "h": Subspace(alg, h_basis),
        "m": Subspace(alg, m_basis),
    }
    return LabeledAlgebra(alg, elements, subspaces)
