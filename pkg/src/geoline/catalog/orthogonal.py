"""Pseudo-orthogonal and pseudo-Euclidean algebras on bivector bases.

so(p, q) is spanned by wedges e_a ^ e_b (a < b) of the ambient
pseudo-orthonormal basis, realised as matrices x -> <b,x>a - <a,x>b.
e(p1, q) adds a translation column: elements (A, lambda, u, w) with
A a rotation of the hyperplane W, u a boost mixing W with the line
direction, lambda the translation along the line and w the
translations inside W.
"""

from __future__ import annotations

from fractions import Fraction

from ..exactnum import RationalMatrix
from ..exactnum.matrix import _frac
from ..liealg import LieAlgebra, Subspace
from .algmat import REALS, kmat, kmat_commutator, kmat_flatten, structure_constants
from .labeled import LabeledAlgebra


def _pairs(n: int) -> list:
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def _wedge_mat(n: int, eta, a: int, b: int):
    return kmat(REALS, n, {(a, b): (eta[b],), (b, a): (-eta[a],)})


def wedge_vector(p: int, q: int, a: int, b: int) -> tuple:
    """Coordinates of e_a ^ e_b in the bivector basis of so(p, q)."""
    n = p + q
    if a == b or not (0 <= a < n and 0 <= b < n):
        raise ValueError("need two distinct ambient indices")
    sign = 1
    if a > b:
        a, b = b, a
        sign = -1
    idx = _pairs(n).index((a, b))
    return tuple(Fraction(sign * int(k == idx)) for k in range(len(_pairs(n))))


def so_matrix(p: int, q: int, coords) -> RationalMatrix:
    """Ambient n x n matrix of a bivector coordinate vector."""
    n = p + q
    eta = [1] * p + [-1] * q
    rows = [[Fraction(0)] * n for _ in range(n)]
    for (a, b), x in zip(_pairs(n), coords):
        x = _frac(x)
        if x:
            rows[a][b] += x * eta[b]
            rows[b][a] -= x * eta[a]
    return RationalMatrix.from_rows(rows)


def build_so(p: int, q: int) -> LabeledAlgebra:
    """so(p, q) on the wedge basis, with line-geodesic split labels."""
    if p < 0 or q < 0 or p + q < 2:
        raise ValueError("need p, q >= 0 and an ambient dimension >= 2")
    n = p + q
    eta = [1] * p + [-1] * q
    pairs = _pairs(n)
    mats = [_wedge_mat(n, eta, a, b) for a, b in pairs]
    labels = [f"w{a},{b}" for a, b in pairs]
    flats = [kmat_flatten(REALS, m) for m in mats]
    c = structure_constants(
        flats,
        lambda i, j: kmat_flatten(REALS, kmat_commutator(REALS, mats[i], mats[j])))
    alg = LieAlgebra(labels, c)

    def unit(a, b):
        return wedge_vector(p, q, a, b)

    elements = {}
    subspaces = {}

    def add_split(tag: str, one: int):
        # split determined by the plane of ambient indices {0, one}
        rest = [v for v in range(n) if v not in (0, one)]
        elements[f"e∧e1{tag}"] = unit(0, one)
        h = [unit(0, one)]
        h += [unit(a, b) for a, b in pairs if a in rest and b in rest]
        m = []
        for v in rest:
            m.append(unit(0, v))
            m.append(unit(one, v))
        subspaces[f"h{tag}"] = Subspace(alg, h)
        subspaces[f"m{tag}"] = Subspace(alg, m)

    if p >= 2:
        add_split("+", 1)
    if p >= 1 and q >= 1:
        add_split("-", p)
    if "e∧e1+" in elements:
        elements["e∧e1"] = elements["e∧e1+"]
    elif "e∧e1-" in elements:
        elements["e∧e1"] = elements["e∧e1-"]
    return LabeledAlgebra(alg, elements, subspaces)


def e_matrix(p1: int, q: int, coords) -> RationalMatrix:
    """Ambient (n+1) x (n+1) affine matrix of a coordinate vector."""
    n = p1 + q
    mats, _ = _e_basis(p1, q)
    rows = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for m, x in zip(mats, coords):
        x = _frac(x)
        if x:
            for (i, j), val in m.items():
                rows[i][j] += x * val
    return RationalMatrix.from_rows(rows)


def _e_basis(p1: int, q: int):
    """Sparse basis matrices {(i, j): value} and labels for e(p1, q)."""
    n = p1 + q
    w_dim = n - 1
    eta_w = [1] * (p1 - 1) + [-1] * q
    mats = []
    labels = []
    for a, b in _pairs(w_dim):
        mats.append({(a, b): Fraction(eta_w[b]), (b, a): Fraction(-eta_w[a])})
        labels.append(f"A{a},{b}")
    mats.append({(n - 1, n): Fraction(1)})
    labels.append("e0")
    for a in range(w_dim):
        mats.append({(a, n - 1): Fraction(1), (n - 1, a): Fraction(-eta_w[a])})
        labels.append(f"u{a}")
        mats.append({(a, n): Fraction(1)})
        labels.append(f"w{a}")
    return mats, labels


def build_e(p1: int, q: int) -> LabeledAlgebra:
    """Pseudo-Euclidean algebra e(p1, q) with line-stabiliser labels."""
    if p1 < 1 or q < 0:
        raise ValueError("need p1 >= 1 and q >= 0")
    n = p1 + q
    size = n + 1
    mats, labels = _e_basis(p1, q)

    def to_flat(m):
        flat = [Fraction(0)] * (size * size)
        for (i, j), v in m.items():
            flat[i * size + j] = v
        return tuple(flat)

    def mul(a, b):
        out = {}
        for (i, t), va in a.items():
            for (t2, j), vb in b.items():
                if t == t2:
                    out[(i, j)] = out.get((i, j), Fraction(0)) + va * vb
        return out

    def comm_flat(i, j):
        a, b = mats[i], mats[j]
        out = list(to_flat(mul(a, b)))
        for idx, v in enumerate(to_flat(mul(b, a))):
            out[idx] -= v
        return tuple(out)

    flats = [to_flat(m) for m in mats]
    c = structure_constants(flats, comm_flat)
    alg = LieAlgebra(labels, c)

    w_dim = n - 1
    so_count = len(_pairs(w_dim))
    e0_idx = so_count

    def unit(k):
        return alg.basis_vector(k)

    elements = {"e0": unit(e0_idx)}
    u_idx = [so_count + 1 + 2 * a for a in range(w_dim)]
    w_idx = [so_count + 2 + 2 * a for a in range(w_dim)]
    subspaces = {
        "U": Subspace(alg, [unit(k) for k in u_idx]),
        "W": Subspace(alg, [unit(k) for k in w_idx]),
        "h": Subspace(alg, [unit(k) for k in range(so_count)] + [unit(e0_idx)]),
        "m": Subspace(alg, [unit(k) for k in range(so_count + 1, alg.dim)]),
    }
    return LabeledAlgebra(alg, elements, subspaces)
