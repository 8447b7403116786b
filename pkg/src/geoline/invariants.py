"""Classification engine on a reductive split.

Computes exact bases of isotropy-invariant tensors (symmetric forms,
2-forms, endomorphisms), the commutant algebra with its multiplication
table, square roots of +/-identity in the commutant, Nijenhuis
integrability, and compatible metric/endomorphism/form triples.  All
arithmetic is rational and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import isqrt

from .exactnum import (
    RationalMatrix,
    RationalPolynomial,
    factor_low_degree,
    independent_subset,
    kernel_basis,
    min_poly,
    rank,
    rref,
    signature,
    solve,
)
from .exactnum.modp import certified_kernel_rows
from .homogeneous import ReductiveSplit
from .liealg import adjoint

_F0 = Fraction(0)
_F1 = Fraction(1)


class NoSolution(ValueError):
    """No endomorphism with the requested square exists beyond +/-identity."""


class ZeroForm(ValueError):
    """The trace-form pairing with the given central element vanishes."""


# Per-split memo of isotropy matrices and bracket tables, keyed by object
# identity; splits are immutable so entries never go stale.
_SPLIT_DATA: dict[int, dict] = {}


def _data(s: ReductiveSplit) -> dict:
    d = _SPLIT_DATA.setdefault(id(s), {})
    d.setdefault("split", s)
    return d


def _isotropy_matrices(s: ReductiveSplit) -> list[RationalMatrix]:
    """Action of each stabilizer basis element on m, as a matrix."""
    data = _data(s)
    if "gens" not in data:
        g = s.parent
        gens = []
        for b in s.h.basis:
            rows = [s.m_coordinates(g.bracket(b, v)) for v in s.m.basis]
            gens.append(RationalMatrix.from_rows(rows).transpose())
        data["gens"] = gens
    return data["gens"]


def _m_adjoints(s: ReductiveSplit) -> list[RationalMatrix]:
    data = _data(s)
    if "adm" not in data:
        data["adm"] = [adjoint(s.parent, v) for v in s.m.basis]
    return data["adm"]


def _m_brackets(s: ReductiveSplit) -> list[list[tuple]]:
    """m-components of brackets of m basis pairs, antisymmetric table."""
    data = _data(s)
    if "mbrk" not in data:
        adm = _m_adjoints(s)
        d = s.m.dim
        zero = tuple([_F0] * d)
        tab = [[zero] * d for _ in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                c = s.m_coordinates(adm[i].apply(s.m.basis[j]))
                tab[i][j] = c
                tab[j][i] = tuple(-x for x in c)
        data["mbrk"] = tab
    return data["mbrk"]


def _sym_index(d: int) -> dict:
    out = {}
    for i in range(d):
        for j in range(i, d):
            out[(i, j)] = len(out)
    return out


def _alt_index(d: int) -> dict:
    out = {}
    for i in range(d):
        for j in range(i + 1, d):
            out[(i, j)] = len(out)
    return out


def _nvars(kind: str, d: int) -> int:
    if kind == "endo":
        return d * d
    if kind == "sym2":
        return d * (d + 1) // 2
    return d * (d - 1) // 2


def _unvec(kind: str, d: int, v) -> RationalMatrix:
    rows = [[_F0] * d for _ in range(d)]
    if kind == "endo":
        for r in range(d):
            for c in range(d):
                rows[r][c] = v[r * d + c]
    elif kind == "sym2":
        t = 0
        for i in range(d):
            for j in range(i, d):
                rows[i][j] = rows[j][i] = v[t]
                t += 1
    else:
        t = 0
        for i in range(d):
            for j in range(i + 1, d):
                rows[i][j] = v[t]
                rows[j][i] = -v[t]
                t += 1
    return RationalMatrix.from_rows(rows)


def _vec(kind: str, d: int, M: RationalMatrix) -> tuple:
    if kind == "endo":
        out = []
        for r in range(d):
            out.extend(M.row(r))
        return tuple(out)
    if kind == "sym2":
        return tuple(M.entry(i, j) for i in range(d) for j in range(i, d))
    return tuple(M.entry(i, j) for i in range(d) for j in range(i + 1, d))


def _form_action(A: RationalMatrix, M: RationalMatrix) -> RationalMatrix:
    return A.transpose() @ M + M @ A


def _endo_action(A: RationalMatrix, M: RationalMatrix) -> RationalMatrix:
    return A @ M - M @ A


def _generator_rows(kind: str, d: int, A: RationalMatrix) -> list[list[Fraction]]:
    """Linear equations expressing annihilation by one generator."""
    a = A.to_rows()
    n = _nvars(kind, d)
    rows = []
    if kind == "endo":
        for r in range(d):
            for c in range(d):
                row = [_F0] * n
                for k in range(d):
                    row[k * d + c] += a[r][k]
                    row[r * d + k] -= a[k][c]
                rows.append(row)
    elif kind == "sym2":
        idx = _sym_index(d)
        for r in range(d):
            for c in range(r, d):
                row = [_F0] * n
                for k in range(d):
                    row[idx[(min(k, c), max(k, c))]] += a[k][r]
                    row[idx[(min(r, k), max(r, k))]] += a[k][c]
                rows.append(row)
    else:
        idx = _alt_index(d)
        for r in range(d):
            for c in range(r + 1, d):
                row = [_F0] * n
                for k in range(d):
                    if k != c:
                        p, s = ((k, c), 1) if k < c else ((c, k), -1)
                        row[idx[p]] += s * a[k][r]
                    if k != r:
                        p, s = ((r, k), 1) if r < k else ((k, r), -1)
                        row[idx[p]] += s * a[k][c]
                rows.append(row)
    return rows


def _kernel_of_rows(rows: list[list[Fraction]], n: int) -> list[tuple]:
    live = [r for r in rows if any(r)]
    if not live:
        unit = [_F0] * n
        out = []
        for i in range(n):
            v = list(unit)
            v[i] = _F1
            out.append(tuple(v))
        return out
    return certified_kernel_rows(live)


@dataclass(frozen=True)
class InvariantTensorBasis:
    """Exact basis of an isotropy-invariant tensor space on m."""

    kind: str
    split: ReductiveSplit
    elements: tuple


def invariant_tensors(s: ReductiveSplit, kind: str) -> InvariantTensorBasis:
    """Basis of invariant symmetric forms, 2-forms, or endomorphisms.

    The defining equations of the first two generators are solved in one
    stacked certified kernel computation; the remaining generators then
    cut the running solution space down by exact image stacking, which
    keeps every linear system small.
    """
    if kind not in ("sym2", "alt2", "endo"):
        raise ValueError(f"unknown tensor kind {kind!r}")
    d = s.m.dim
    n = _nvars(kind, d)
    gens = [A for A in _isotropy_matrices(s) if not A.is_zero()]
    act = _endo_action if kind == "endo" else _form_action

    seed = gens[:2]
    rows: list[list[Fraction]] = []
    for A in seed:
        rows.extend(_generator_rows(kind, d, A))
    basis = _kernel_of_rows(rows, n)

    for A in gens[2:]:
        if not basis:
            break
        imgs = [_vec(kind, d, act(A, _unvec(kind, d, v))) for v in basis]
        cut = [[im[i] for im in imgs] for i in range(n) if any(im[i] for im in imgs)]
        if not cut:
            continue
        combos = certified_kernel_rows(cut)
        basis = [
            tuple(sum((c[j] * basis[j][i] for j in range(len(basis))), _F0)
                  for i in range(n))
            for c in combos
        ]
    return InvariantTensorBasis(
        kind, s, tuple(_unvec(kind, d, v) for v in basis))


def closedness_residual(s: ReductiveSplit, w: RationalMatrix) -> list:
    """Nonzero cyclic-sum obstructions to the 2-form w being closed.

    Evaluates -(w([X,Y]_m, Z) + w([Y,Z]_m, X) + w([Z,X]_m, Y)) on every
    ordered basis triple X < Y < Z and reports the nonzero values; an
    empty list certifies closedness.
    """
    d = s.m.dim
    tab = _m_brackets(s)
    wr = w.to_rows()

    def pair(coords, k):
        return sum((coords[a] * wr[a][k] for a in range(d) if coords[a]), _F0)

    out = []
    for i in range(d):
        for j in range(i + 1, d):
            bij = tab[i][j]
            for k in range(j + 1, d):
                val = -(pair(bij, k) + pair(tab[j][k], i) + pair(tab[k][i], j))
                if val:
                    out.append(((i, j, k), val))
    return out


def form_from_central(s: ReductiveSplit, z) -> RationalMatrix:
    """2-form pairing the trace form of z against brackets of m elements.

    z must be an ambient coordinate vector lying in the center of the
    stabilizer.  The returned form is verified invariant and closed;
    ZeroForm is raised when the pairing vanishes identically.
    """
    from .liealg import killing

    g = s.parent
    z = tuple(Fraction(x) for x in z)
    for b in s.h.basis:
        if any(g.bracket(z, b)):
            raise ValueError("element is not central in the stabilizer")
    if solve(RationalMatrix.from_rows(s.h.basis).transpose(), z) is None:
        raise ValueError("element does not lie in the stabilizer")

    bz = killing(g).apply(z)
    adm = _m_adjoints(s)
    d = s.m.dim
    rows = [[_F0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            full = adm[i].apply(s.m.basis[j])
            val = sum((bz[k] * full[k] for k in range(g.dim) if full[k]), _F0)
            rows[i][j] = val
            rows[j][i] = -val
    w = RationalMatrix.from_rows(rows)
    if w.is_zero():
        raise ZeroForm("trace-form pairing with the central element is zero")
    for A in _isotropy_matrices(s):
        if not _form_action(A, w).is_zero():
            raise ArithmeticError("central pairing failed the invariance check")
    if closedness_residual(s, w):
        raise ArithmeticError("central pairing failed the closedness check")
    return w


def _nondegenerate_sample(mats: list[RationalMatrix], d: int):
    """First small-integer combination with full rank, scanning [-3, 3]."""
    if not mats:
        return None
    for coeffs in iter_product(range(-3, 4), repeat=len(mats)):
        lead = next((c for c in coeffs if c), 0)
        if lead <= 0:
            continue
        W = RationalMatrix.zeros(d, d)
        for c, M in zip(coeffs, mats):
            if c:
                W = W + M.scale(c)
        if rank(W) == d:
            return W
    return None


def symplectic_family(s: ReductiveSplit):
    """Closed invariant 2-forms plus one nondegenerate representative.

    Returns (closed_basis, sample); sample is None when every scanned
    integer combination of the closed basis is degenerate.
    """
    alt = invariant_tensors(s, "alt2").elements
    if not alt:
        return [], None
    d = s.m.dim
    residues = []
    for w in alt:
        tab = _m_brackets(s)
        wr = w.to_rows()
        vals = []
        for i in range(d):
            for j in range(i + 1, d):
                bij = tab[i][j]
                for k in range(j + 1, d):
                    vals.append(-(
                        sum((bij[a] * wr[a][k] for a in range(d) if bij[a]), _F0)
                        + sum((tab[j][k][a] * wr[a][i] for a in range(d)
                               if tab[j][k][a]), _F0)
                        + sum((tab[k][i][a] * wr[a][j] for a in range(d)
                               if tab[k][i][a]), _F0)))
        residues.append(vals)
    rows = [[residues[j][i] for j in range(len(alt))]
            for i in range(len(residues[0]))
            if any(residues[j][i] for j in range(len(alt)))]
    if rows:
        combos = certified_kernel_rows(rows)
        closed = []
        for c in combos:
            W = RationalMatrix.zeros(d, d)
            for coeff, M in zip(c, alt):
                if coeff:
                    W = W + M.scale(coeff)
            closed.append(W)
    else:
        closed = list(alt)
    return closed, _nondegenerate_sample(closed, d)


@dataclass(frozen=True)
class CommutantAlgebra:
    """Invariant endomorphisms of m with an exact multiplication table."""

    split: ReductiveSplit
    basis: tuple
    multiplication_table: tuple
    unity: int


def commutant(s: ReductiveSplit) -> CommutantAlgebra:
    """Commutant of the isotropy action, with identity first in the basis."""
    d = s.m.dim
    elems = invariant_tensors(s, "endo").elements
    ident = RationalMatrix.identity(d)
    vecs = [_vec("endo", d, ident)] + [_vec("endo", d, e) for e in elems]
    keep = independent_subset(vecs)
    basis = [ident] + [elems[i - 1] for i in keep if i > 0]
    if len(basis) != len(elems):
        raise ArithmeticError("identity completion changed the dimension")
    # kernel lifting can return representatives with huge entries; minimal
    # polynomials downstream inherit those coefficients and the factoring
    # cost, so swap in the echelon basis of the same span
    R, _ = rref(RationalMatrix.from_rows([_vec("endo", d, b) for b in basis]))
    echelon = [R.row(i) for i in range(len(basis))]
    coords = solve(RationalMatrix.from_rows(echelon).transpose(),
                   _vec("endo", d, ident))
    j = next(i for i, x in enumerate(coords) if x)
    basis = [ident] + [_unvec("endo", d, echelon[i])
                       for i in range(len(echelon)) if i != j]
    colmat = RationalMatrix.from_rows(
        [_vec("endo", d, b) for b in basis]).transpose()
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            x = solve(colmat, _vec("endo", d, bi @ bj))
            if x is None:
                raise ArithmeticError(
                    "invariant endomorphisms are not closed under composition")
            row.append(tuple(x))
        table.append(tuple(row))
    return CommutantAlgebra(s, tuple(basis), tuple(table), 0)


# ---------------------------------------------------------------------------
# Coordinate arithmetic inside the commutant.

def _alg_mul(table, u, v) -> tuple:
    k = len(u)
    out = [_F0] * k
    for i in range(k):
        if not u[i]:
            continue
        for j in range(k):
            if not v[j]:
                continue
            f = u[i] * v[j]
            t = table[i][j]
            for a in range(k):
                if t[a]:
                    out[a] += f * t[a]
    return tuple(out)


def _alg_rep(table, u) -> RationalMatrix:
    k = len(u)
    rows = [[_F0] * k for _ in range(k)]
    for j in range(k):
        for i in range(k):
            if not u[i]:
                continue
            t = table[i][j]
            for a in range(k):
                if t[a]:
                    rows[a][j] += u[i] * t[a]
    return RationalMatrix.from_rows(rows)


def _unit(k: int, i: int) -> tuple:
    return tuple(_F1 if j == i else _F0 for j in range(k))


def _poly_eval_alg(table, p: RationalPolynomial, x, one) -> tuple:
    acc = tuple(_F0 for _ in one)
    for c in reversed(p.coefficients):
        acc = _alg_mul(table, acc, x)
        if c:
            acc = tuple(a + c * o for a, o in zip(acc, one))
    return acc


def _poly_xgcd(a: RationalPolynomial, b: RationalPolynomial):
    """Monic gcd g with cofactors (u, v) satisfying u*a + v*b = g."""
    r0, r1 = a, b
    u0, u1 = RationalPolynomial([1]), RationalPolynomial([])
    v0, v1 = RationalPolynomial([]), RationalPolynomial([1])
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lc = r0.leading
    inv = 1 / lc
    return r0.scale(inv), u0.scale(inv), v0.scale(inv)


def _sqrt_fraction(x: Fraction):
    if x < 0:
        return None
    a, b = isqrt(x.numerator), isqrt(x.denominator)
    if a * a == x.numerator and b * b == x.denominator:
        return Fraction(a, b)
    return None


@dataclass(frozen=True)
class StructureCandidate:
    """An invariant endomorphism squaring to epsilon times the identity."""

    endo: RationalMatrix
    epsilon: int
    plus_dim: int | None
    minus_dim: int | None
    integrable: bool
    nijenhuis_rank: int

    def __post_init__(self):
        d = self.endo.rows
        ident = RationalMatrix.identity(d)
        if not (self.endo @ self.endo - ident.scale(self.epsilon)).is_zero():
            raise ValueError("endomorphism square is not epsilon times identity")
        if (self.endo - ident).is_zero() or (self.endo + ident).is_zero():
            raise ValueError("identity and its negative are excluded")
        if self.epsilon == 1:
            if self.plus_dim != self.minus_dim or self.endo.trace() != 0:
                raise ValueError("eigenspace dimensions must balance")


@dataclass(frozen=True)
class ProductSplitting:
    """Square root of identity with unequal eigenspace dimensions."""

    endo: RationalMatrix
    plus_dim: int
    minus_dim: int


@dataclass(frozen=True)
class FamilyDescriptor:
    """One representative of a solution set without a completeness proof."""

    representative: StructureCandidate
    tangent_dim: int


def _nijenhuis(s: ReductiveSplit, K: RationalMatrix, eps: int):
    """Residual rows of the torsion tensor; empty means integrable."""
    d = s.m.dim
    tab = _m_brackets(s)
    kc = [tuple(K.col(j)) for j in range(d)]

    def bil(x, y):
        out = [_F0] * d
        for a in range(d):
            if not x[a]:
                continue
            for b in range(d):
                if not y[b]:
                    continue
                t = tab[a][b]
                f = x[a] * y[b]
                for r in range(d):
                    if t[r]:
                        out[r] += f * t[r]
        return tuple(out)

    rows = []
    for i in range(d):
        for j in range(i + 1, d):
            t1 = bil(kc[i], kc[j])
            t2 = K.apply(bil(kc[i], _unit(d, j)))
            t3 = K.apply(bil(_unit(d, i), kc[j]))
            res = tuple(t1[a] - t2[a] - t3[a] + eps * tab[i][j][a]
                        for a in range(d))
            if any(res):
                rows.append(res)
    return rows


def nijenhuis_integrable(s: ReductiveSplit, cand: "StructureCandidate"):
    """(flag, residual rank) for the torsion of a structure candidate."""
    rows = _nijenhuis(s, cand.endo, cand.epsilon)
    return (not rows), (rank(RationalMatrix.from_rows(rows)) if rows else 0)


def _candidate(c: CommutantAlgebra, coords, eps: int):
    d = c.split.m.dim
    K = RationalMatrix.zeros(d, d)
    for x, B in zip(coords, c.basis):
        if x:
            K = K + B.scale(x)
    rows = _nijenhuis(c.split, K, eps)
    nrank = rank(RationalMatrix.from_rows(rows)) if rows else 0
    if eps == 1:
        plus = len(kernel_basis(K - RationalMatrix.identity(d)))
        minus = len(kernel_basis(K + RationalMatrix.identity(d)))
        if plus != minus:
            return ProductSplitting(K, plus, minus)
        return StructureCandidate(K, 1, plus, minus, not rows, nrank)
    return StructureCandidate(K, -1, None, None, not rows, nrank)


def _field_components(c: CommutantAlgebra):
    """Split the commutant into field components, or signal a radical.

    Returns ("fields", comps) with comps a list of (idempotent, generator,
    minimal polynomial) triples, or ("radical", None) when a nilpotent
    element is detected.  Splitting elements are taken with tiny
    coefficients so every polynomial that gets factored stays small.
    """
    table = c.multiplication_table
    k = len(c.basis)
    one = _unit(k, c.unity)

    def restrict_rep(x, cbasis, colmat):
        cols = []
        for b in cbasis:
            y = _alg_mul(table, x, b)
            co = solve(colmat, y)
            if co is None:
                raise ArithmeticError("component multiplication left the span")
            cols.append(co)
        return RationalMatrix.from_rows(cols).transpose()

    def candidates(e):
        for i in range(k):
            yield _alg_mul(table, e, _unit(k, i))
        for i in range(k):
            for j in range(i + 1, k):
                yield _alg_mul(
                    table, e,
                    tuple(a + b for a, b in zip(_unit(k, i), _unit(k, j))))
        for t in range(2, 7):
            yield _alg_mul(
                table, e,
                tuple(sum(Fraction(t) ** i * _unit(k, i)[j] for i in range(k))
                      for j in range(k)))

    done = []
    todo = [(one, [_unit(k, i) for i in range(k)])]
    while todo:
        e, cbasis = todo.pop()
        dim = len(cbasis)
        if dim == 1:
            done.append((e, None, RationalPolynomial([-1, 1])))
            continue
        colmat = RationalMatrix.from_rows(cbasis).transpose()
        progressed = False
        for x in candidates(e):
            M = restrict_rep(x, cbasis, colmat)
            p = min_poly(M)
            fac = factor_low_degree(p)
            if any(m > 1 for _, m in fac):
                return "radical", None
            if len(fac) == 1:
                f = fac[0][0]
                if f.degree == dim:
                    done.append((e, x, f))
                    progressed = True
                    break
                continue
            for f, _ in fac:
                g = p.divmod(f)[0]
                _, _, v = _poly_xgcd(f, g)
                ei = _poly_eval_alg(table, v * g, x, e)
                if _alg_mul(table, ei, ei) != ei:
                    raise ArithmeticError("idempotent construction failed")
                imgs = [_alg_mul(table, ei, b) for b in cbasis]
                kept = independent_subset(imgs)
                todo.append((ei, [imgs[t] for t in kept]))
            progressed = True
            break
        if not progressed:
            return "radical", None
    return "fields", done


def _component_root(e, gen, f: RationalPolynomial, eps: int):
    """Root of z*z = eps in one field component, or None."""
    if f.degree == 1:
        return e if eps == 1 else None
    if eps == 1:
        return e
    beta, gamma = f.coefficients[1], f.coefficients[0]
    disc = beta * beta - 4 * gamma
    v = _sqrt_fraction(Fraction(-4) / disc)
    if v is None:
        return None
    u = beta * v / 2
    return tuple(u * a + v * b for a, b in zip(e, gen))


def _enumerate_roots(c: CommutantAlgebra, comps, eps: int):
    k = len(c.basis)
    roots = []
    for e, gen, f in comps:
        r = _component_root(e, gen, f, eps)
        if r is None:
            raise NoSolution(
                "a component of the commutant admits no square root")
        roots.append(r)
    out = []
    for signs in iter_product(*([(1,)] + [(1, -1)] * (len(comps) - 1))):
        z = tuple(sum(s * roots[i][a] for i, s in enumerate(signs))
                  for a in range(k))
        if eps == 1 and all(s == 1 for s in signs):
            continue  # the identity itself
        out.append(z)
    return sorted(out)


def square_roots(c: CommutantAlgebra, eps: int):
    """Square roots of eps times the identity in the commutant, up to sign.

    When the commutant decomposes into fields of degree at most two the
    list is complete; a detected radical switches to a one-representative
    FamilyDescriptor.  NoSolution is raised when no root beyond the
    identity pair exists.
    """
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    table = c.multiplication_table
    k = len(c.basis)
    for i in range(k):
        for j in range(i + 1, k):
            if table[i][j] != table[j][i]:
                raise ArithmeticError("commutant is not commutative")
    kind, comps = _field_components(c)
    if kind == "fields":
        cands = []
        for z in _enumerate_roots(c, comps, eps):
            got = _candidate(c, z, eps)
            if isinstance(got, StructureCandidate):
                cands.append(got)
        if eps == -1 and not cands:
            raise NoSolution("no invariant endomorphism squares to -identity")
        return cands
    return _radical_family(c, eps)


def product_structures(c: CommutantAlgebra):
    """Square roots of identity with unbalanced eigenspaces, up to sign."""
    kind, comps = _field_components(c)
    if kind != "fields":
        return []
    out = []
    for z in _enumerate_roots(c, comps, 1):
        got = _candidate(c, z, 1)
        if isinstance(got, ProductSplitting):
            out.append(got)
    return out


def _radical_family(c: CommutantAlgebra, eps: int) -> FamilyDescriptor:
    """Representative square root when the commutant has nilpotents.

    Searches inside the semisimple subalgebra generated by the
    semisimple part of a generating element, which carries every root;
    isolation is reported through the linearization kernel.
    """
    table = c.multiplication_table
    k = len(c.basis)
    one = _unit(k, c.unity)

    best = None
    for t in range(1, 13):
        theta = tuple(Fraction(t) ** i for i in range(k))
        p = min_poly(_alg_rep(table, theta))
        if best is None or p.degree > best[1].degree:
            best = (theta, p)
        if p.degree == k:
            break
    theta, p = best
    fac = factor_low_degree(p)
    radfree = RationalPolynomial([1])
    for f, _ in fac:
        radfree = radfree * f

    # Lift x to a root of the squarefree part inside Q[x]/p.
    s_poly = RationalPolynomial([0, 1])
    for _ in range(8):
        val = _compose_mod(radfree, s_poly, p)
        if val.is_zero():
            break
        der = _compose_mod(radfree.derivative(), s_poly, p)
        g, u, _ = _poly_xgcd(der, p)
        if g.degree != 0:
            raise ArithmeticError("derivative is not invertible in the lift")
        step = (val * u.scale(1 / g.coefficients[0])).divmod(p)[1]
        s_poly = (s_poly - step).divmod(p)[1]
    else:
        raise ArithmeticError("semisimple part did not stabilize")

    theta_s = _poly_eval_alg(table, s_poly, theta, one)
    pows = [one]
    for _ in range(radfree.degree - 1):
        pows.append(_alg_mul(table, pows[-1], theta_s))

    comps = []
    for f, _ in fac:
        g = radfree.divmod(f)[0]
        _, _, v = _poly_xgcd(f, g)
        epoly = (v * g).divmod(radfree)[1]
        e = _eval_in_powers(epoly, pows)
        if f.degree == 1:
            comps.append((e, None, f))
        else:
            gen_poly = (epoly * RationalPolynomial([0, 1])).divmod(radfree)[1]
            comps.append((e, _eval_in_powers(gen_poly, pows), f))

    roots = []
    for e, gen, f in comps:
        r = _component_root(e, gen, f, eps)
        if r is None:
            raise NoSolution(
                "a component of the commutant admits no square root")
        roots.append(r)
    found = []
    for signs in iter_product(*([(1,)] + [(1, -1)] * (len(comps) - 1))):
        z = tuple(sum(s * roots[i][a] for i, s in enumerate(signs))
                  for a in range(k))
        if eps == 1 and (z == one or z == tuple(-x for x in one)):
            continue
        found.append(z)
    found.sort()
    for z in found:
        got = _candidate(c, z, eps)
        if isinstance(got, StructureCandidate):
            L = RationalMatrix.from_rows(
                [_alg_mul(table, z, _unit(k, j)) for j in range(k)]
            ).transpose() + RationalMatrix.from_rows(
                [_alg_mul(table, _unit(k, j), z) for j in range(k)]
            ).transpose()
            return FamilyDescriptor(got, len(kernel_basis(L)))
    raise NoSolution("no root beyond the identity pair was found")


def _compose_mod(p: RationalPolynomial, s: RationalPolynomial,
                 mod: RationalPolynomial) -> RationalPolynomial:
    acc = RationalPolynomial([])
    for coeff in reversed(p.coefficients):
        acc = (acc * s + RationalPolynomial([coeff])).divmod(mod)[1]
    return acc


def _eval_in_powers(p: RationalPolynomial, pows) -> tuple:
    k = len(pows[0])
    out = [_F0] * k
    for i, coeff in enumerate(p.coefficients):
        if coeff:
            for a in range(k):
                out[a] += coeff * pows[i][a]
    return tuple(out)


@dataclass(frozen=True)
class PairRecord:
    """Metric, structure candidate, and their compatible closed 2-form."""

    metric: RationalMatrix
    candidate: StructureCandidate
    form: RationalMatrix
    metric_signature: tuple
    flavor: str
    from_family: bool


def pair_structures(s: ReductiveSplit) -> list:
    """Compatible (metric, endomorphism, closed 2-form) records.

    For every structure candidate a nondegenerate invariant symmetric
    form g with g(IX, IY) = -eps g(X, Y) is searched; each match whose
    induced 2-form g(I., .) is closed yields one record with the metric
    signature and an integrability-graded flavor tag.
    """
    d = s.m.dim
    sym = invariant_tensors(s, "sym2").elements
    if not sym:
        return []
    com = commutant(s)
    records = []
    for eps in (-1, 1):
        try:
            got = square_roots(com, eps)
        except NoSolution:
            continue
        family = isinstance(got, FamilyDescriptor)
        cands = [got.representative] if family else got
        for cand in cands:
            I = cand.endo
            conds = [_vec("endo", d, I.transpose() @ G @ I + G.scale(eps))
                     for G in sym]
            rows = [[c[i] for c in conds] for i in range(d * d)
                    if any(c[i] for c in conds)]
            if rows:
                combos = certified_kernel_rows(rows)
                space = []
                for co in combos:
                    G = RationalMatrix.zeros(d, d)
                    for x, M in zip(co, sym):
                        if x:
                            G = G + M.scale(x)
                    space.append(G)
            else:
                space = list(sym)
            # closedness of I^T G is linear in G; cut the subspace down
            # before hunting for a nondegenerate representative
            resids = [dict(closedness_residual(s, I.transpose() @ G))
                      for G in space]
            keys = sorted({k for r in resids for k in r})
            if keys:
                rows2 = [[r.get(k, _F0) for r in resids] for k in keys]
                combos2 = certified_kernel_rows(rows2)
                cut = []
                for co in combos2:
                    G = RationalMatrix.zeros(d, d)
                    for x, M in zip(co, space):
                        if x:
                            G = G + M.scale(x)
                    cut.append(G)
                space = cut
            G = _nondegenerate_sample(space, d)
            if G is None:
                continue
            # g and -g carry the same pair; normalize to pos >= neg
            sig = signature(G)
            if sig[0] < sig[1]:
                G = G.scale(_F1 * -1)
                sig = (sig[1], sig[0], sig[2])
            omega = I.transpose() @ G
            base = "para-kahler" if eps == 1 else "kahler"
            flavor = base if cand.integrable else "almost-" + base
            records.append(PairRecord(G, cand, omega, sig, flavor, family))
    return records


def tensor_decomposition_check(s: ReductiveSplit, dimW: int, dimF: int) -> bool:
    """Whether the isotropy acts within gl(W) + gl(F) of a factorization.

    The m basis is read as a W-major grid of shape (dimW, dimF); each
    generator must lie in the span of the two one-sided multiplication
    blocks of that grid.
    """
    d = s.m.dim
    if dimW * dimF != d:
        raise ValueError("dimension mismatch with the stated factorization")
    span_rows = []
    for i in range(dimW):
        for j in range(dimW):
            rows = [[_F0] * d for _ in range(d)]
            for b in range(dimF):
                rows[i * dimF + b][j * dimF + b] = _F1
            span_rows.append(_vec("endo", d, RationalMatrix.from_rows(rows)))
    for i in range(dimF):
        for j in range(dimF):
            rows = [[_F0] * d for _ in range(d)]
            for a in range(dimW):
                rows[a * dimF + i][a * dimF + j] = _F1
            span_rows.append(_vec("endo", d, RationalMatrix.from_rows(rows)))
    base = RationalMatrix.from_rows(span_rows)
    r0 = rank(base)
    for A in _isotropy_matrices(s):
        stacked = RationalMatrix.from_rows(span_rows + [_vec("endo", d, A)])
        if rank(stacked) != r0:
            return False
    return True
