"""Reductive decompositions g = h + m and the induced isotropy action."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum.matrix import (
    RationalMatrix,
    independent_subset,
    inverse,
    kernel_basis,
    rank,
)
from .liealg import LieAlgebra, Subspace, killing


class NotSubalgebra(ValueError):
    """h fails to close under the bracket."""


class NotComplement(ValueError):
    """h and m fail to decompose g as a direct sum."""


class NotInvariantComplement(ValueError):
    """[h, m] leaks out of m."""


class DegenerateRestriction(ValueError):
    """The trace form restricted to h has a radical."""


@dataclass(frozen=True)
class ReductiveSplit:
    """Validated decomposition with projections in ambient coordinates.

    to_split maps ambient coordinates to stacked (h, m) coordinates;
    the h block comes first.
    """

    parent: LieAlgebra
    h: Subspace
    m: Subspace
    proj_h: RationalMatrix
    proj_m: RationalMatrix
    to_split: RationalMatrix

    def h_coordinates(self, vec) -> tuple:
        return self.to_split.apply(vec)[:self.h.dim]

    def m_coordinates(self, vec) -> tuple:
        return self.to_split.apply(vec)[self.h.dim:]

    def m_lift(self, coords) -> tuple:
        out = [Fraction(0)] * self.parent.dim
        for c, b in zip(coords, self.m.basis):
            if c:
                for t, x in enumerate(b):
                    out[t] += c * x
        return tuple(out)

    def bracket_m(self, xc, yc) -> tuple:
        """m-part of the bracket of two m-coordinate vectors."""
        w = self.parent.bracket(self.m_lift(xc), self.m_lift(yc))
        return self.m_coordinates(w)


def make_split(g: LieAlgebra, h: Subspace, m: Subspace) -> ReductiveSplit:
    if h.parent is not g or m.parent is not g:
        raise ValueError("subspaces belong to a different algebra")
    if h.dim + m.dim != g.dim:
        raise NotComplement(
            f"dim h ({h.dim}) + dim m ({m.dim}) != dim g ({g.dim})")
    stacked = list(h.basis) + list(m.basis)
    kept = independent_subset(stacked)
    if len(kept) != g.dim:
        missing = next(i for i in range(len(stacked)) if i not in kept)
        raise NotComplement(
            f"m basis vector {missing - h.dim} lies in the span of h "
            "and the preceding m vectors")
    for i, a in enumerate(h.basis):
        for j in range(i, h.dim):
            if not h.contains(g.bracket(a, h.basis[j])):
                raise NotSubalgebra(
                    f"bracket of h basis elements ({i}, {j}) leaves h")
    for i, a in enumerate(h.basis):
        for j, b in enumerate(m.basis):
            if not m.contains(g.bracket(a, b)):
                raise NotInvariantComplement(
                    f"bracket of h basis element {i} with m basis element "
                    f"{j} leaves m")
    cols = RationalMatrix.from_rows(stacked).transpose()
    to_split = inverse(cols)
    proj_h = cols @ RationalMatrix.diagonal(
        [1] * h.dim + [0] * m.dim) @ to_split
    proj_m = RationalMatrix.identity(g.dim) - proj_h
    return ReductiveSplit(g, h, m, proj_h, proj_m, to_split)


def killing_complement(g: LieAlgebra, h: Subspace) -> Subspace:
    """Orthocomplement of h for the trace form, ad_h-invariant by design."""
    G = killing(g)
    rows = [G.apply(b) for b in h.basis]
    pairing = RationalMatrix.from_rows(rows)
    gram = pairing @ RationalMatrix.from_rows(h.basis).transpose()
    if rank(gram) < h.dim:
        raise DegenerateRestriction("trace form is degenerate on h")
    return Subspace(g, kernel_basis(pairing))


@dataclass(frozen=True)
class IsotropyRep:
    """One generator matrix per h basis vector, acting on m-coordinates."""

    split: ReductiveSplit
    generators: tuple


def isotropy_rep(s: ReductiveSplit) -> IsotropyRep:
    g = s.parent
    gens = []
    for a in s.h.basis:
        image_rows = [s.m_coordinates(s.proj_m.apply(g.bracket(a, b)))
                      for b in s.m.basis]
        gens.append(RationalMatrix.from_rows(image_rows).transpose())
    for i in range(s.h.dim):
        for j in range(i + 1, s.h.dim):
            w = g.bracket(s.h.basis[i], s.h.basis[j])
            lhs = RationalMatrix.zeros(s.m.dim, s.m.dim)
            for c, gen in zip(s.h_coordinates(w), gens):
                if c:
                    lhs = lhs + gen.scale(c)
            rhs = gens[i] @ gens[j] - gens[j] @ gens[i]
            if lhs != rhs:
                raise ArithmeticError(
                    f"isotropy action is not a homomorphism at ({i}, {j})")
    return IsotropyRep(s, tuple(gens))


def is_symmetric_pair(s: ReductiveSplit) -> bool:
    for i, a in enumerate(s.m.basis):
        for j in range(i, s.m.dim):
            if not s.h.contains(s.parent.bracket(a, s.m.basis[j])):
                return False
    return True


__all__ = [
    "DegenerateRestriction",
    "IsotropyRep",
    "NotComplement",
    "NotInvariantComplement",
    "NotSubalgebra",
    "ReductiveSplit",
    "is_symmetric_pair",
    "isotropy_rep",
    "killing_complement",
    "make_split",
]
