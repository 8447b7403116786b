"""Labeled algebra container shared by all builders."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..liealg import LieAlgebra, Subspace


@dataclass(frozen=True)
class LabeledAlgebra:
    """A LieAlgebra together with named distinguished elements and subspaces.

    named_elements maps symbol -> coordinate vector; named_subspaces maps
    symbol -> Subspace of the same algebra.
    """

    algebra: LieAlgebra
    named_elements: dict = field(default_factory=dict)
    named_subspaces: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.algebra.dim
        for name, vec in self.named_elements.items():
            if len(vec) != n:
                raise ValueError(f"element {name!r} has wrong length")
        for name, sub in self.named_subspaces.items():
            if sub.parent is not self.algebra:
                raise ValueError(f"subspace {name!r} belongs elsewhere")

    def element(self, name: str) -> tuple:
        return self.named_elements[name]

    def subspace(self, name: str) -> Subspace:
        return self.named_subspaces[name]
