"""Exact octonions via the Cayley-Dickson double of the quaternions.

Basis ordering: (1, e1, ..., e7) with e1, e2, e3 the quaternion units,
e4 the doubling unit and e5 = e1 e4, e6 = e2 e4, e7 = e3 e4.  A pair
(a, b) of quaternions multiplies as (a, b)(c, d) = (ac - conj(d) b,
d a + b conj(c)).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..exactnum.matrix import _frac
from .algmat import QUATERNIONS as _H


def _build_table():
    def pair_mul(x, y):
        a, b = x
        c, d = y
        left = tuple(p - q for p, q in zip(_H.mul(a, c), _H.mul(_H.conj(d), b)))
        right = tuple(p + q for p, q in zip(_H.mul(d, a), _H.mul(b, _H.conj(c))))
        return left, right

    units = []
    for idx in range(8):
        a = [Fraction(0)] * 4
        b = [Fraction(0)] * 4
        if idx < 4:
            a[idx] = Fraction(1)
        else:
            b[idx - 4] = Fraction(1)
        units.append((tuple(a), tuple(b)))
    table = []
    for i in range(8):
        row = []
        for j in range(8):
            left, right = pair_mul(units[i], units[j])
            row.append(tuple(left) + tuple(right))
        table.append(tuple(row))
    return tuple(table)


MULT_TABLE = _build_table()


class Octonion:
    """Octonion with 8 rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        coords = tuple(_frac(x) for x in coords)
        if len(coords) != 8:
            raise ValueError("octonions have 8 coordinates")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> "Octonion":
        return cls((1,) + (0,) * 7)

    @classmethod
    def unit(cls, idx: int) -> "Octonion":
        return cls(tuple(int(i == idx) for i in range(8)))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coords))

    def scale(self, s) -> "Octonion":
        s = _frac(s)
        return Octonion(tuple(s * a for a in self.coords))

    def __mul__(self, other: "Octonion") -> "Octonion":
        out = [Fraction(0)] * 8
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                f = a * b
                for k, t in enumerate(MULT_TABLE[i][j]):
                    if t:
                        out[k] += f * t
        return Octonion(out)

    def conj(self) -> "Octonion":
        c = self.coords
        return Octonion((c[0],) + tuple(-x for x in c[1:]))

    def real_part(self) -> Fraction:
        return self.coords[0]

    def norm_sq(self) -> Fraction:
        return sum((x * x for x in self.coords), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"Octonion({[str(c) for c in self.coords]})"


def alternativity_residuals(x: Octonion, y: Octonion) -> tuple[Octonion, Octonion]:
    """((xx)y - x(xy), (yx)x - y(xx)); both vanish for octonions."""
    left = (x * x) * y - x * (x * y)
    right = (y * x) * x - y * (x * x)
    return left, right
