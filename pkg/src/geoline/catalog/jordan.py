"""The 27-dimensional algebra of 3x3 Hermitian octonionic matrices.

An element is stored as its full 3x3 matrix of octonions, with the
Hermitian shape (real diagonal, transposed entries conjugate) enforced
at construction.  The product is the symmetrised matrix product
X * Y = (XY + YX) / 2, which keeps the Hermitian shape.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactnum.matrix import _frac
from .octonion import Octonion

_OFF_POSITIONS = ((0, 1), (0, 2), (1, 2))

DIM = 27


class JordanElement:
    """Hermitian 3x3 octonionic matrix."""

    __slots__ = ("mat",)

    def __init__(self, diag, off):
        if len(diag) != 3 or len(off) != 3:
            raise ValueError("need 3 diagonal scalars and 3 upper entries")
        diag = tuple(_frac(d) for d in diag)
        off = tuple(off)
        zero = Octonion.zero()
        rows = [[zero] * 3 for _ in range(3)]
        for i in range(3):
            c = [Fraction(0)] * 8
            c[0] = diag[i]
            rows[i][i] = Octonion(c)
        for (i, j), x in zip(_OFF_POSITIONS, off):
            rows[i][j] = x
            rows[j][i] = x.conj()
        object.__setattr__(self, "mat", tuple(tuple(r) for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("JordanElement is immutable")

    @property
    def diag(self):
        return tuple(self.mat[i][i].coords[0] for i in range(3))

    @property
    def off(self):
        return tuple(self.mat[i][j] for i, j in _OFF_POSITIONS)

    @classmethod
    def zero(cls) -> "JordanElement":
        z = Octonion.zero()
        return cls((0, 0, 0), (z, z, z))

    def __add__(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(
            tuple(a + b for a, b in zip(self.diag, other.diag)),
            tuple(a + b for a, b in zip(self.off, other.off)),
        )

    def __sub__(self, other: "JordanElement") -> "JordanElement":
        return JordanElement(
            tuple(a - b for a, b in zip(self.diag, other.diag)),
            tuple(a - b for a, b in zip(self.off, other.off)),
        )

    def scale(self, s) -> "JordanElement":
        s = _frac(s)
        return JordanElement(
            tuple(s * d for d in self.diag),
            tuple(x.scale(s) for x in self.off),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, JordanElement) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def flatten(self) -> tuple:
        out = list(self.diag)
        for x in self.off:
            out.extend(x.coords)
        return tuple(out)

    @classmethod
    def from_flat(cls, flat) -> "JordanElement":
        if len(flat) != DIM:
            raise ValueError("flat vector must have 27 entries")
        diag = flat[:3]
        off = tuple(Octonion(flat[3 + 8 * a:11 + 8 * a]) for a in range(3))
        return cls(diag, off)


def jordan_mul(x: JordanElement, y: JordanElement) -> JordanElement:
    a, b = x.mat, y.mat
    prod = [[Octonion.zero()] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            s = Octonion.zero()
            for k in range(3):
                s = s + a[i][k] * b[k][j] + b[i][k] * a[k][j]
            prod[i][j] = s.scale(Fraction(1, 2))
    for i in range(3):
        if any(prod[i][i].coords[1:]):
            raise ArithmeticError("symmetrised product left an imaginary diagonal")
    diag = tuple(prod[i][i].coords[0] for i in range(3))
    off = tuple(prod[i][j] for i, j in _OFF_POSITIONS)
    return JordanElement(diag, off)


def basis() -> list[JordanElement]:
    out = []
    z = Octonion.zero()
    for i in range(3):
        d = [0, 0, 0]
        d[i] = 1
        out.append(JordanElement(d, (z, z, z)))
    for a in range(3):
        for k in range(8):
            off = [z, z, z]
            off[a] = Octonion.unit(k)
            out.append(JordanElement((0, 0, 0), tuple(off)))
    return out


@lru_cache(maxsize=1)
def product_table() -> tuple:
    """T[a][b] = flat coordinates of basis[a] * basis[b]; entries in (1/2)Z."""
    bas = basis()
    rows = []
    for x in bas:
        rows.append(tuple(jordan_mul(x, y).flatten() for y in bas))
    return tuple(rows)
