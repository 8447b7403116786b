"""Dense exact linear algebra over the rationals.

Everything here is certificate-grade: no floating point, no tolerance
knobs.  Matrices are immutable; operations return new objects.  Large
kernel problems are routed through the multi-modular pipeline in
:mod:`geoline.exactnum.modp`, whose output is verified exactly before
being returned, so callers never see an uncertified answer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction

# Above this entry count kernel_basis switches to the certified modular
# pipeline; below it a direct Fraction elimination is faster.
_DENSE_LIMIT = 4000


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class RationalMatrix:
    """Immutable dense matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(_frac(e) for e in entries)
        if rows < 0 or cols < 0 or len(entries) != rows * cols:
            raise ValueError(f"need {rows}x{cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [Fraction(int(i == j)) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [Fraction(0)] * (rows * cols))

    @classmethod
    def column(cls, vec: Sequence) -> "RationalMatrix":
        vec = list(vec)
        return cls(len(vec), 1, vec)

    @classmethod
    def diagonal(cls, diag: Sequence) -> "RationalMatrix":
        diag = list(diag)
        n = len(diag)
        return cls(n, n, [diag[i] if i == j else Fraction(0)
                          for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.cols, self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, RationalMatrix)
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._samedims(other)
        return RationalMatrix(self.rows, self.cols,
                              [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._samedims(other)
        return RationalMatrix(self.rows, self.cols,
                              [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, s) -> "RationalMatrix":
        s = _frac(s)
        return RationalMatrix(self.rows, self.cols, [s * a for a in self.entries])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.rows}x{self.cols} @ "
                             f"{other.rows}x{other.cols}")
        n, m, k = self.rows, other.cols, self.cols
        a, b = self.entries, other.entries
        out = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                s = Fraction(0)
                for t in range(k):
                    x = arow[t]
                    if x:
                        s += x * b[t * m + j]
                out.append(s)
        return RationalMatrix(n, m, out)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product, vector given and returned as a tuple."""
        vec = [_frac(v) for v in vec]
        if len(vec) != self.cols:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            row = self.row(i)
            out.append(sum((a * v for a, v in zip(row, vec) if a), Fraction(0)))
        return tuple(out)

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entry(i, i) for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self.entry(i, j) == self.entry(j, i)
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def _samedims(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("dimension mismatch")

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"


def vstack(mats: Sequence[RationalMatrix]) -> RationalMatrix:
    mats = list(mats)
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise ValueError("column counts differ")
    entries = []
    for m in mats:
        entries.extend(m.entries)
    return RationalMatrix(sum(m.rows for m in mats), cols, entries)


def rref(A: RationalMatrix) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and pivot column indices, exact."""
    rows = A.to_rows()
    n, m = A.rows, A.cols
    piv_cols: list[int] = []
    r = 0
    for c in range(m):
        if r == n:
            break
        sel = next((i for i in range(r, n) if rows[i][c]), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        prow = rows[r]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], prow)]
        piv_cols.append(c)
        r += 1
    return RationalMatrix.from_rows(rows) if n else A, piv_cols


def rank(A: RationalMatrix) -> int:
    return len(rref(A)[1])


def _kernel_from_rref(R: RationalMatrix, piv_cols: list[int], ncols: int) -> list[tuple]:
    free = [c for c in range(ncols) if c not in set(piv_cols)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for j, pc in enumerate(piv_cols):
            v[pc] = -R.entry(j, f)
        basis.append(tuple(v))
    return basis


def kernel_basis(A: RationalMatrix) -> list[tuple]:
    """Exact basis of the right null space; empty list when trivial.

    Small problems run a direct Fraction elimination.  Larger ones go
    through the multi-modular pipeline, whose candidate basis is checked
    by an exact A @ v = 0 multiplication before being accepted, so both
    routes return certified results.
    """
    if A.rows * A.cols <= _DENSE_LIMIT:
        R, piv = rref(A)
        return _kernel_from_rref(R, piv, A.cols)
    from . import modp
    try:
        return modp.certified_kernel_rows(A.to_rows())
    except modp.ModularPipelineError:
        R, piv = rref(A)
        return _kernel_from_rref(R, piv, A.cols)


def solve(A: RationalMatrix, b: Sequence) -> tuple | None:
    """One exact solution of A x = b, or None when inconsistent."""
    b = [_frac(x) for x in b]
    if len(b) != A.rows:
        raise ValueError("dimension mismatch")
    aug = RationalMatrix.from_rows(
        [list(A.row(i)) + [b[i]] for i in range(A.rows)])
    R, piv = rref(aug)
    if A.cols in piv:
        return None
    x = [Fraction(0)] * A.cols
    for j, pc in enumerate(piv):
        x[pc] = R.entry(j, A.cols)
    return tuple(x)


def inverse(A: RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan; raises on singular input."""
    if A.rows != A.cols:
        raise ValueError("inverse of a non-square matrix")
    n = A.rows
    aug = RationalMatrix.from_rows(
        [list(A.row(i)) + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)])
    R, piv = rref(aug)
    if piv != list(range(n)):
        raise ValueError("matrix is singular")
    return RationalMatrix.from_rows(
        [[R.entry(i, n + j) for j in range(n)] for i in range(n)])


def independent_subset(vectors: Sequence[Sequence]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in order."""
    kept: list[int] = []
    reduced: list[list[Fraction]] = []
    pivots: list[int] = []
    for idx, vec in enumerate(vectors):
        v = [_frac(x) for x in vec]
        for prow, pcol in zip(reduced, pivots):
            if v[pcol]:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            continue
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        reduced.append(v)
        pivots.append(pivot)
        kept.append(idx)
    return kept
