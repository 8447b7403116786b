"""Exact univariate polynomials, minimal polynomials, small factorization."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .matrix import RationalMatrix, _frac


class IrreducibleFactorTooLarge(ValueError):
    """A factor of degree >= 3 resisted the supported factor shapes."""


class RationalPolynomial:
    """Coefficients lowest degree first; trailing zeros stripped."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence):
        cs = [_frac(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPolynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def leading(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coefficients[-1]

    def monic(self) -> "RationalPolynomial":
        if self.is_zero():
            return self
        lc = self.leading
        return RationalPolynomial([c / lc for c in self.coefficients])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, A: RationalMatrix) -> RationalMatrix:
        acc = RationalMatrix.zeros(A.rows, A.cols)
        for c in reversed(self.coefficients):
            acc = acc @ A + RationalMatrix.identity(A.rows).scale(c)
        return acc

    def derivative(self) -> "RationalPolynomial":
        return RationalPolynomial(
            [k * c for k, c in enumerate(self.coefficients)][1:])

    def __eq__(self, other):
        return (isinstance(other, RationalPolynomial)
                and self.coefficients == other.coefficients)

    def __hash__(self):
        return hash(self.coefficients)

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return RationalPolynomial(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
             for i in range(n)])

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + other.scale(-1)

    def scale(self, s) -> "RationalPolynomial":
        s = _frac(s)
        return RationalPolynomial([s * c for c in self.coefficients])

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        if self.is_zero() or other.is_zero():
            return RationalPolynomial([])
        a, b = self.coefficients, other.coefficients
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPolynomial(out)

    def divmod(self, other: "RationalPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coefficients)
        d = other.degree
        lc = other.leading
        q = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            if rem[i]:
                f = rem[i] / lc
                q[i - d] = f
                for j, c in enumerate(other.coefficients):
                    rem[i - d + j] -= f * c
        return RationalPolynomial(q), RationalPolynomial(rem)

    def __repr__(self):
        return f"RationalPolynomial({list(self.coefficients)})"


def poly_gcd(a: RationalPolynomial, b: RationalPolynomial) -> RationalPolynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


def min_poly(A: RationalMatrix) -> RationalPolynomial:
    """Monic minimal polynomial by exact Krylov dependence on powers of A.

    Maintains a reduced basis of the flattened powers Id, A, A^2, ...
    together with the combination that produced each reduced vector; the
    first power that reduces to zero hands back the dependence, which is
    the minimal polynomial.
    """
    if A.rows != A.cols:
        raise ValueError("square matrix required")
    n = A.rows
    if n == 0:
        return RationalPolynomial([0, 1])
    reduced: list[list[Fraction]] = []
    pivots: list[int] = []
    combos: list[list[Fraction]] = []
    power = RationalMatrix.identity(n)
    for k in range(n * n + 1):
        v = list(power.entries)
        combo = [Fraction(0)] * (k + 1)
        combo[k] = Fraction(1)
        for prow, pcol, pcombo in zip(reduced, pivots, combos):
            if v[pcol]:
                f = v[pcol]
                v = [a - f * b for a, b in zip(v, prow)]
                combo = [a - f * (pcombo[i] if i < len(pcombo) else 0)
                         for i, a in enumerate(combo)]
        pivot = next((j for j, x in enumerate(v) if x), None)
        if pivot is None:
            return RationalPolynomial(combo).monic()
        inv = 1 / v[pivot]
        reduced.append([x * inv for x in v])
        pivots.append(pivot)
        combos.append([x * inv for x in combo])
        power = power @ A
    raise AssertionError("dependence must occur by degree n^2")


def factor_low_degree(p: RationalPolynomial) -> list[tuple[RationalPolynomial, int]]:
    """Factor into monic irreducibles with multiplicities, degree <= 8.

    The factorization itself is delegated to sympy, which stays fast
    for the large integer coefficients that minimal polynomials of
    exactly reduced matrices routinely produce; the result is converted
    back and re-checked by exact multiplication before returning.  An
    irreducible factor of degree >= 3 raises IrreducibleFactorTooLarge.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if p.degree > 8:
        raise ValueError("degree above the supported bound")
    import sympy  # deferred: callers that never factor skip the start-up cost

    work = p.monic()
    gen = sympy.Symbol("x")
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator)
         for c in reversed(work.coefficients)], gen, domain="QQ")
    out = []
    for fac, mult in poly.factor_list()[1]:
        f = RationalPolynomial(
            [Fraction(int(c.p), int(c.q))
             for c in reversed(fac.all_coeffs())]).monic()
        if f.degree >= 3:
            raise IrreducibleFactorTooLarge(
                f"irreducible factor of degree {f.degree} >= 3")
        out.append((f, int(mult)))
    back = RationalPolynomial([1])
    for f, m in out:
        for _ in range(m):
            back = back * f
    if back != work:
        raise ArithmeticError("factorization failed to multiply back")
    return sorted(out, key=lambda fm: (fm[0].degree, fm[0].coefficients))
