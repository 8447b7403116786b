"""Exact rational arithmetic and linear algebra kernel."""

from .matrix import (
    Rational,
    RationalMatrix,
    independent_subset,
    inverse,
    kernel_basis,
    rank,
    rref,
    solve,
    vstack,
)
from .poly import (
    IrreducibleFactorTooLarge,
    RationalPolynomial,
    factor_low_degree,
    min_poly,
    poly_gcd,
)
from .signature import signature
from . import modp

__all__ = [
    "Rational",
    "RationalMatrix",
    "RationalPolynomial",
    "IrreducibleFactorTooLarge",
    "independent_subset",
    "inverse",
    "kernel_basis",
    "rank",
    "rref",
    "solve",
    "vstack",
    "factor_low_degree",
    "min_poly",
    "poly_gcd",
    "signature",
    "modp",
]
