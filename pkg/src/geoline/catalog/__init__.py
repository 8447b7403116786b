"""Builders for the concrete Lie algebras behind each geodesic space family."""

from .exceptional import build_f4
from .jordan import JordanElement, jordan_mul
from .labeled import LabeledAlgebra
from .octonion import Octonion
from .orthogonal import build_e, build_so, e_matrix, so_matrix, wedge_vector
from .quaternionic import (
    build_sp,
    sp_block_indices,
    sp_central_element,
    sp_element,
    sp_matrix,
)
from .unitary import build_su, su_block_indices, su_element, su_matrix

__all__ = [
    "LabeledAlgebra",
    "Octonion",
    "JordanElement",
    "jordan_mul",
    "build_so",
    "build_e",
    "build_su",
    "build_sp",
    "build_f4",
    "wedge_vector",
    "so_matrix",
    "e_matrix",
    "su_matrix",
    "su_element",
    "su_block_indices",
    "sp_element",
    "sp_central_element",
    "sp_matrix",
    "sp_block_indices",
]
