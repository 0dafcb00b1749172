from .flexes import FlexReport, flex_count_formula, flexes, random_unimodular
from .hessian import (
    SymMatrix3,
    generic_quadric_discriminant,
    hessian_at,
    hessian_det,
    hessian_matrix,
    quadric_discriminant,
)
from .resultants import sylvester_matrix, sylvester_resultant

__all__ = [
    "FlexReport",
    "SymMatrix3",
    "flex_count_formula",
    "flexes",
    "generic_quadric_discriminant",
    "hessian_at",
    "hessian_det",
    "hessian_matrix",
    "quadric_discriminant",
    "random_unimodular",
    "sylvester_matrix",
    "sylvester_resultant",
]
