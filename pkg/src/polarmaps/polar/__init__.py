from .cycles import (
    CascadeCheck,
    ChowVector,
    PolarCycle,
    chow_coordinates,
    gauss_map,
    point_multiplicity,
    polar_cycle,
    vanishing_cascade,
)
from .polynomials import (
    EulerCheck,
    ReciprocitySides,
    euler_identity_check,
    polar_coordinate_forms,
    polar_polynomial,
    reciprocity_check,
    reciprocity_sides,
)

__all__ = [
    "CascadeCheck",
    "ChowVector",
    "EulerCheck",
    "PolarCycle",
    "ReciprocitySides",
    "chow_coordinates",
    "euler_identity_check",
    "gauss_map",
    "point_multiplicity",
    "polar_coordinate_forms",
    "polar_cycle",
    "polar_polynomial",
    "reciprocity_check",
    "reciprocity_sides",
    "vanishing_cascade",
]
