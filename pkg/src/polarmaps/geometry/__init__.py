from .cones import ConeReport, PolarLinearMatrix, is_cone, polar_linear_matrix
from .images import (
    ImageDegreeCheck,
    PolarClassReport,
    dual_degree_formula,
    image_degree_formula,
    implicitize_polar_image,
    polar_class,
    polar_image_dimension,
    verify_image_degree,
)
from .regularity import RegularityReport, base_locus_ideal, polar_regularity, regularity_profile
from .sampling import DEFAULT_SAMPLING, SamplingPolicy

__all__ = [
    "DEFAULT_SAMPLING",
    "ConeReport",
    "ImageDegreeCheck",
    "PolarClassReport",
    "PolarLinearMatrix",
    "RegularityReport",
    "SamplingPolicy",
    "base_locus_ideal",
    "dual_degree_formula",
    "image_degree_formula",
    "implicitize_polar_image",
    "is_cone",
    "polar_class",
    "polar_image_dimension",
    "polar_linear_matrix",
    "polar_regularity",
    "regularity_profile",
    "verify_image_degree",
]
