"""
Images of polar maps: degree, dimension, class and defining ideal.

The degree computed here is the pushforward degree: the number of points,
with multiplicity, in which X meets the pullback of n - 1 generic
hyperplanes. It equals d (d-p)^(n-1) for every regular polar map and is not
divided by the degree of the map onto its image.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import structlog

from src import Loggers
from src.polarmaps.algebra.grobner import (
    DEFAULT_LIMITS,
    GroebnerBasis,
    GroebnerLimits,
    IdealBasis,
    MonomialOrder,
    eliminate,
    normal_form,
    zero_dim_degree,
)
from src.polarmaps.algebra.linalg import poly_determinant
from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.errors import DegenerateError, DimensionError, PreconditionError, RangeError
from src.polarmaps.geometry.regularity import polar_regularity
from src.polarmaps.geometry.sampling import DEFAULT_SAMPLING, SamplingPolicy
from src.polarmaps.polar import polar_coordinate_forms
from src.polarmaps.polar.polynomials import check_homogeneous, check_order

logger = structlog.getLogger(Loggers.geometry.name)


def image_degree_formula(d: int, p: int, n: int) -> int:
    """d (d-p)^(n-1)"""
    if not 1 <= p < d:
        raise RangeError("p must satisfy 1 <= p < d", p=p, d=d)
    if n < 2:
        raise RangeError("the ambient dimension must be at least 2", n=n)
    return d * (d - p) ** (n - 1)


def dual_degree_formula(d: int, n: int) -> int:
    """Degree of the dual of a smooth degree-d hypersurface of P^n."""
    return image_degree_formula(d, 1, n)


@dataclass(frozen=True, slots=True)
class ImageDegreeCheck:
    bezout_count: int
    formula: int
    agree: bool
    attempts: int
    slices: tuple[Poly, ...]


def _require_regular(f: Poly, p: int, limits: GroebnerLimits) -> None:
    report = polar_regularity(f, p, limits)
    if not report.regular:
        raise PreconditionError(
            "the polar map is not regular",
            p=p,
            base_locus=report.certificate.witness,
        )


def verify_image_degree(
    f: Poly,
    p: int,
    seed: int | None = None,
    sampling: SamplingPolicy = DEFAULT_SAMPLING,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> ImageDegreeCheck:
    """
    Count the points of X on n - 1 pulled-back random hyperplanes.

    Each hyperplane of the Chow space pulls back to a random integer
    combination of the scaled p-th partials. Slices that do not cut X in a
    finite set are re-drawn.

    Raises:
        PreconditionError: g^p is not regular.
        DegenerateError: Every attempt produced a degenerate slice.
    """
    d = check_homogeneous(f)
    n = f.num_vars - 1
    formula = image_degree_formula(d, p, n)
    _require_regular(f, p, limits)
    sampling = sampling.with_seed(seed)
    forms = [g for g in polar_coordinate_forms(f, p).values() if g]
    bound = sampling.slice_coefficient_bound
    for attempt in range(1, sampling.slice_retries + 1):
        rng = sampling.rng("image-degree", attempt)
        slices = []
        for _ in range(n - 1):
            combination = Poly.zero(f.num_vars)
            for g in forms:
                combination = combination + g.scale(rng.randint(-bound, bound))
            slices.append(combination)
        if any(not s for s in slices):
            logger.debug("Zero slice drawn", attempt=attempt)
            continue
        try:
            count = zero_dim_degree(IdealBasis.of([f, *slices]), limits)
        except DimensionError as error:
            logger.debug("Slice not zero-dimensional", attempt=attempt, **error.context)
            continue
        logger.info("Image degree counted", p=p, count=count, formula=formula, attempt=attempt)
        return ImageDegreeCheck(
            bezout_count=count,
            formula=formula,
            agree=count == formula,
            attempts=attempt,
            slices=tuple(slices),
        )
    raise DegenerateError(
        "every random slice was degenerate",
        retries=sampling.slice_retries,
        seed=sampling.seed,
    )


def _jacobian(forms: list[Poly]) -> list[list[Poly]]:
    return [[g.diff(i) for i in range(g.num_vars)] for g in forms]


def polar_image_dimension(f: Poly, p: int) -> int:
    """
    Dimension of g^p(X), with no regularity assumption on the polar map.

    The Jacobian of the scaled p-th partials is stacked with the gradient of
    F; its rank at a generic point of X is the largest r with an r x r minor
    not divisible by F, and the image has dimension r - 2. Divisibility by F
    detects vanishing on X only when F is irreducible, which is assumed.
    A base locus only removes a proper closed subset of X and does not change
    the generic rank.
    """
    d = check_homogeneous(f)
    check_order(p, 1, d - 1, "p")
    forms = [g for g in polar_coordinate_forms(f, p).values() if g]
    gradient = [f.diff(i) for i in range(f.num_vars)]
    matrix = [*_jacobian(forms), gradient]
    modulus = GroebnerBasis((f,), MonomialOrder.grevlex(f.num_vars))
    width = f.num_vars
    for size in range(min(len(matrix), width), 0, -1):
        for rows in itertools.combinations(range(len(matrix)), size):
            for cols in itertools.combinations(range(width), size):
                minor = poly_determinant([[matrix[r][c] for c in cols] for r in rows])
                if minor and normal_form(minor, modulus):
                    logger.debug("Generic rank found", p=p, rank=size, rows=rows, cols=cols)
                    return size - 2
    return -1


@dataclass(frozen=True, slots=True)
class PolarClassReport:
    """Integer data of [g^p] = c_1(O_X(d - p)) and its ratio to the Gauss map class."""

    p: int
    class_coeff: int
    ratio_to_gauss: Fraction


def polar_class(f: Poly, p: int) -> PolarClassReport:
    d = check_homogeneous(f)
    check_order(p, 1, d - 1, "p")
    return PolarClassReport(p=p, class_coeff=d - p, ratio_to_gauss=Fraction(d - p, d - 1))


def implicitize_polar_image(f: Poly, p: int, limits: GroebnerLimits = DEFAULT_LIMITS) -> IdealBasis:
    """
    Ideal of the closure of g^p(X) in the Chow coordinates y_α.

    Eliminates ξ from the graph ideal <y_α - (p!/α!) ∂^αF(ξ), F(ξ)> in the
    ring with ξ first and y after it (one y per α, in Chow index order).
    """
    d = check_homogeneous(f)
    check_order(p, 1, d - 1, "p")
    forms = list(polar_coordinate_forms(f, p).values())
    n1 = f.num_vars
    ring = n1 + len(forms)
    graph = [f.extend(ring)]
    for j, g in enumerate(forms):
        graph.append(Poly.variable(n1 + j, ring) - g.extend(ring))
    image = eliminate(IdealBasis.of(graph, MonomialOrder.grevlex(ring)), len(forms), limits)
    logger.info("Polar image implicitized", p=p, generators=len(image.generators))
    return image
