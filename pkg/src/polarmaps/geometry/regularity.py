from __future__ import annotations

from dataclasses import dataclass

import structlog

from src import Loggers
from src.polarmaps.algebra.grobner import (
    DEFAULT_LIMITS,
    EmptinessResult,
    GroebnerLimits,
    IdealBasis,
    MonomialOrder,
    is_projectively_empty,
)
from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.errors import CascadeViolationError, RangeError
from src.polarmaps.polar import polar_coordinate_forms
from src.polarmaps.polar.polynomials import check_homogeneous, check_order

logger = structlog.getLogger(Loggers.geometry.name)


@dataclass(frozen=True, slots=True)
class RegularityReport:
    """
    Whether the degree-p polar map is defined on all of X.

    A common zero of the p-th partials lies on X automatically, so the map is
    regular exactly when the base-locus ideal has no projective zero.
    """

    p: int
    regular: bool
    base_locus_ideal: IdealBasis
    certificate: EmptinessResult


def base_locus_ideal(f: Poly, p: int) -> IdealBasis:
    forms = polar_coordinate_forms(f, p).values()
    return IdealBasis.of(forms, MonomialOrder.grevlex(f.num_vars))


def polar_regularity(f: Poly, p: int, limits: GroebnerLimits = DEFAULT_LIMITS) -> RegularityReport:
    d = check_homogeneous(f)
    check_order(p, 1, d - 1, "p")
    ideal = base_locus_ideal(f, p)
    certificate = is_projectively_empty(ideal, limits)
    logger.debug("Regularity decided", p=p, regular=certificate.empty, generators=len(ideal.generators))
    return RegularityReport(p=p, regular=certificate.empty, base_locus_ideal=ideal, certificate=certificate)


def regularity_profile(f: Poly, limits: GroebnerLimits = DEFAULT_LIMITS) -> list[RegularityReport]:
    """
    Regularity of every polar map g^1 .. g^(d-1).

    Raises:
        RangeError: d < 2.
        CascadeViolationError: A regular map is followed by an irregular one.
    """
    d = check_homogeneous(f)
    if d < 2:
        raise RangeError("a regularity profile needs degree at least 2", degree=d)
    reports = [polar_regularity(f, p, limits) for p in range(1, d)]
    for earlier, later in zip(reports, reports[1:], strict=False):
        if earlier.regular and not later.regular:
            raise CascadeViolationError(
                "regularity cascade violated",
                polynomial=str(f),
                regular_at=earlier.p,
                irregular_at=later.p,
            )
    return reports
