"""
Flexes of smooth plane curves.

After a random unimodular change of coordinates the curve and its Hessian
both have constant leading coefficients in the last variable, so their
resultant in that variable is a binary form of degree 3d(d-2): the flex count
with multiplicity. Rational roots of the form are lifted back to rational
flexes through the common roots of the curve and the Hessian.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import structlog

from src import Loggers
from src.polarmaps.algebra import univariate
from src.polarmaps.algebra.grobner import DEFAULT_LIMITS, GroebnerLimits
from src.polarmaps.algebra.linalg import determinant
from src.polarmaps.algebra.polycore import Poly, ProjPoint
from src.polarmaps.curves.hessian import hessian_det, require_plane
from src.polarmaps.curves.resultants import sylvester_resultant
from src.polarmaps.errors import DegenerateError, PreconditionError, RangeError
from src.polarmaps.geometry.regularity import polar_regularity
from src.polarmaps.geometry.sampling import DEFAULT_SAMPLING, SamplingPolicy
from src.polarmaps.polar.polynomials import check_homogeneous

logger = structlog.getLogger(Loggers.geometry.name)

type IntMatrix = tuple[tuple[int, ...], ...]

_UNIMODULAR_DRAWS = 20_000


def flex_count_formula(d: int) -> int:
    return 3 * d * (d - 2)


@dataclass(frozen=True, slots=True)
class FlexReport:
    """
    Attributes:
        resultant_degree: Degree of Res(F, Hess F) after the coordinate change.
        count_with_multiplicity: Flexes counted with multiplicity.
        squarefree_degree: Distinct roots of the resultant over the algebraic closure.
        rational_flexes: Flexes with rational coordinates, primitive and sorted.
        coordinate_change: Integer matrix M with x = M y.
        expected: 3d(d-2).
    """

    d: int
    resultant_degree: int
    count_with_multiplicity: int
    squarefree_degree: int
    rational_flexes: tuple[ProjPoint, ...]
    coordinate_change: IntMatrix
    attempts: int
    expected: int


def random_unimodular(rng: random.Random, bound: int) -> IntMatrix | None:
    """Rejection-sample a 3 x 3 integer matrix with entries in [-bound, bound] and determinant ±1."""
    for _ in range(_UNIMODULAR_DRAWS):
        rows = tuple(tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(3))
        if abs(determinant(rows)) == 1:
            return rows
    return None


def _substitute(f: Poly, matrix: IntMatrix) -> Poly:
    ys = Poly.variables(3)
    images = [sum((ys[j].scale(matrix[i][j]) for j in range(3)), Poly.zero(3)) for i in range(3)]
    return f.compose(images)


def _as_binary(form: Poly) -> Poly:
    return Poly(2, {alpha[:2]: c for alpha, c in form.terms.items()})


def _fiber(poly: Poly, u: Fraction, v: Fraction) -> univariate.Univariate:
    """poly(u, v, z) as a univariate polynomial in z."""
    return univariate.normalize([c.evaluate((u, v, 0)) for c in poly.coefficients_in(2)])


def _lift(g: Poly, hessian: Poly, u: Fraction, v: Fraction) -> list[Fraction]:
    common = univariate.gcd(_fiber(g, u, v), _fiber(hessian, u, v))
    if univariate.degree(common) < 1:
        return []
    return univariate.rational_roots(common)


def _rational_flexes(g: Poly, hessian: Poly, binary: Poly, matrix: IntMatrix) -> tuple[ProjPoint, ...]:
    finite, at_infinity = univariate.from_binary_form(binary)
    projections = []
    if univariate.degree(finite) > 0:
        projections = [(Fraction(1), t) for t in univariate.rational_roots(finite)]
    if at_infinity:
        projections.append((Fraction(0), Fraction(1)))
    found: dict[ProjPoint, None] = {}
    for u, v in projections:
        for z in _lift(g, hessian, u, v):
            y = (u, v, z)
            x = [sum((matrix[i][j] * y[j] for j in range(3)), Fraction(0)) for i in range(3)]
            found.setdefault(ProjPoint(ProjPoint(x).primitive()), None)
    return tuple(sorted(found, key=ProjPoint.primitive))


def flexes(
    f: Poly,
    seed: int | None = None,
    sampling: SamplingPolicy = DEFAULT_SAMPLING,
    limits: GroebnerLimits = DEFAULT_LIMITS,
) -> FlexReport:
    """
    Count the flexes of a smooth plane curve of degree d >= 3.

    Raises:
        DimensionError: F is not a ternary form.
        RangeError: d < 3.
        PreconditionError: The curve is singular.
        DegenerateError: No admissible coordinate change within the retry limit.
    """
    require_plane(f)
    d = check_homogeneous(f)
    if d < 3:
        raise RangeError("flexes need a curve of degree at least 3", degree=d)
    smooth = polar_regularity(f, 1, limits)
    if not smooth.regular:
        raise PreconditionError("the curve is singular", singular_locus=smooth.certificate.witness)
    sampling = sampling.with_seed(seed)
    hessian_degree = 3 * (d - 2)

    for attempt in range(1, sampling.coordinate_retries + 1):
        matrix = random_unimodular(sampling.rng("flexes", attempt), sampling.coordinate_entry_bound)
        if matrix is None:
            continue
        g = _substitute(f, matrix)
        hessian = hessian_det(g)
        if not hessian or g.degree_in(2) != d or hessian.degree_in(2) != hessian_degree:
            logger.debug("Coordinate change rejected", attempt=attempt, matrix=matrix)
            continue
        resultant = sylvester_resultant(g, hessian, 2, require_full_degree=True)
        if not resultant:
            continue
        binary = _as_binary(resultant)
        report = FlexReport(
            d=d,
            resultant_degree=resultant.degree,
            count_with_multiplicity=resultant.degree,
            squarefree_degree=univariate.binary_squarefree_degree(binary),
            rational_flexes=_rational_flexes(g, hessian, binary, matrix),
            coordinate_change=matrix,
            attempts=attempt,
            expected=flex_count_formula(d),
        )
        logger.info(
            "Flexes counted",
            d=d,
            count=report.count_with_multiplicity,
            distinct=report.squarefree_degree,
            rational=len(report.rational_flexes),
            attempt=attempt,
        )
        return report

    raise DegenerateError(
        "no admissible coordinate change found",
        retries=sampling.coordinate_retries,
        seed=sampling.seed,
    )
