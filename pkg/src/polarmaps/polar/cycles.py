from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from src.polarmaps.algebra.polycore import (
    Poly,
    ProjPoint,
    multi_indices,
    multinomial,
    normalize_primitive,
    partial_derivative,
    primitive_integer_vector,
)
from src.polarmaps.errors import DimensionError, InhomogeneousError, PolarMapUndefinedError, ZeroPolynomialError
from src.polarmaps.polar.polynomials import check_homogeneous, check_order, check_point


@dataclass(frozen=True, slots=True)
class ChowVector:
    """
    Canonical coordinates of a degree-k divisor of P^n.

    `coords` is indexed by the exponent vectors of degree k in descending
    lexicographic order; entries are coprime and the first nonzero one is
    positive.
    """

    ambient_dim: int
    degree: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = math.comb(self.ambient_dim + self.degree, self.degree)
        if len(self.coords) != expected:
            raise DimensionError("wrong number of Chow coordinates", expected=expected, actual=len(self.coords))
        if primitive_integer_vector(self.coords) != self.coords:
            raise ValueError("Chow coordinates must be primitive with a positive first entry")

    def as_form(self) -> Poly:
        num_vars = self.ambient_dim + 1
        return Poly(num_vars, dict(zip(multi_indices(num_vars, self.degree), self.coords, strict=True)))


@dataclass(frozen=True, slots=True)
class PolarCycle:
    """
    Value of the degree-k polar map at a point.

    Attributes:
        form: Normalized degree-k form cutting the cycle.
        raw_form: sum_{|α|=k} (k!/α!) ∂^αF(ξ) x^α before normalization.
    """

    base_point: ProjPoint
    degree: int
    form: Poly
    raw_form: Poly
    chow: ChowVector


def chow_coordinates(g: Poly) -> ChowVector:
    if not g:
        raise ZeroPolynomialError("the zero form has no Chow coordinates")
    if not g.is_homogeneous():
        raise InhomogeneousError("Chow coordinates need a homogeneous form", polynomial=str(g))
    k = g.degree
    values = [g.coefficient(alpha) for alpha in multi_indices(g.num_vars, k)]
    return ChowVector(ambient_dim=g.num_vars - 1, degree=k, coords=primitive_integer_vector(values))


def polar_cycle(f: Poly, k: int, xi: ProjPoint) -> PolarCycle:
    """
    Degree-k polar cycle V(sum_{|α|=k} (k!/α!) ∂^αF(ξ) x^α) of F at ξ.

    Raises:
        RangeError: k outside [1, d - 1].
        PolarMapUndefinedError: Every k-th partial vanishes at ξ.
    """
    d = check_homogeneous(f)
    check_point(f, xi)
    check_order(k, 1, d - 1, "k")
    terms = {}
    for alpha in multi_indices(f.num_vars, k):
        value = partial_derivative(f, alpha).evaluate(xi.coords)
        if value:
            terms[alpha] = value * multinomial(alpha)
    raw = Poly(f.num_vars, terms)
    if not raw:
        raise PolarMapUndefinedError("polar map undefined at point", point=str(xi), k=k)
    form = normalize_primitive(raw)
    return PolarCycle(base_point=xi, degree=k, form=form, raw_form=raw, chow=chow_coordinates(form))


def gauss_map(f: Poly, xi: ProjPoint) -> PolarCycle:
    """The tangent hyperplane sum_i ∂F/∂x_i(ξ) x_i."""
    return polar_cycle(f, 1, xi)


@dataclass(frozen=True, slots=True)
class CascadeCheck:
    all_s_vanish: bool
    implied: bool
    value_at_point: Fraction


def _order_vanishes(f: Poly, xi: ProjPoint, s: int) -> bool:
    return all(not partial_derivative(f, alpha).evaluate(xi.coords) for alpha in multi_indices(f.num_vars, s))


def vanishing_cascade(f: Poly, xi: ProjPoint, s: int) -> CascadeCheck:
    """
    If every s-th partial of F vanishes at ξ, so does every partial of lower order, F included.

    `implied` is vacuously true when some s-th partial is nonzero at ξ.
    """
    check_point(f, xi)
    check_order(s, 1, f.degree)
    value = f.evaluate(xi.coords)
    all_vanish = _order_vanishes(f, xi, s)
    implied = not all_vanish or all(_order_vanishes(f, xi, t) for t in range(s))
    return CascadeCheck(all_s_vanish=all_vanish, implied=implied, value_at_point=value)


def point_multiplicity(f: Poly, xi: ProjPoint) -> int:
    """Least s with a nonzero s-th partial at ξ; 0 off the hypersurface."""
    check_point(f, xi)
    d = f.degree
    return next(s for s in range(d + 1) if not _order_vanishes(f, xi, s))
