"""
Polar polynomials and the identities they satisfy.

For a point p and 1 <= s <= d the s-th polar polynomial is the s-th power of
the directional derivative along p, expanded over ordered derivative tuples:

    Δ_p^s F(x) = sum_{|α|=s} (s!/α!) p^α ∂^αF(x)

No 1/s! normalization is applied; every downstream statement is projective.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from src.polarmaps.algebra.polycore import (
    MultiIndex,
    Poly,
    ProjPoint,
    falling_factorial,
    multi_indices,
    multinomial,
    partial_derivative,
)
from src.polarmaps.errors import DimensionError, InhomogeneousError, RangeError


def check_order(s: int, low: int, high: int, name: str = "s") -> None:
    if not low <= s <= high:
        raise RangeError(f"{name} must lie in [{low}, {high}]", **{name: s, "low": low, "high": high})


def check_homogeneous(f: Poly) -> int:
    d = f.degree
    if not f.is_homogeneous():
        raise InhomogeneousError("the polynomial is not homogeneous", polynomial=str(f))
    return d


def check_point(f: Poly, point: ProjPoint) -> None:
    if len(point) != f.num_vars:
        raise DimensionError("point dimension does not match", num_vars=f.num_vars, point=str(point))


def polar_polynomial(f: Poly, point: ProjPoint, s: int) -> Poly:
    """Δ_p^s F as a polynomial in x, homogeneous of degree d - s when F is."""
    check_point(f, point)
    check_order(s, 1, f.degree)
    result = Poly.zero(f.num_vars)
    for alpha in multi_indices(f.num_vars, s):
        weight = multinomial(alpha) * math.prod(c**a for c, a in zip(point.coords, alpha, strict=True))
        if weight:
            result = result + partial_derivative(f, alpha).scale(weight)
    return result


def polar_coordinate_forms(f: Poly, k: int) -> dict[MultiIndex, Poly]:
    """
    Coordinate functions of the degree-k polar map.

    Maps α (|α| = k, Chow index order) to (k!/α!) ∂^αF; evaluated at ξ they
    are the unnormalized Chow coordinates of the degree-k polar cycle.
    """
    check_order(k, 1, f.degree, "k")
    return {alpha: partial_derivative(f, alpha).scale(multinomial(alpha)) for alpha in multi_indices(f.num_vars, k)}


@dataclass(frozen=True, slots=True)
class EulerCheck:
    holds: bool
    lhs: Poly
    rhs: Poly


def euler_identity_check(f: Poly, s: int) -> EulerCheck:
    """
    Generalized Euler relation d(d-1)...(d-s+1) F = sum_{|α|=s} (s!/α!) ∂^αF x^α.
    """
    d = check_homogeneous(f)
    check_order(s, 1, d)
    lhs = f.scale(falling_factorial(d, s))
    rhs = Poly.zero(f.num_vars)
    for alpha in multi_indices(f.num_vars, s):
        derivative = partial_derivative(f, alpha)
        if derivative:
            rhs = rhs + derivative.shift(alpha, multinomial(alpha))
    return EulerCheck(holds=lhs == rhs, lhs=lhs, rhs=rhs)


@dataclass(frozen=True, slots=True)
class ReciprocitySides:
    """
    Both sides of the reciprocity identity in the doubled ring.

    Variables 0..n are the point ξ, variables n+1..2n+1 are x.
    """

    lhs: Poly
    rhs: Poly

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _directional_power(f: Poly, s: int, direction_offset: int, argument_offset: int) -> Poly:
    """Σ_{|α|=s} (s!/α!) v^α ∂^αF(w) in the doubled ring, v and w placed at the given offsets."""
    n1 = f.num_vars
    ring = 2 * n1
    result = Poly.zero(ring)
    for alpha in multi_indices(n1, s):
        derivative = partial_derivative(f, alpha)
        if not derivative:
            continue
        shift = [0] * ring
        shift[direction_offset : direction_offset + n1] = alpha
        result = result + derivative.extend(ring, argument_offset).shift(tuple(shift), multinomial(alpha))
    return result


def reciprocity_sides(f: Poly, s: int) -> ReciprocitySides:
    d = check_homogeneous(f)
    check_order(s, 1, d - 1)
    n1 = f.num_vars
    # Δ_ξ^s F(x) and Δ_x^(d-s) F(ξ)
    at_x = _directional_power(f, s, 0, n1)
    at_xi = _directional_power(f, d - s, n1, 0)
    return ReciprocitySides(
        lhs=at_x.scale(math.factorial(d - s)),
        rhs=at_xi.scale(math.factorial(s)),
    )


def reciprocity_check(f: Poly, s: int) -> bool:
    """(d-s)! Δ_ξ^s F(x) = s! Δ_x^(d-s) F(ξ) as polynomials in (ξ, x)."""
    return reciprocity_sides(f, s).holds
