"""
Dense univariate polynomials over the rationals.

A polynomial is a list of `Fraction` coefficients in ascending powers with no
trailing zeros; the empty list is zero. The algebra runs on sympy: the list is
lifted into the one-variable ring QQ[x0] for division, gcd, square-free parts
and factorization, and into a sympy `Poly` for real root isolation.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction

from sympy import Poly as SympyPoly
from sympy import Rational
from sympy.polys.rings import PolyElement

from src.polarmaps.algebra.polycore import Poly, Scalar, from_qq, ring_of, to_qq
from src.polarmaps.errors import DimensionError, ZeroPolynomialError

type Univariate = list[Fraction]


def normalize(coeffs: Sequence[Scalar]) -> Univariate:
    """Strip trailing zero coefficients."""
    result = [Fraction(c) for c in coeffs]
    while result and not result[-1]:
        result.pop()
    return result


def to_element(p: Sequence[Scalar]) -> PolyElement:
    return ring_of(1).from_dict({(k,): to_qq(c) for k, c in enumerate(p) if c})


def from_element(element: PolyElement) -> Univariate:
    if not element:
        return []
    coeffs = [Fraction(0)] * (element.degree() + 1)
    for (k,), c in element.iterterms():
        coeffs[k] = from_qq(c)
    return coeffs


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def degree(p: Univariate) -> int:
    return len(p) - 1


def evaluate(p: Univariate, x: Scalar) -> Fraction:
    total = Fraction(0)
    for coeff in reversed(p):
        total = total * x + coeff
    return total


def derivative(p: Univariate) -> Univariate:
    return normalize([k * c for k, c in enumerate(p)][1:])


def divmod_(a: Univariate, b: Univariate) -> tuple[Univariate, Univariate]:
    if not b:
        raise ZeroPolynomialError("division by the zero polynomial")
    quotient, remainder = to_element(a).div(to_element(b))
    return from_element(quotient), from_element(remainder)


def monic(p: Univariate) -> Univariate:
    if not p:
        return []
    return [c / p[-1] for c in p]


def gcd(a: Univariate, b: Univariate) -> Univariate:
    """Monic greatest common divisor (zero if both are zero)."""
    return monic(from_element(to_element(a).gcd(to_element(b))))


def squarefree_part(p: Univariate) -> Univariate:
    """Monic polynomial with the roots of p, each simple."""
    if not p:
        raise ZeroPolynomialError("the zero polynomial has no square-free part")
    return monic(from_element(to_element(p).sqf_part()))


def real_root_intervals(p: Univariate) -> list[tuple[Fraction, Fraction]]:
    """
    Disjoint closed intervals [lo, hi], each holding exactly one real root of p.

    An interval collapses to a point when its root was found exactly.
    """
    if degree(p) < 1:
        return []
    rep = SympyPoly.from_list([to_qq(c) for c in reversed(p)], ring_of(1).symbols[0], domain="QQ")
    return sorted((_fraction(lo), _fraction(hi)) for (lo, hi), _ in rep.intervals())


def rational_roots(p: Univariate) -> list[Fraction]:
    """Every rational root of p, in increasing order, read off its linear factors over QQ."""
    if not p:
        raise ZeroPolynomialError("the zero polynomial has every number as a root")
    _, factors = to_element(p).factor_list()
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            linear = from_element(factor)
            roots.append(-linear[0] / linear[1])
    return sorted(roots)


def from_binary_form(form: Poly) -> tuple[Univariate, int]:
    """
    Dehomogenize a binary form R(y0, y1) at y0 = 1.

    Returns:
        The univariate polynomial r(t) = R(1, t) and the multiplicity of the
        root at infinity [0:1] (the drop of degree).
    """
    if form.num_vars != 2:
        raise DimensionError("a binary form has exactly two variables", num_vars=form.num_vars)
    if not form:
        raise ZeroPolynomialError("the zero binary form")
    total = form.degree
    coeffs = [Fraction(0)] * (total + 1)
    for (_, power), coeff in form.terms.items():
        coeffs[power] += coeff
    p = normalize(coeffs)
    return p, total - degree(p)


def binary_squarefree_degree(form: Poly) -> int:
    """Number of distinct roots of a binary form over the algebraic closure."""
    p, at_infinity = from_binary_form(form)
    finite = degree(squarefree_part(p)) if degree(p) > 0 else 0
    return finite + (1 if at_infinity else 0)
