from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.polarmaps.algebra import univariate
from src.polarmaps.errors import DimensionError, ZeroPolynomialError
from src.polarmaps.presentation.cli.parser import parse_poly


def expand(roots: list[Fraction]) -> univariate.Univariate:
    p = [Fraction(1)]
    for r in roots:
        shifted = [Fraction(0), *p]
        p = univariate.normalize([a - r * b for a, b in zip(shifted, [*p, Fraction(0)], strict=True)])
    return p


def test_divmod_and_gcd():
    a = expand([Fraction(1), Fraction(2), Fraction(3)])
    b = expand([Fraction(2), Fraction(5)])
    quotient, remainder = univariate.divmod_(a, b)
    assert univariate.degree(quotient) == 1
    assert univariate.degree(remainder) < 2
    assert univariate.gcd(a, b) == expand([Fraction(2)])


def test_squarefree_part_drops_multiplicity():
    p = expand([Fraction(1), Fraction(1), Fraction(-2)])
    assert univariate.squarefree_part(p) == expand([Fraction(1), Fraction(-2)])


def test_rational_roots_ignores_irrational_and_complex_roots():
    # (2t - 1)(t + 3)(t^2 + 1)(t^2 - 2)
    p = univariate.normalize([-1, 2])
    for factor in ([3, 1], [1, 0, 1], [-2, 0, 1]):
        p = univariate.normalize(
            [sum(p[i] * factor[k - i] for i in range(len(p)) if 0 <= k - i < len(factor)) for k in range(len(p) + 2)]
        )
    assert univariate.rational_roots(p) == [Fraction(-3), Fraction(1, 2)]


def test_real_root_intervals_isolate():
    p = expand([Fraction(-1), Fraction(0), Fraction(1)])
    intervals = univariate.real_root_intervals(p)
    assert len(intervals) == 3
    for (lo, hi), root in zip(intervals, [-1, 0, 1], strict=True):
        assert lo <= root <= hi
    for (_, hi), (lo, _) in zip(intervals, intervals[1:], strict=False):
        assert hi <= lo


def test_real_root_intervals_skip_complex_roots():
    # (t^2 + 1)(t^2 - 2)
    p = univariate.normalize([-2, 0, -1, 0, 1])
    intervals = univariate.real_root_intervals(p)
    assert len(intervals) == 2
    for lo, hi in intervals:
        assert univariate.evaluate(p, lo) * univariate.evaluate(p, hi) <= 0


def test_zero_polynomial_has_no_roots_list():
    with pytest.raises(ZeroPolynomialError):
        univariate.rational_roots([])


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=1, max_size=5))
def test_rational_roots_recovers_planted_roots(roots):
    assert univariate.rational_roots(expand(roots)) == sorted(set(roots))


def test_binary_form_dehomogenizes_with_root_at_infinity():
    # y1 * (y1 - 2 y0) * y0: roots t = 0, t = 2 and [0:1]
    form = parse_poly("x0*x1^2 - 2*x0^2*x1")
    finite, at_infinity = univariate.from_binary_form(form)
    assert at_infinity == 1
    assert univariate.rational_roots(finite) == [Fraction(0), Fraction(2)]
    assert univariate.binary_squarefree_degree(form) == 3


def test_binary_squarefree_degree_counts_distinct_roots():
    assert univariate.binary_squarefree_degree(parse_poly("(x0 - x1)^3 * x1^2")) == 2
    with pytest.raises(DimensionError):
        univariate.from_binary_form(parse_poly("x0*x1*x2"))
