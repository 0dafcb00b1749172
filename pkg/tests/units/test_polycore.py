from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.polarmaps.algebra.polycore import (
    ArithOp,
    Poly,
    ProjPoint,
    arith,
    degree_check,
    falling_factorial,
    grevlex_key,
    multi_indices,
    multinomial,
    normalize_primitive,
    partial_derivative,
    primitive_integer_vector,
)
from src.polarmaps.errors import DimensionError, RangeError, UndefinedDegreeError, ZeroPolynomialError
from src.polarmaps.presentation.cli.parser import parse_poly
from tests.corpus import homogeneous_forms, polynomials


def test_multi_indices_descending_lex():
    assert multi_indices(3, 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
    assert len(multi_indices(4, 3)) == 20


def test_combinatorics():
    assert multinomial((1, 1, 0)) == 2
    assert multinomial((2, 1)) == 3
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(2, 3) == 0


def test_grevlex_ties_broken_by_last_variable():
    # x0*x2 < x1^2 in grevlex with x0 > x1 > x2
    assert grevlex_key((0, 2, 0)) > grevlex_key((1, 0, 1))
    assert grevlex_key((2, 0, 0)) > grevlex_key((1, 1, 0))


def test_arithmetic_cancels_to_zero():
    x0, x1 = Poly.variables(2)
    f = (x0 + x1) * (x0 - x1)
    assert f == x0**2 - x1**2
    assert (f - f).is_zero()
    assert str(f) == "x0^2 - x1^2"


def test_arith_dispatcher():
    x0, x1 = Poly.variables(2)
    assert arith(x0, x1, ArithOp.ADD) == x0 + x1
    assert arith(x0, Fraction(1, 2), ArithOp.SCALAR_MUL) == x0.scale(Fraction(1, 2))
    assert arith(x0 + x1, 3, ArithOp.POW) == (x0 + x1) * (x0 + x1) * (x0 + x1)


def test_arith_rejects_mixed_rings():
    with pytest.raises(DimensionError):
        arith(Poly.variable(0, 2), Poly.variable(0, 3), ArithOp.MUL)


def test_negative_power_is_a_range_error():
    with pytest.raises(RangeError):
        Poly.variable(0, 2) ** -1


def test_degree_check():
    info = degree_check(parse_poly("x0^2 + x1"))
    assert info.degree == 2
    assert not info.homogeneous
    with pytest.raises(UndefinedDegreeError):
        degree_check(Poly.zero(3))


def test_partial_derivative():
    f = parse_poly("x0^3*x1^2 + 5*x1")
    assert partial_derivative(f, (2, 1)) == parse_poly("12*x0*x1", 2)
    assert partial_derivative(f, (0, 0)) == f
    assert partial_derivative(f, (4, 0)).is_zero()


def test_normalize_primitive():
    f = parse_poly("-4*x0^2 + 6*x1^2 - 2/3*x0*x1")
    g = normalize_primitive(f)
    assert g == parse_poly("6*x0^2 + x0*x1 - 9*x1^2")
    assert g.content() == 1
    with pytest.raises(ZeroPolynomialError):
        normalize_primitive(Poly.zero(2))


def test_primitive_integer_vector():
    assert primitive_integer_vector([0, Fraction(-1, 2), Fraction(3, 4)]) == (0, 2, -3)
    with pytest.raises(ZeroPolynomialError):
        primitive_integer_vector([0, 0])


def test_exact_divide():
    x0, x1, x2 = Poly.variables(3)
    product = (x0 + 2 * x1) * (x1 - x2) * x2
    assert product.exact_divide(x1 - x2) == (x0 + 2 * x1) * x2
    with pytest.raises(ValueError, match="does not divide"):
        product.exact_divide(x0 + x1)


def test_coefficients_in():
    f = parse_poly("x2^2 - x0^2 + x1*x2")
    c0, c1, c2 = f.coefficients_in(2)
    assert c0 == parse_poly("-x0^2", 3)
    assert c1 == parse_poly("x1", 3)
    assert c2 == 1


def test_compose_and_extend():
    f = parse_poly("x0^2 + x1")
    y0, y1 = Poly.variables(2)
    assert f.compose([y0 + y1, y0]) == y0**2 + 2 * y0 * y1 + y1**2 + y0
    assert f.extend(4, offset=2) == parse_poly("x2^2 + x3", 4)


def test_proj_point_equality_up_to_scale():
    assert ProjPoint([1, 2, 3]) == ProjPoint([Fraction(-1, 2), -1, Fraction(-3, 2)])
    assert hash(ProjPoint([2, 4])) == hash(ProjPoint([1, 2]))
    assert str(ProjPoint([3, 6, 1])) == "[3:6:1]"
    with pytest.raises(ZeroPolynomialError):
        ProjPoint([0, 0, 0])


@given(homogeneous_forms(), st.integers(min_value=-3, max_value=3).filter(bool))
def test_evaluate_scales_with_degree(f, scale):
    point = [Fraction(i + 1, 2) for i in range(f.num_vars)]
    scaled = [scale * c for c in point]
    assert f.evaluate(scaled) == Fraction(scale) ** f.degree * f.evaluate(point)


@given(homogeneous_forms(), homogeneous_forms())
def test_multiplication_adds_degrees(f, g):
    if f.num_vars != g.num_vars:
        return
    product = f * g
    assert product.is_homogeneous()
    assert product.degree == f.degree + g.degree


@given(homogeneous_forms())
def test_printing_round_trips_through_the_parser(f):
    assert parse_poly(str(f), f.num_vars) == f


@given(st.integers(min_value=1, max_value=3).flatmap(lambda n: st.tuples(*[polynomials(n)] * 3)))
def test_ring_axioms(triple):
    f, g, h = triple
    assert (f * g) * h == f * (g * h)
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f - f).is_zero()
    assert f * 1 == f
    assert f**2 == f * f


@given(st.integers(min_value=2, max_value=4).flatmap(polynomials), st.data())
def test_mixed_partials_commute(f, data):
    i = data.draw(st.integers(min_value=0, max_value=f.num_vars - 1))
    j = data.draw(st.integers(min_value=0, max_value=f.num_vars - 1))
    assert f.diff(i).diff(j) == f.diff(j).diff(i)
    alpha = tuple(int(k == i) + int(k == j) for k in range(f.num_vars))
    assert partial_derivative(f, alpha) == f.diff(i).diff(j)


@given(homogeneous_forms(), st.fractions(min_value=-7, max_value=7, max_denominator=5).filter(bool))
def test_normalize_primitive_is_idempotent_and_scale_free(f, scale):
    g = normalize_primitive(f)
    assert normalize_primitive(g) == g
    assert normalize_primitive(f.scale(scale)) == g
    assert g.content() == 1
    assert g.leading_term()[1] > 0


def test_poly_wraps_a_sympy_ring_element():
    f = parse_poly("x0^2 - 1/2*x1")
    assert f.element.ring.ngens == 2
    assert Poly.from_element(f.element * f.element) == f**2
    assert f.coefficient((0, 1)) == Fraction(-1, 2)
