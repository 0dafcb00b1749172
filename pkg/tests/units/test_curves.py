import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.polarmaps.algebra.linalg import poly_determinant
from src.polarmaps.algebra.polycore import Poly, ProjPoint
from src.polarmaps.curves import (
    SymMatrix3,
    flex_count_formula,
    generic_quadric_discriminant,
    hessian_at,
    hessian_det,
    hessian_matrix,
    quadric_discriminant,
    random_unimodular,
    sylvester_matrix,
    sylvester_resultant,
)
from src.polarmaps.errors import DegenerateError, DimensionError, RangeError
from src.polarmaps.polar import polar_cycle
from src.polarmaps.presentation.cli.parser import parse_poly
from tests.corpus import polynomials


def test_hessian_of_the_fermat_cubic(fermat_cubic):
    assert hessian_det(fermat_cubic) == parse_poly("216*x0*x1*x2")


def test_hessian_of_conics_and_lines():
    assert hessian_det(parse_poly("x0^2 + x1^2 + x2^2")) == 8
    assert hessian_det(parse_poly("x0^3", 3)).is_zero()
    with pytest.raises(RangeError):
        hessian_det(parse_poly("x0 + x1 + x2"))
    with pytest.raises(DimensionError):
        hessian_det(parse_poly("x0^2 + x1^2"))


def test_hessian_matrix_is_symmetric(nodal_cubic):
    matrix = hessian_matrix(nodal_cubic)
    assert matrix.entries[0][2] == matrix.entries[2][0] == parse_poly("-2*x0", 3)
    x0 = Poly.variable(0, 3)
    zero = Poly.zero(3)
    with pytest.raises(ValueError, match="differ"):
        SymMatrix3(((zero, x0, zero), (zero, zero, zero), (zero, zero, zero)))


def test_quadric_discriminant():
    assert quadric_discriminant(parse_poly("x0^2 + x1^2 + x2^2")) == 1
    assert quadric_discriminant(parse_poly("x0*x1", 3)) == 0
    with pytest.raises(RangeError):
        quadric_discriminant(parse_poly("x0^3 + x1^3 + x2^3"))


def test_generic_quadric_discriminant_agrees_with_specializations():
    generic = generic_quadric_discriminant()
    assert generic.num_vars == 6
    assert generic.degree == 3
    assert generic.evaluate([1, 0, 0, 1, 0, 1]) == 1
    assert generic.evaluate([0, 1, 0, 0, 0, 0]) == 0


@given(st.integers(min_value=-4, max_value=4), st.integers(min_value=-4, max_value=4))
def test_osculating_conic_discriminant_is_the_hessian(a, b):
    nodal = parse_poly("x2*x1^2 - x0^3 - x0^2*x2")
    xi = ProjPoint([a, b, 1])
    raw = polar_cycle(nodal, 2, xi).raw_form
    assert quadric_discriminant(raw) == hessian_at(nodal, xi)


def test_sylvester_matrix_layout():
    f, g = parse_poly("x2^2 - x0^2"), parse_poly("x2 - x1", 3)
    matrix = sylvester_matrix(f, g, 2)
    one, zero = Poly.constant(1, 3), Poly.zero(3)
    assert matrix == [
        [one, zero, parse_poly("-x0^2", 3)],
        [one, parse_poly("-x1", 3), zero],
        [zero, one, parse_poly("-x1", 3)],
    ]


def test_sylvester_resultant_eliminates():
    f, g = parse_poly("x2^2 - x0^2"), parse_poly("x2 - x1", 3)
    assert sylvester_resultant(f, g, 2) == parse_poly("x1^2 - x0^2", 3)


def test_sylvester_needs_the_variable():
    with pytest.raises(RangeError):
        sylvester_matrix(parse_poly("x0^2 + x1^2", 3), parse_poly("x2 - x1", 3), 2)


def test_sylvester_full_degree_guard():
    f, g = parse_poly("x0*x2 - x1^2"), parse_poly("x2 - x1", 3)
    with pytest.raises(DegenerateError):
        sylvester_resultant(f, g, 2, require_full_degree=True)
    assert sylvester_resultant(f, g, 2) == parse_poly("x1^2 - x0*x1", 3)


def test_random_unimodular_is_unimodular():
    matrix = random_unimodular(random.Random("unimodular"), 5)
    assert matrix is not None
    a, b, c = matrix
    det = (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )
    assert abs(det) == 1


def test_flex_count_formula():
    assert flex_count_formula(3) == 9
    assert flex_count_formula(4) == 24


def _involves_last(f: Poly) -> bool:
    return bool(f) and f.degree_in(2) >= 1


@settings(max_examples=40)
@given(
    polynomials(3, max_degree=2).filter(_involves_last),
    polynomials(3, max_degree=2).filter(_involves_last),
    polynomials(3, max_degree=2).filter(_involves_last),
)
def test_resultant_is_multiplicative(f, g, h):
    assert sylvester_resultant(f * g, h, 2) == sylvester_resultant(f, h, 2) * sylvester_resultant(g, h, 2)


@settings(max_examples=40)
@given(polynomials(3, max_degree=2).filter(_involves_last), polynomials(3, max_degree=2).filter(_involves_last))
def test_resultant_is_the_sylvester_determinant(f, g):
    assert sylvester_resultant(f, g, 2) == poly_determinant(sylvester_matrix(f, g, 2))
