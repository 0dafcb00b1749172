from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.polarmaps.algebra.grobner import GroebnerLimits
from src.polarmaps.algebra.polycore import Poly, ProjPoint
from src.polarmaps.errors import PreconditionError, RangeError, ResourceLimitError
from src.polarmaps.geometry import (
    SamplingPolicy,
    base_locus_ideal,
    dual_degree_formula,
    image_degree_formula,
    is_cone,
    polar_class,
    polar_image_dimension,
    polar_linear_matrix,
    polar_regularity,
    regularity_profile,
    verify_image_degree,
)
from src.polarmaps.polar import polar_coordinate_forms, polar_cycle
from src.polarmaps.presentation.cli.parser import parse_poly
from tests.corpus import CUSPIDAL_CUBIC, cones, homogeneous_forms, points


def test_nodal_cubic_profile(nodal_cubic):
    profile = regularity_profile(nodal_cubic)
    assert [(r.p, r.regular) for r in profile] == [(1, False), (2, True)]
    assert profile[0].certificate.missing_variables == (2,)


def test_cuspidal_cubic_profile():
    profile = regularity_profile(parse_poly(CUSPIDAL_CUBIC))
    assert [r.regular for r in profile] == [False, True]


def test_smooth_curve_is_regular_everywhere(fermat_quartic):
    assert all(r.regular for r in regularity_profile(fermat_quartic))


def test_base_locus_ideal_drops_vanishing_partials(nodal_cubic):
    ideal = base_locus_ideal(nodal_cubic, 2)
    assert len(ideal.generators) == 4


def test_profile_needs_degree_two():
    with pytest.raises(RangeError):
        regularity_profile(parse_poly("x0 + x1"))
    with pytest.raises(RangeError):
        polar_regularity(parse_poly("x0^2 + x1^2"), 2)


def test_regularity_respects_resource_limits():
    with pytest.raises(ResourceLimitError):
        polar_regularity(parse_poly("x0^5 + x1^5 + x2^5 + x0*x1*x2^3"), 1, GroebnerLimits(step_limit=1))


def test_cone_omitting_a_variable():
    report = is_cone(parse_poly("x0^2 + x1^2", 3))
    assert report.is_cone
    assert report.vertex_dimension == 0
    assert report.vertex_space == (ProjPoint([0, 0, 1]),)


def test_cone_after_linear_change():
    # x0^2 + x1^2 in the coordinates u = x0 + x2, v = x1 - x2
    report = is_cone(parse_poly("(x0 + x2)^2 + (x1 - x2)^2"))
    assert report.is_cone
    assert report.vertex_space == (ProjPoint([-1, 1, 1]),)


def test_cone_over_a_point_has_a_line_as_vertex():
    report = is_cone(parse_poly("x0^3", 4))
    assert report.vertex_dimension == 2


def test_smooth_curves_are_not_cones(fermat_cubic, smooth_conic):
    assert not is_cone(fermat_cubic).is_cone
    assert is_cone(smooth_conic).vertex_dimension == -1


def test_polar_linear_matrix_rows(smooth_conic):
    matrix = polar_linear_matrix(smooth_conic)
    assert matrix.row_indices == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert matrix.rows == ((0, 1, 0), (1, 0, 0), (0, 0, -2))
    assert matrix.apply(ProjPoint([1, 2, 3])) == (Fraction(2), Fraction(1), Fraction(-6))
    assert matrix.rank() == 3


def test_image_degree_formula():
    assert image_degree_formula(4, 2, 3) == 16
    assert image_degree_formula(3, 1, 2) == 6
    assert dual_degree_formula(2, 2) == 2
    with pytest.raises(RangeError):
        image_degree_formula(3, 3, 2)
    with pytest.raises(RangeError):
        image_degree_formula(3, 1, 1)


def test_verify_image_degree_requires_regularity(nodal_cubic):
    with pytest.raises(PreconditionError, match="not regular"):
        verify_image_degree(nodal_cubic, 1)


def test_verify_image_degree_of_a_conic(smooth_conic):
    check = verify_image_degree(smooth_conic, 1, seed=7)
    assert check.bezout_count == check.formula == 2
    assert check.agree
    assert len(check.slices) == 1


def test_polar_class(fermat_quartic):
    report = polar_class(fermat_quartic, 2)
    assert report.class_coeff == 2
    assert report.ratio_to_gauss == Fraction(2, 3)
    with pytest.raises(RangeError):
        polar_class(fermat_quartic, 4)


def test_sampling_generators_are_reproducible():
    policy = SamplingPolicy(seed=11)
    first = [policy.rng("slices", 1).randint(0, 10**9) for _ in range(3)]
    again = [policy.rng("slices", 1).randint(0, 10**9) for _ in range(3)]
    assert first == again
    assert policy.rng("slices", 2).random() != policy.rng("slices", 1).random()
    assert policy.with_seed(None) is policy
    assert policy.with_seed(12).seed == 12


def test_image_dimension_of_a_cone_needs_no_regularity():
    # the two lines x0 = ±i x1 through [0:0:1] have a single tangent plane each
    cone = parse_poly("x0^2 + x1^2", 3)
    assert not polar_regularity(cone, 1).regular
    assert polar_image_dimension(cone, 1) == 0


def test_image_dimension_of_the_discriminant_surface(discriminant_quartic):
    # the surface is singular along the twisted cubic; its dual is a curve
    assert not polar_regularity(discriminant_quartic, 1).regular
    assert polar_image_dimension(discriminant_quartic, 1) == 1
    assert polar_image_dimension(discriminant_quartic, 2) == 2


def test_image_dimension_of_smooth_and_nodal_curves(fermat_cubic, nodal_cubic):
    assert polar_image_dimension(fermat_cubic, 1) == 1
    assert polar_image_dimension(nodal_cubic, 1) == 1
    with pytest.raises(RangeError):
        polar_image_dimension(fermat_cubic, 3)


@settings(max_examples=30)
@given(homogeneous_forms(max_vars=3).filter(lambda f: f.degree >= 2))
def test_regularity_only_switches_on(f):
    flags = [report.regular for report in regularity_profile(f)]
    assert flags == sorted(flags)


@settings(max_examples=50)
@given(cones(), st.data())
def test_polar_linear_matrix_of_a_cone(cone, data):
    f, vertex = cone
    matrix = polar_linear_matrix(f)
    assert is_cone(f).is_cone
    assert not any(matrix.apply(vertex))
    xi = data.draw(points(f.num_vars))
    forms = polar_coordinate_forms(f, f.degree - 1).values()
    assert matrix.apply(xi) == tuple(form.evaluate(xi.coords) for form in forms)
    moved = [a + b for a, b in zip(xi, vertex, strict=True)]
    assert matrix.apply(moved) == matrix.apply(xi)


@given(homogeneous_forms(max_vars=3).filter(lambda g: g.degree >= 2), st.data())
def test_polar_cycle_is_defined_everywhere_when_the_base_locus_is_empty(g, data):
    n, d = g.num_vars, g.degree
    f = g + sum((Poly.variable(i, n) ** d for i in range(n)), Poly.zero(n))
    if not f:
        return
    for report in regularity_profile(f):
        if not report.regular:
            continue
        for xi in data.draw(st.lists(points(n), min_size=1, max_size=4)):
            assert polar_cycle(f, report.p, xi).degree == report.p
