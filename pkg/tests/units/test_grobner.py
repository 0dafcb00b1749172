import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympy.polys.monomials import monomial_divides

from src.polarmaps.algebra import grobner
from src.polarmaps.algebra.grobner import (
    GroebnerLimits,
    IdealBasis,
    MonomialOrder,
    affine_dimension,
    artinian_length,
    buchberger,
    eliminate,
    hilbert_function,
    hilbert_function_from_basis,
    ideal_contains,
    is_projectively_empty,
    normal_form,
    s_polynomial,
    zero_dim_degree,
)
from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.errors import DimensionError, InhomogeneousError, PreconditionError, ResourceLimitError
from src.polarmaps.presentation.cli.parser import parse_poly
from tests.corpus import homogeneous_ideals


def ideal(*texts: str, num_vars: int) -> IdealBasis:
    return IdealBasis.of([parse_poly(t, num_vars) for t in texts])


def test_monomial_orders():
    grevlex = MonomialOrder.grevlex(3)
    lex = MonomialOrder.lex(3)
    block = MonomialOrder.block(3, 1)
    assert grevlex.compare((0, 2, 0), (1, 0, 1)) == 1
    assert lex.compare((0, 2, 0), (1, 0, 1)) == -1
    # anything involving x0 beats any monomial free of it
    assert block.compare((1, 0, 0), (0, 5, 5)) == 1


def test_block_order_rejects_oversized_block():
    with pytest.raises(DimensionError):
        MonomialOrder.block(2, 3)


def test_ideal_basis_rejects_zero_generators():
    with pytest.raises(PreconditionError):
        IdealBasis((Poly.zero(2),), MonomialOrder.grevlex(2))


def test_reduced_basis_of_small_ideal():
    gb = buchberger(ideal("x0^2 + x1^2", "x0*x1", num_vars=2))
    assert set(gb.basis) == {parse_poly("x0^2 + x1^2"), parse_poly("x0*x1"), parse_poly("x1^3", 2)}
    assert gb.reduced


def test_s_polynomial_cancels_leading_terms():
    order = MonomialOrder.grevlex(2)
    f, g = parse_poly("x0^2 + x1^2"), parse_poly("x0*x1")
    assert s_polynomial(f, g, order) == parse_poly("x1^3", 2)


def test_normal_form_has_no_divisible_terms():
    gb = buchberger(ideal("x0^2 + x1^2", "x0*x1", num_vars=2))
    remainder = normal_form(parse_poly("x0^3 + x0*x1 + x1^2 + x1^4"), gb)
    for alpha in remainder.terms:
        assert not any(all(a >= b for a, b in zip(alpha, lead, strict=True)) for lead in gb.leading_monomials)
    assert ideal_contains(gb.as_ideal(), parse_poly("x0^3*x1 + x1^4"))


def test_step_limit_raises_with_diagnostics():
    with pytest.raises(ResourceLimitError) as caught:
        buchberger(
            ideal("x0^3 - x1*x2^2", "x1^3 - x0*x2^2", "x0*x1*x2 - x2^3", num_vars=3),
            GroebnerLimits(step_limit=1),
        )
    assert caught.value.context["step_limit"] == 1
    assert caught.value.exit_status == 4


def test_affine_dimension():
    assert affine_dimension([(1, 0, 0), (0, 2, 0)], 3) == 1
    assert affine_dimension([(0, 0, 0)], 3) == -1
    assert affine_dimension([(1, 1, 0)], 3) == 2


def test_emptiness_certificate():
    empty = is_projectively_empty(ideal("x0^2 - x1^2", "x0^2 + x1^2", num_vars=2))
    assert empty.empty
    assert dict(empty.pure_powers) == {0: 2, 1: 2}
    point = is_projectively_empty(ideal("x0", "x1^2", num_vars=3))
    assert not point.empty
    assert point.missing_variables == (2,)
    assert point.affine_dimension == 1
    assert "x2" in point.witness


def test_emptiness_requires_homogeneous_generators():
    with pytest.raises(InhomogeneousError):
        is_projectively_empty(ideal("x0^2 + x1", num_vars=2))


def test_independent_linear_forms_cut_nothing():
    assert is_projectively_empty(ideal("x0 + x1", "x0 - x1", "x0", num_vars=2)).empty


def test_hilbert_function_of_complete_intersection():
    conic_and_line = ideal("x0*x1 - x2^2", "x0 - x1", num_vars=3)
    assert [hilbert_function(conic_and_line, t) for t in range(5)] == [1, 2, 2, 2, 2]
    gb = buchberger(conic_and_line)
    assert [hilbert_function_from_basis(gb, t) for t in range(5)] == [1, 2, 2, 2, 2]


def test_zero_dim_degree_counts_multiplicity():
    assert zero_dim_degree(ideal("x0", "x1^2", num_vars=3)) == 2
    assert zero_dim_degree(ideal("x0^3 + x1^3 + x2^3", "x0 + 2*x1 + 3*x2", num_vars=3)) == 3


def test_zero_dim_degree_of_empty_scheme_is_zero():
    assert zero_dim_degree(ideal("x0^2 - x1^2", "x0^2 + x1^2", num_vars=2)) == 0


def test_zero_dim_degree_rejects_curves():
    with pytest.raises(DimensionError):
        zero_dim_degree(ideal("x0", num_vars=4))


def test_artinian_length():
    assert artinian_length(ideal("x0^2 - x1^2", "x0^2 + x1^2", num_vars=2)) == 4
    with pytest.raises(DimensionError):
        artinian_length(ideal("x0", num_vars=2))


def test_eliminate_parametrized_parabola():
    # ring (t, y1, y2); the image of t -> (t^2, t) is y1 = y2^2
    graph = ideal("x1 - x0^2", "x2 - x0", num_vars=3)
    image = eliminate(graph, 2)
    assert image.num_vars == 2
    assert image.generators == (parse_poly("x1^2 - x0"),)


def test_eliminate_keeping_everything_returns_reduced_basis():
    source = ideal("x0^2 + x1^2", "x0*x1", num_vars=2)
    assert set(eliminate(source, 2).generators) == set(buchberger(source).basis)
    with pytest.raises(DimensionError):
        eliminate(source, 0)


@given(st.lists(st.integers(min_value=-4, max_value=4), min_size=3, max_size=3).filter(any))
def test_linear_slice_of_a_conic_has_degree_two(coefficients):
    a, b, c = coefficients
    line = Poly(3, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})
    conic = parse_poly("x0^2 + x1^2 + x2^2")
    assert zero_dim_degree(IdealBasis.of([conic, line])) == 2


@settings(max_examples=40)
@given(homogeneous_ideals())
def test_buchberger_output_satisfies_the_s_pair_criterion(generators):
    source = IdealBasis.of(generators)
    gb = buchberger(source)
    for g in source.generators:
        assert normal_form(g, gb).is_zero()
    for f, g in itertools.combinations(gb.basis, 2):
        assert normal_form(s_polynomial(f, g, gb.order), gb).is_zero()
    leads = gb.leading_monomials
    for g, lead in zip(gb.basis, leads, strict=True):
        assert g.leading_term()[1] == 1
        for alpha in g.terms:
            assert not any(other != lead and monomial_divides(other, alpha) for other in leads)
    assert buchberger(gb.as_ideal()).basis == gb.basis


@given(homogeneous_ideals(), st.sampled_from([MonomialOrder.lex(3), MonomialOrder.block(3, 1)]))
def test_buchberger_respects_other_orders(generators, order):
    source = IdealBasis.of(generators, order)
    gb = buchberger(source)
    assert gb.order == order
    for g in source.generators:
        assert normal_form(g, gb).is_zero()
    for f, g in itertools.combinations(gb.basis, 2):
        assert normal_form(s_polynomial(f, g, order), gb).is_zero()


@given(homogeneous_ideals())
def test_standard_monomials_count_the_macaulay_rank(generators):
    source = IdealBasis.of(generators)
    gb = buchberger(source)
    for t in range(6):
        assert hilbert_function_from_basis(gb, t) == hilbert_function(source, t)


def test_zero_dim_degree_reads_the_basis_without_macaulay_matrices(monkeypatch):
    def refuse(*_args, **_kwargs):
        raise AssertionError("Macaulay rank recomputed")

    monkeypatch.setattr(grobner, "hilbert_function", refuse)
    monkeypatch.setattr(grobner, "sparse_rank", refuse)
    assert zero_dim_degree(ideal("x0^3 + x1^3 + x2^3", "x0 + 2*x1 + 3*x2", num_vars=3)) == 3
    assert artinian_length(ideal("x0^2 - x1^2", "x0^2 + x1^2", num_vars=2)) == 4
