from fractions import Fraction

from src.polarmaps.algebra.linalg import determinant, nullspace, poly_determinant, rank, row_echelon, sparse_rank
from src.polarmaps.algebra.polycore import Poly
from src.polarmaps.presentation.cli.parser import parse_poly


def test_row_echelon_and_rank():
    rows = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    reduced, pivots = row_echelon(rows)
    assert pivots == [0, 1]
    assert reduced[0][0] == 1
    assert rank(rows) == 2


def test_nullspace_is_annihilated():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = nullspace(rows)
    assert len(basis) == 2
    for vector in basis:
        for row in rows:
            assert sum(Fraction(a) * b for a, b in zip(row, vector, strict=True)) == 0


def test_nullspace_of_no_rows_is_everything():
    assert len(nullspace([], 3)) == 3


def test_determinant():
    assert determinant([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_sparse_rank_matches_dense_rank():
    dense = [[1, 2, 0, 0], [0, 1, 1, 0], [1, 3, 1, 0], [0, 0, 0, 5]]
    sparse = [{c: v for c, v in enumerate(row) if v} for row in dense]
    assert sparse_rank(sparse) == rank(dense) == 3


def test_poly_determinant_matches_expansion():
    x0, x1, x2 = Poly.variables(3)
    one, zero = Poly.constant(1, 3), Poly.zero(3)
    matrix = [[x0, x1, zero], [one, x2, x1], [x0, zero, x2]]
    expected = x0 * (x2 * x2 - x1 * zero) - x1 * (one * x2 - x1 * x0) + zero
    assert poly_determinant(matrix) == expected


def test_poly_determinant_vandermonde():
    x0, x1, x2, x3 = Poly.variables(4)
    one = Poly.constant(1, 4)
    variables = [x0, x1, x2, x3]
    matrix = [[one, v, v**2, v**3] for v in variables]
    expected = Poly.constant(1, 4)
    for i in range(4):
        for j in range(i + 1, 4):
            expected = expected * (variables[j] - variables[i])
    assert poly_determinant(matrix) == expected
    assert poly_determinant([[parse_poly("x0 + x1")]]) == parse_poly("x0 + x1")
