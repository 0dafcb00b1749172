"""Exact linear algebra over the rationals and over polynomial rings, on sympy's DomainMatrix."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.polarmaps.algebra.polycore import Poly, Scalar, from_qq, to_qq
from src.polarmaps.errors import DimensionError

type Matrix = list[list[Fraction]]


def _width(rows: Sequence[Sequence[Scalar]]) -> int:
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise DimensionError("ragged matrix", widths=sorted({len(row) for row in rows}))
    return width


def to_domain_matrix(rows: Sequence[Sequence[Scalar]]) -> DomainMatrix:
    width = _width(rows)
    return DomainMatrix([[to_qq(v) for v in row] for row in rows], (len(rows), width), QQ)


def _to_fractions(matrix: DomainMatrix) -> Matrix:
    return [[from_qq(v) for v in row] for row in matrix.to_list()]


def row_echelon(rows: Sequence[Sequence[Scalar]]) -> tuple[Matrix, list[int]]:
    """
    Reduced row echelon form.

    Returns:
        The nonzero rows of the reduced form and the pivot column of each.
    """
    if not rows:
        return [], []
    reduced, pivots = to_domain_matrix(rows).rref()
    return _to_fractions(reduced)[: len(pivots)], list(pivots)


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return to_domain_matrix(rows).rank() if rows else 0


def nullspace(rows: Sequence[Sequence[Scalar]], width: int | None = None) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per free column, with a 1 in that column."""
    if width is None:
        width = _width(rows)
    if not rows:
        return [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
    reduced, pivots = to_domain_matrix(rows).rref()
    return _to_fractions(reduced.nullspace_from_rref(pivots))


def determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    size = len(rows)
    if _width(rows) != size:
        raise DimensionError("determinant of a non-square matrix", rows=size)
    if not size:
        return Fraction(1)
    return from_qq(to_domain_matrix(rows).det())


def sparse_rank(rows: Sequence[Mapping[int, Scalar]]) -> int:
    """Rank of a matrix given by sparse rows (column -> value)."""
    entries = {i: {c: to_qq(v) for c, v in row.items() if v} for i, row in enumerate(rows)}
    entries = {i: row for i, row in entries.items() if row}
    if not entries:
        return 0
    width = 1 + max(c for row in entries.values() for c in row)
    return DomainMatrix(entries, (len(rows), width), QQ).rank()


def poly_determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """
    Determinant of a square matrix of polynomials.

    DomainMatrix runs the fraction-free Bareiss elimination over the
    polynomial ring, so every division is exact.
    """
    size = len(matrix)
    if not size:
        raise DimensionError("determinant of an empty matrix")
    if any(len(row) != size for row in matrix):
        raise DimensionError("determinant of a non-square matrix", rows=size)
    if size == 1:
        return matrix[0][0]
    ring = matrix[0][0].element.ring
    domain = ring.to_domain()
    entries = [[entry.element for entry in row] for row in matrix]
    return Poly.from_element(DomainMatrix(entries, (size, size), domain).det())
