from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.polarmaps.algebra.linalg import nullspace, rank
from src.polarmaps.algebra.polycore import (
    MultiIndex,
    Poly,
    ProjPoint,
    Scalar,
    multi_indices,
    multinomial,
    partial_derivative,
)
from src.polarmaps.errors import DimensionError, RangeError
from src.polarmaps.polar.polynomials import check_homogeneous


@dataclass(frozen=True, slots=True)
class PolarLinearMatrix:
    """
    Matrix of the linear map ξ -> unnormalized Chow vector of the degree-(d-1) polar cycle.

    Row α (|α| = d - 1, Chow index order) holds the coefficients of the linear
    form (d-1)!/α! ∂^αF.
    """

    row_indices: tuple[MultiIndex, ...]
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def num_vars(self) -> int:
        return len(self.rows[0])

    def apply(self, xi: ProjPoint | Sequence[Scalar]) -> tuple[Fraction, ...]:
        coords = tuple(xi)
        if len(coords) != self.num_vars:
            raise DimensionError("point dimension does not match", num_vars=self.num_vars, point_len=len(coords))
        return tuple(sum((a * b for a, b in zip(row, coords, strict=True)), Fraction(0)) for row in self.rows)

    def rank(self) -> int:
        return rank(self.rows)


@dataclass(frozen=True, slots=True)
class ConeReport:
    is_cone: bool
    vertex_space: tuple[ProjPoint, ...]

    @property
    def vertex_dimension(self) -> int:
        """Projective dimension of the vertex; -1 when there is none."""
        return len(self.vertex_space) - 1


def polar_linear_matrix(f: Poly) -> PolarLinearMatrix:
    d = check_homogeneous(f)
    if d < 2:
        raise RangeError("the polar linear matrix needs degree at least 2", degree=d)
    n1 = f.num_vars
    unit = [tuple(1 if j == i else 0 for j in range(n1)) for i in range(n1)]
    indices = multi_indices(n1, d - 1)
    rows = []
    for alpha in indices:
        form = partial_derivative(f, alpha).scale(multinomial(alpha))
        rows.append(tuple(form.coefficient(e) for e in unit))
    return PolarLinearMatrix(row_indices=indices, rows=tuple(rows))


def is_cone(f: Poly) -> ConeReport:
    """
    X is a cone exactly when the polar linear matrix has a kernel; the kernel is the vertex.
    """
    matrix = polar_linear_matrix(f)
    kernel = nullspace(matrix.rows, matrix.num_vars)
    vertices = tuple(ProjPoint(vector) for vector in kernel)
    return ConeReport(is_cone=bool(vertices), vertex_space=vertices)
