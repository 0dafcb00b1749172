from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from src.polarmaps.algebra.polycore import Poly, ProjPoint, Scalar, multi_indices
from src.polarmaps.errors import DimensionError, RangeError
from src.polarmaps.polar.polynomials import check_homogeneous, check_point


def _det3[T: (Poly, Fraction)](m: Sequence[Sequence[T]]) -> T:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True, slots=True)
class SymMatrix3:
    """Symmetric 3 x 3 matrix of polynomials; entry (i, j) is ∂²F/∂x_i∂x_j for a Hessian."""

    entries: tuple[tuple[Poly, Poly, Poly], tuple[Poly, Poly, Poly], tuple[Poly, Poly, Poly]]

    def __post_init__(self) -> None:
        for i in range(3):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")

    def determinant(self) -> Poly:
        return _det3(self.entries)

    def evaluate(self, point: ProjPoint | Sequence[Scalar]) -> tuple[tuple[Fraction, ...], ...]:
        coords = tuple(point)
        return tuple(tuple(entry.evaluate(coords) for entry in row) for row in self.entries)


def require_plane(f: Poly) -> None:
    if f.num_vars != 3:
        raise DimensionError("a plane curve needs exactly three variables", num_vars=f.num_vars)


def hessian_matrix(f: Poly) -> SymMatrix3:
    require_plane(f)
    second = [[f.diff(i).diff(j) for j in range(3)] for i in range(3)]
    return SymMatrix3(tuple(tuple(row) for row in second))


def hessian_det(f: Poly) -> Poly:
    """
    Determinant of the Hessian of a plane curve.

    Homogeneous of degree 3(d - 2); a constant for conics and zero for
    degenerate curves such as multiple lines.
    """
    require_plane(f)
    d = check_homogeneous(f)
    if d < 2:
        raise RangeError("the Hessian needs degree at least 2", degree=d)
    return hessian_matrix(f).determinant()


def hessian_at(f: Poly, point: ProjPoint) -> Fraction:
    check_point(f, point)
    return _det3(hessian_matrix(f).evaluate(point))


def _symmetric_coefficients[T: (Poly, Fraction)](coeffs: Sequence[T], half: T) -> list[list[T]]:
    """Symmetric matrix of a ternary quadric from its coefficients in Chow index order."""
    c0, c1, c2, c3, c4, c5 = coeffs
    return [
        [c0, c1 * half, c2 * half],
        [c1 * half, c3, c4 * half],
        [c2 * half, c4 * half, c5],
    ]


def quadric_discriminant(q: Poly) -> Fraction:
    """
    Determinant of the symmetric matrix of a ternary quadric (off-diagonal entries halved).

    Zero exactly when the conic is singular. For the raw degree-2 polar form
    of F at ξ the matrix is the Hessian of F at ξ, so the value is the Hessian
    determinant there.
    """
    require_plane(q)
    if check_homogeneous(q) != 2:
        raise RangeError("a quadric has degree 2", degree=q.degree)
    coeffs = [q.coefficient(alpha) for alpha in multi_indices(3, 2)]
    return _det3(_symmetric_coefficients(coeffs, Fraction(1, 2)))


def generic_quadric_discriminant() -> Poly:
    """The cubic form on the six Chow coordinates of plane conics vanishing on singular conics."""
    c = Poly.variables(6)
    return _det3(_symmetric_coefficients(c, Fraction(1, 2)))
