from __future__ import annotations

from src.polarmaps.algebra.polycore import Poly, from_qq
from src.polarmaps.errors import DegenerateError, DimensionError, RangeError


def _degrees(f: Poly, g: Poly, var: int) -> tuple[int, int]:
    if f.num_vars != g.num_vars:
        raise DimensionError("polynomials live in different rings", left=f.num_vars, right=g.num_vars)
    a = f.degree_in(var) if f else 0
    b = g.degree_in(var) if g else 0
    if a < 1 or b < 1:
        raise RangeError("both polynomials need positive degree in the eliminated variable", f_degree=a, g_degree=b)
    return a, b


def sylvester_matrix(f: Poly, g: Poly, var: int) -> list[list[Poly]]:
    """
    Sylvester matrix of f and g seen as polynomials in x_var.

    With a = deg f and b = deg g in x_var it is (a + b) x (a + b): b shifted
    rows of the coefficients of f (highest power first), then a shifted rows
    of those of g.
    """
    a, b = _degrees(f, g, var)
    size = a + b
    zero = Poly.zero(f.num_vars)
    f_coeffs = f.coefficients_in(var)[::-1]
    g_coeffs = g.coefficients_in(var)[::-1]
    matrix: list[list[Poly]] = []
    for shift in range(b):
        matrix.append([zero] * shift + f_coeffs + [zero] * (size - shift - a - 1))
    for shift in range(a):
        matrix.append([zero] * shift + g_coeffs + [zero] * (size - shift - b - 1))
    return matrix


def sylvester_resultant(f: Poly, g: Poly, var: int, *, require_full_degree: bool = False) -> Poly:
    """
    Resultant of f and g with respect to x_var, a polynomial in the other variables.

    It equals the determinant of `sylvester_matrix(f, g, var)` and is
    computed by sympy in a ring whose main variable is x_var. It vanishes at
    a point exactly when f and g have a common root in x_var there, or both
    leading coefficients vanish. With `require_full_degree` both leading
    coefficients must be nonzero constants, so that the resultant of
    homogeneous plane inputs of degrees a and b is a binary form of degree a*b.

    Raises:
        RangeError: f or g does not involve x_var.
        DegenerateError: A leading coefficient is not constant under `require_full_degree`.
    """
    _degrees(f, g, var)
    if require_full_degree:
        for name, poly in (("f", f), ("g", g)):
            lead = poly.coefficients_in(var)[-1]
            if not lead.is_constant():
                raise DegenerateError(
                    "leading coefficient is not constant; change coordinates",
                    polynomial=name,
                    leading_coefficient=str(lead),
                )
    ring = f.element.ring
    symbols = ring.symbols
    main = ring.clone(symbols=[symbols[var], *symbols[:var], *symbols[var + 1 :]])
    resultant = f.in_ring(main).resultant(g.in_ring(main))
    if main.ngens == 1:
        return Poly.constant(from_qq(resultant), f.num_vars)
    return Poly.from_element(resultant.set_ring(ring))
