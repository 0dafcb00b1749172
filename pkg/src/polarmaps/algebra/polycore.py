"""
Exact sparse multivariate polynomials over the rationals.

A `Poly` wraps an element of a sympy `PolyRing` over `QQ` with generators
x0 .. x(n-1). Instances are immutable: every operation builds a new object,
so values can be shared freely between threads. Coefficients leave this
module as `Fraction`.

Two monomial orders matter here:

* grevlex with x0 > x1 > ... > xn is the order of the ring, of leading
  terms, printing and `normalize_primitive`;
* descending lexicographic order is the Chow index order used by
  `multi_indices` (and therefore by Chow vectors and polar matrices).
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import cache, reduce
from types import MappingProxyType
from typing import Any

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyElement, PolyRing

from src.polarmaps.errors import (
    DimensionError,
    PreconditionError,
    RangeError,
    UndefinedDegreeError,
    ZeroPolynomialError,
)

type MultiIndex = tuple[int, ...]
type Scalar = Fraction | int
type MonomialKey = Callable[[MultiIndex], tuple[int, ...]]


@cache
def ring_of(num_vars: int, order: MonomialOrder = grevlex) -> PolyRing:
    """The ring QQ[x0, ..., x(num_vars-1)] under `order`."""
    if num_vars < 1:
        raise DimensionError("a polynomial needs at least one variable", num_vars=num_vars)
    return PolyRing([Symbol(f"x{i}") for i in range(num_vars)], QQ, order)


def to_qq(value: Scalar) -> Any:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    raise TypeError(f"unsupported coefficient type: {type(value).__name__}")


def from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def total_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def grevlex_key(alpha: MultiIndex) -> tuple[int, ...]:
    """Sort key under which larger tuples are larger grevlex monomials."""
    return (sum(alpha), *(-a for a in reversed(alpha)))


def lex_key(alpha: MultiIndex) -> tuple[int, ...]:
    return alpha


@cache
def multi_indices(num_vars: int, degree: int) -> tuple[MultiIndex, ...]:
    """
    All exponent vectors of `num_vars` entries summing to `degree`.

    The result is in descending lexicographic order: for three variables and
    degree 2 it is (2,0,0), (1,1,0), (1,0,1), (0,2,0), (0,1,1), (0,0,2).
    """
    if num_vars < 1:
        raise DimensionError("at least one variable is required", num_vars=num_vars)
    if degree < 0:
        raise RangeError("degree must be non-negative", degree=degree)
    if num_vars == 1:
        return ((degree,),)
    return tuple(
        (head, *rest) for head in range(degree, -1, -1) for rest in multi_indices(num_vars - 1, degree - head)
    )


def factorial_product(alpha: MultiIndex) -> int:
    """alpha! = alpha_0! * ... * alpha_n!"""
    return math.prod(math.factorial(a) for a in alpha)


def multinomial(alpha: MultiIndex) -> int:
    """|alpha|! / alpha!, the number of ordered derivative tuples giving alpha."""
    return math.factorial(sum(alpha)) // factorial_product(alpha)


def falling_factorial(d: int, s: int) -> int:
    """d (d-1) ... (d-s+1)"""
    return math.perm(d, s) if 0 <= s <= d else 0


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"unsupported coefficient type: {type(value).__name__}")


class Poly:
    """
    Sparse polynomial in `num_vars` variables x0 .. x(num_vars-1).

    Attributes:
        num_vars: Number of variables (n + 1 for a form on P^n).
        terms: Read-only mapping exponent vector -> nonzero coefficient.
        element: The underlying sympy ring element (grevlex ring).
    """

    __slots__ = ("_hash", "_rep", "_terms")

    def __init__(self, num_vars: int, terms: Mapping[MultiIndex, Scalar] | None = None) -> None:
        ring = ring_of(num_vars)
        cleaned: dict[MultiIndex, Fraction] = {}
        for alpha, coeff in (terms or {}).items():
            key = tuple(alpha)
            if len(key) != num_vars:
                raise DimensionError(
                    "exponent vector length does not match the number of variables",
                    num_vars=num_vars,
                    exponent=key,
                )
            if any(a < 0 for a in key):
                raise RangeError("exponents must be non-negative", exponent=key)
            cleaned[key] = cleaned.get(key, Fraction(0)) + _as_fraction(coeff)
        self._rep: PolyElement = ring.from_dict({alpha: to_qq(c) for alpha, c in cleaned.items() if c})
        self._terms: Mapping[MultiIndex, Fraction] | None = None
        self._hash: int | None = None

    @classmethod
    def from_element(cls, element: PolyElement) -> Poly:
        """Wrap a ring element; elements of other orders are moved into the grevlex ring."""
        obj = cls.__new__(cls)
        obj._rep = element.set_ring(ring_of(element.ring.ngens))
        obj._terms = None
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, num_vars: int) -> Poly:
        return cls.from_element(ring_of(num_vars).zero)

    @classmethod
    def constant(cls, value: Scalar, num_vars: int) -> Poly:
        return cls.from_element(ring_of(num_vars).ground_new(to_qq(value)))

    @classmethod
    def variable(cls, index: int, num_vars: int) -> Poly:
        if not 0 <= index < num_vars:
            raise DimensionError("variable index out of range", index=index, num_vars=num_vars)
        return cls.from_element(ring_of(num_vars).gens[index])

    @classmethod
    def monomial(cls, alpha: MultiIndex, coeff: Scalar = 1) -> Poly:
        return cls(len(alpha), {alpha: coeff})

    @classmethod
    def variables(cls, num_vars: int) -> tuple[Poly, ...]:
        return tuple(cls.variable(i, num_vars) for i in range(num_vars))

    @property
    def num_vars(self) -> int:
        return self._rep.ring.ngens

    @property
    def element(self) -> PolyElement:
        return self._rep

    def in_ring(self, ring: PolyRing) -> PolyElement:
        """The same polynomial as an element of `ring` (same generators, any order)."""
        return self._rep.set_ring(ring)

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        if self._terms is None:
            self._terms = MappingProxyType({alpha: from_qq(c) for alpha, c in self._rep.iterterms()})
        return self._terms

    def is_zero(self) -> bool:
        return not self._rep

    def __bool__(self) -> bool:
        return bool(self._rep)

    def __len__(self) -> int:
        return len(self._rep)

    def __iter__(self) -> Iterator[tuple[MultiIndex, Fraction]]:
        return iter(self.sorted_terms())

    def coefficient(self, alpha: MultiIndex) -> Fraction:
        return self.terms.get(tuple(alpha), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.num_vars)

    def is_constant(self) -> bool:
        return self._rep.is_ground

    @property
    def degree(self) -> int:
        if not self._rep:
            raise UndefinedDegreeError("the zero polynomial has no degree")
        return max(sum(alpha) for alpha in self._rep.itermonoms())

    def is_homogeneous(self) -> bool:
        return len({sum(alpha) for alpha in self._rep.itermonoms()}) <= 1

    def degree_in(self, var: int) -> int:
        if not self._rep:
            raise UndefinedDegreeError("the zero polynomial has no degree")
        return self._rep.degree(self._gen(var))

    def used_variables(self) -> frozenset[int]:
        return frozenset(i for alpha in self._rep.itermonoms() for i, a in enumerate(alpha) if a)

    def sorted_terms(self, key: MonomialKey = grevlex_key) -> list[tuple[MultiIndex, Fraction]]:
        """Terms from the largest to the smallest monomial."""
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_term(self, key: MonomialKey = grevlex_key) -> tuple[MultiIndex, Fraction]:
        if not self._rep:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        if key is grevlex_key:
            return self._rep.LM, from_qq(self._rep.LC)
        alpha = max(self._rep.itermonoms(), key=key)
        return alpha, from_qq(self._rep[alpha])

    def _gen(self, var: int) -> PolyElement:
        if not 0 <= var < self.num_vars:
            raise DimensionError("variable index out of range", index=var, num_vars=self.num_vars)
        return self._rep.ring.gens[var]

    def _check_compatible(self, other: Poly) -> None:
        if self.num_vars != other.num_vars:
            raise DimensionError(
                "polynomials live in different rings",
                left_num_vars=self.num_vars,
                right_num_vars=other.num_vars,
            )

    def _coerce(self, other: object) -> Poly | None:
        if isinstance(other, Poly):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other, self.num_vars)
        return None

    def __add__(self, other: object) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly.from_element(self._rep + rhs._rep)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly.from_element(-self._rep)

    def __sub__(self, other: object) -> Poly:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Poly.from_element(self._rep - rhs._rep)

    def __rsub__(self, other: object) -> Poly:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, factor: Scalar) -> Poly:
        return Poly.from_element(self._rep.mul_ground(to_qq(factor)))

    def shift(self, alpha: MultiIndex, coeff: Scalar = 1) -> Poly:
        """Multiply by the single term coeff * x^alpha."""
        return Poly.from_element(self._rep.mul_term((tuple(alpha), to_qq(coeff))))

    def __mul__(self, other: object) -> Poly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_compatible(other)
        return Poly.from_element(self._rep * other._rep)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise RangeError("exponent must be a non-negative integer", exponent=exponent)
        return Poly.from_element(self._rep**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.num_vars == other.num_vars and self._rep == other._rep
        if isinstance(other, (int, Fraction)):
            return self._rep == Poly.constant(other, self.num_vars)._rep
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self.terms.items())))
        return self._hash

    def diff(self, var: int, times: int = 1) -> Poly:
        gen = self._gen(var)
        rep = self._rep
        for _ in range(times):
            if not rep:
                break
            rep = rep.diff(gen)
        return Poly.from_element(rep)

    def evaluate(self, values: Sequence[Scalar]) -> Fraction:
        if len(values) != self.num_vars:
            raise DimensionError("point dimension does not match", num_vars=self.num_vars, point_len=len(values))
        if not self._rep:
            return Fraction(0)
        return from_qq(self._rep(*(to_qq(v) for v in values)))

    def compose(self, substitutions: Sequence[Poly]) -> Poly:
        """Replace every variable x_i by `substitutions[i]`; all substitutions share one ring."""
        if len(substitutions) != self.num_vars:
            raise DimensionError(
                "one substitution per variable is required",
                num_vars=self.num_vars,
                substitutions=len(substitutions),
            )
        target = substitutions[0].num_vars
        for sub in substitutions:
            substitutions[0]._check_compatible(sub)
        if target == self.num_vars:
            pairs = list(zip(self._rep.ring.gens, (s._rep for s in substitutions), strict=True))
            return Poly.from_element(self._rep.compose(pairs))
        ring = ring_of(target)
        powers: dict[tuple[int, int], PolyElement] = {}
        result = ring.zero
        for alpha, coeff in self._rep.iterterms():
            term = ring.ground_new(coeff)
            for var, a in enumerate(alpha):
                if a:
                    if (var, a) not in powers:
                        powers[var, a] = substitutions[var]._rep ** a
                    term *= powers[var, a]
            result += term
        return Poly.from_element(result)

    def extend(self, num_vars: int, offset: int = 0) -> Poly:
        """Embed into a ring with `num_vars` variables, x_i becoming x_(i+offset)."""
        if offset < 0 or offset + self.num_vars > num_vars:
            raise DimensionError(
                "target ring too small for the embedding",
                num_vars=num_vars,
                offset=offset,
                source_num_vars=self.num_vars,
            )
        tail = (0,) * (num_vars - offset - self.num_vars)
        head = (0,) * offset
        return Poly.from_element(
            ring_of(num_vars).from_dict({head + alpha + tail: c for alpha, c in self._rep.iterterms()})
        )

    def coefficients_in(self, var: int) -> list[Poly]:
        """Coefficient polynomials c_k with self = sum_k c_k * x_var^k; c_k does not involve x_var."""
        if not self._rep:
            return []
        gen = self._gen(var)
        return [Poly.from_element(self._rep.coeff_wrt(gen, k)) for k in range(self.degree_in(var) + 1)]

    def content(self) -> Fraction:
        """Positive rational c such that self / c has coprime integer coefficients."""
        if not self._rep:
            raise ZeroPolynomialError("the zero polynomial has no content")
        return abs(from_qq(self._rep.content()))

    def exact_divide(self, divisor: Poly) -> Poly:
        """
        Quotient of an exact division.

        Raises:
            ZeroPolynomialError: The divisor is zero.
            PreconditionError: The divisor does not divide self.
        """
        self._check_compatible(divisor)
        if not divisor:
            raise ZeroPolynomialError("division by the zero polynomial")
        quotient, remainder = self._rep.div(divisor._rep)
        if remainder:
            raise PreconditionError("divisor does not divide the polynomial", divisor=str(divisor))
        return Poly.from_element(quotient)

    def __str__(self) -> str:
        if not self._rep:
            return "0"
        pieces: list[str] = []
        for alpha, coeff in self.sorted_terms():
            monomial = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(alpha) if a
            )
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self.num_vars}, {self})"


@dataclass(frozen=True, slots=True)
class DegreeInfo:
    degree: int
    homogeneous: bool


class ArithOp(StrEnum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    SCALAR_MUL = "scalar_mul"
    POW = "pow"


def arith(f: Poly, g: Poly | Scalar, op: ArithOp) -> Poly:
    """
    Ring operation dispatcher.

    `g` is a Poly for add/sub/mul, a rational for scalar_mul and a
    non-negative int for pow.

    Raises:
        DimensionError: f and g live in rings with different numbers of variables.
        RangeError: Negative exponent.
    """
    match op:
        case ArithOp.ADD | ArithOp.SUB | ArithOp.MUL:
            if not isinstance(g, Poly):
                raise TypeError(f"{op} expects a polynomial operand")
            f._check_compatible(g)
            return {ArithOp.ADD: Poly.__add__, ArithOp.SUB: Poly.__sub__, ArithOp.MUL: Poly.__mul__}[op](f, g)
        case ArithOp.SCALAR_MUL:
            if isinstance(g, Poly):
                raise TypeError("scalar_mul expects a rational operand")
            return f.scale(g)
        case ArithOp.POW:
            if not isinstance(g, int):
                raise RangeError("pow expects a non-negative integer exponent", exponent=str(g))
            return f**g
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: Poly, alpha: MultiIndex) -> Poly:
    """d^|alpha| f / dx^alpha, exact."""
    if len(alpha) != f.num_vars:
        raise DimensionError("multi-index length does not match", num_vars=f.num_vars, alpha=tuple(alpha))
    for var, times in enumerate(alpha):
        if times:
            f = f.diff(var, times)
    return f


def degree_check(f: Poly) -> DegreeInfo:
    if not f:
        raise UndefinedDegreeError("the zero polynomial has no degree")
    return DegreeInfo(degree=f.degree, homogeneous=f.is_homogeneous())


def normalize_primitive(f: Poly) -> Poly:
    """
    Canonical representative of the projective class of f.

    Coprime integer coefficients, grevlex-leading coefficient positive.
    """
    if not f:
        raise ZeroPolynomialError("cannot normalize the zero polynomial")
    _, primitive = f.element.primitive()
    if primitive.LC < 0:
        primitive = -primitive
    return Poly.from_element(primitive)


def primitive_integer_vector(values: Iterable[Scalar]) -> tuple[int, ...]:
    """Coprime integers proportional to `values`, first nonzero entry positive."""
    entries = [_as_fraction(v) for v in values]
    nonzero = [v for v in entries if v]
    if not nonzero:
        raise ZeroPolynomialError("the zero vector has no primitive representative")
    denominator = reduce(math.lcm, (v.denominator for v in nonzero))
    integers = [int(v * denominator) for v in entries]
    divisor = reduce(math.gcd, integers)
    if nonzero[0] < 0:
        divisor = -divisor
    return tuple(v // divisor for v in integers)


@dataclass(frozen=True, slots=True, eq=False)
class ProjPoint:
    """A point of P^n given by an affine representative; equality is up to scale."""

    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable[Scalar]) -> None:
        values = tuple(_as_fraction(c) for c in coords)
        if not values:
            raise DimensionError("a projective point needs coordinates")
        if not any(values):
            raise ZeroPolynomialError("all coordinates of a projective point are zero")
        object.__setattr__(self, "coords", values)

    @property
    def dimension(self) -> int:
        return len(self.coords) - 1

    def primitive(self) -> tuple[int, ...]:
        return primitive_integer_vector(self.coords)

    def scaled(self, factor: Scalar) -> ProjPoint:
        value = _as_fraction(factor)
        if not value:
            raise ZeroPolynomialError("scaling a projective point by zero")
        return ProjPoint(c * value for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.primitive() == other.primitive()

    def __hash__(self) -> int:
        return hash(self.primitive())

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def evaluate(f: Poly, point: ProjPoint | Sequence[Scalar]) -> Fraction:
    """Value of f at the given affine representative; scaling is the caller's business."""
    coords = point.coords if isinstance(point, ProjPoint) else tuple(point)
    return f.evaluate(coords)
