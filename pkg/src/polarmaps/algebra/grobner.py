"""
Gröbner bases over the rationals.

Buchberger's algorithm with the Gebauer-Möller criteria and the normal
selection strategy, run on sympy `PolyRing` elements, plus the ideal queries
built on top of it: normal forms, projective emptiness, Hilbert functions,
degrees of zero-dimensional schemes and elimination.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction
from types import MappingProxyType

import structlog
from sympy.polys.monomials import monomial_divides, monomial_ldiv, monomial_lcm, monomial_mul
from sympy.polys.orderings import MonomialOrder as SympyOrder
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing

from src import Loggers
from src.polarmaps.algebra.linalg import sparse_rank
from src.polarmaps.algebra.polycore import (
    MultiIndex,
    Poly,
    grevlex_key,
    lex_key,
    multi_indices,
    normalize_primitive,
    ring_of,
)
from src.polarmaps.errors import DimensionError, InhomogeneousError, PreconditionError, ResourceLimitError

logger = structlog.getLogger(Loggers.engine.name)


class OrderKind(StrEnum):
    GREVLEX = "grevlex"
    LEX = "lex"
    BLOCK = "block"


class EliminationOrder(SympyOrder):
    """grevlex on the leading block of variables, ties broken by grevlex on the rest."""

    alias = "block"
    is_global = True

    def __init__(self, block_size: int) -> None:
        self.block_size = block_size

    def __call__(self, monomial: MultiIndex) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return grevlex(monomial[: self.block_size]), grevlex(monomial[self.block_size :])

    def __repr__(self) -> str:
        return f"EliminationOrder({self.block_size})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EliminationOrder) and other.block_size == self.block_size

    def __hash__(self) -> int:
        return hash((EliminationOrder, self.block_size))


@dataclass(frozen=True, slots=True)
class MonomialOrder:
    """
    A monomial order on `num_vars` variables.

    The block order compares the first `elim_block_size` variables by grevlex
    first and breaks ties by grevlex on the remaining ones; it is an
    elimination order for the leading block.
    """

    kind: OrderKind
    num_vars: int
    elim_block_size: int = 0

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise DimensionError("a monomial order needs at least one variable", num_vars=self.num_vars)
        if self.kind == OrderKind.BLOCK and not 0 <= self.elim_block_size <= self.num_vars:
            raise DimensionError(
                "elimination block larger than the ring",
                elim_block_size=self.elim_block_size,
                num_vars=self.num_vars,
            )

    @classmethod
    def grevlex(cls, num_vars: int) -> MonomialOrder:
        return cls(OrderKind.GREVLEX, num_vars)

    @classmethod
    def lex(cls, num_vars: int) -> MonomialOrder:
        return cls(OrderKind.LEX, num_vars)

    @classmethod
    def block(cls, num_vars: int, elim_block_size: int) -> MonomialOrder:
        return cls(OrderKind.BLOCK, num_vars, elim_block_size)

    @property
    def sympy_order(self) -> SympyOrder:
        match self.kind:
            case OrderKind.GREVLEX:
                return grevlex
            case OrderKind.LEX:
                return lex
            case OrderKind.BLOCK:
                return EliminationOrder(self.elim_block_size)
        raise ValueError(f"unknown order kind {self.kind!r}")

    @property
    def ring(self) -> PolyRing:
        return ring_of(self.num_vars, self.sympy_order)

    def key(self, alpha: MultiIndex) -> tuple[int, ...]:
        """Flat integer tuple; a larger tuple means a larger monomial."""
        match self.kind:
            case OrderKind.GREVLEX:
                return grevlex_key(alpha)
            case OrderKind.LEX:
                return lex_key(alpha)
            case OrderKind.BLOCK:
                b = self.elim_block_size
                return grevlex_key(alpha[:b]) + grevlex_key(alpha[b:])
        raise ValueError(f"unknown order kind {self.kind!r}")

    def compare(self, a: MultiIndex, b: MultiIndex) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


@dataclass(frozen=True, slots=True)
class GroebnerLimits:
    step_limit: int = 50_000
    max_basis_size: int = 5_000
    hilbert_extra_degrees: int = 12


DEFAULT_LIMITS = GroebnerLimits()


@dataclass(frozen=True, slots=True)
class IdealBasis:
    """Nonzero generators of an ideal, all in one ring, with the order used to compute with them."""

    generators: tuple[Poly, ...]
    order: MonomialOrder

    def __post_init__(self) -> None:
        for g in self.generators:
            if not g:
                raise PreconditionError("ideal generators must be nonzero")
            if g.num_vars != self.order.num_vars:
                raise DimensionError(
                    "generator ring does not match the monomial order",
                    generator_num_vars=g.num_vars,
                    order_num_vars=self.order.num_vars,
                )

    @classmethod
    def of(cls, generators: Iterable[Poly], order: MonomialOrder | None = None) -> IdealBasis:
        """Normalize generators, dropping zeros and duplicates."""
        seen: dict[Poly, None] = {}
        for g in generators:
            if g:
                seen.setdefault(normalize_primitive(g), None)
        polys = tuple(seen)
        if order is None:
            if not polys:
                raise PreconditionError("cannot infer the ring of an empty generator list")
            order = MonomialOrder.grevlex(polys[0].num_vars)
        return cls(polys, order)

    @property
    def num_vars(self) -> int:
        return self.order.num_vars

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def with_order(self, order: MonomialOrder) -> IdealBasis:
        return IdealBasis(self.generators, order)


@dataclass(frozen=True, slots=True)
class GroebnerBasis:
    basis: tuple[Poly, ...]
    order: MonomialOrder
    reduced: bool = True

    @property
    def leading_monomials(self) -> tuple[MultiIndex, ...]:
        return tuple(g.leading_term(self.order.key)[0] for g in self.basis)

    def elements(self) -> list[PolyElement]:
        """The basis as elements of the ring carrying the basis order."""
        ring = self.order.ring
        return [g.in_ring(ring) for g in self.basis]

    def as_ideal(self) -> IdealBasis:
        return IdealBasis.of(self.basis, self.order)


@dataclass(frozen=True, slots=True)
class EmptinessResult:
    """
    Outcome of the projective emptiness test.

    Attributes:
        empty: V(I) is empty in projective space.
        pure_powers: variable index -> smallest m with x_i^m a leading monomial.
        missing_variables: variables without a pure-power leading monomial.
        affine_dimension: Krull dimension of the affine cone V(I).
    """

    empty: bool
    pure_powers: Mapping[int, int] = field(default_factory=dict)
    missing_variables: tuple[int, ...] = ()
    affine_dimension: int = 0

    @property
    def witness(self) -> str:
        if self.empty:
            return "leading monomials " + ", ".join(f"x{i}^{m}" for i, m in sorted(self.pure_powers.items()))
        missing = ", ".join(f"x{i}" for i in self.missing_variables)
        return (
            f"no pure power of {missing} among the leading monomials; "
            f"the zero set has projective dimension {self.affine_dimension - 1}"
        )


def leading_term(f: Poly, order: MonomialOrder) -> tuple[MultiIndex, Fraction]:
    return f.leading_term(order.key)


def _spoly(f: PolyElement, g: PolyElement) -> PolyElement:
    m = monomial_lcm(f.LM, g.LM)
    return f.mul_term((monomial_ldiv(m, f.LM), 1 / f.LC)) - g.mul_term((monomial_ldiv(m, g.LM), 1 / g.LC))


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    ring = order.ring
    return Poly.from_element(_spoly(f.in_ring(ring), g.in_ring(ring)))


def normal_form(f: Poly, basis: GroebnerBasis) -> Poly:
    """Remainder of f under division by the basis; no remainder term is divisible by a leading monomial."""
    if f.num_vars != basis.order.num_vars:
        raise DimensionError(
            "polynomial ring does not match the basis",
            num_vars=f.num_vars,
            basis_num_vars=basis.order.num_vars,
        )
    return Poly.from_element(f.in_ring(basis.order.ring).rem(basis.elements()))


class _Buchberger:
    """Private working state of one Buchberger run."""

    def __init__(self, ideal: IdealBasis, limits: GroebnerLimits) -> None:
        self.order = ideal.order
        self.ring = ideal.order.ring
        self.key = self.ring.order
        self.limits = limits
        self.polys: list[PolyElement] = []
        self.basis: list[int] = []
        self.pairs: list[tuple[int, int]] = []
        self.reductions = 0
        self.zero_reductions = 0
        self.ideal = ideal

    def _lm(self, i: int) -> MultiIndex:
        return self.polys[i].LM

    def _update(self, ih: int) -> None:
        mh = self._lm(ih)
        candidates = sorted(self.basis)
        kept: list[tuple[int, int]] = []
        while candidates:
            ig = candidates.pop(0)
            lcm_hg = monomial_lcm(mh, self._lm(ig))
            coprime = monomial_mul(mh, self._lm(ig)) == lcm_hg

            def lcm_divides(ip: int, lcm_hg: MultiIndex = lcm_hg) -> bool:
                return monomial_divides(monomial_lcm(mh, self._lm(ip)), lcm_hg)

            if coprime or (
                not any(lcm_divides(ip) for ip in candidates) and not any(lcm_divides(pair[1]) for pair in kept)
            ):
                kept.append((ih, ig))
        fresh = [(ih, ig) for ih, ig in kept if monomial_mul(mh, self._lm(ig)) != monomial_lcm(mh, self._lm(ig))]
        surviving: list[tuple[int, int]] = []
        for ig1, ig2 in self.pairs:
            m1, m2 = self._lm(ig1), self._lm(ig2)
            lcm12 = monomial_lcm(m1, m2)
            if not monomial_divides(mh, lcm12) or monomial_lcm(m1, mh) == lcm12 or monomial_lcm(m2, mh) == lcm12:
                surviving.append((ig1, ig2))
        self.pairs = surviving + fresh
        self.basis = [ig for ig in self.basis if not monomial_divides(mh, self._lm(ig))] + [ih]
        if len(self.basis) > self.limits.max_basis_size:
            raise ResourceLimitError(
                "Gröbner basis grew past the configured size",
                max_basis_size=self.limits.max_basis_size,
                basis_size=len(self.basis),
                reductions=self.reductions,
            )

    def _select(self) -> tuple[int, int]:
        pair = min(
            self.pairs,
            key=lambda p: (self.key(monomial_lcm(self._lm(p[0]), self._lm(p[1]))), min(p), max(p)),
        )
        self.pairs.remove(pair)
        return pair

    def _divisors(self, indices: Iterable[int]) -> list[PolyElement]:
        return sorted((self.polys[i] for i in indices), key=lambda g: self.key(g.LM))

    def _add(self, h: PolyElement) -> int:
        self.polys.append(h.monic())
        return len(self.polys) - 1

    def run(self) -> GroebnerBasis:
        initial = sorted((g.in_ring(self.ring) for g in self.ideal.generators), key=lambda g: self.key(g.LM))
        for g in initial:
            self._update(self._add(g))

        while self.pairs:
            i, j = self._select()
            self.reductions += 1
            if self.reductions > self.limits.step_limit:
                raise ResourceLimitError(
                    "Buchberger step limit exceeded",
                    step_limit=self.limits.step_limit,
                    basis_size=len(self.basis),
                    pending_pairs=len(self.pairs),
                    zero_reductions=self.zero_reductions,
                )
            remainder = _spoly(self.polys[i], self.polys[j]).rem(self._divisors(self.basis))
            if remainder:
                self._update(self._add(remainder))
            else:
                self.zero_reductions += 1

        return self._reduced()

    def _reduced(self) -> GroebnerBasis:
        minimal: list[int] = []
        for idx in sorted(self.basis):
            lead = self._lm(idx)
            if any(monomial_divides(self._lm(other), lead) for other in minimal):
                continue
            minimal = [o for o in minimal if not monomial_divides(lead, self._lm(o))] + [idx]
        # with a minimal basis no other leading monomial divides LM(g), so rem only rewrites the tail
        reduced = [self.polys[idx].rem(self._divisors(o for o in minimal if o != idx)) for idx in minimal]
        reduced.sort(key=lambda g: self.key(g.LM), reverse=True)
        logger.debug(
            "Buchberger finished",
            order=str(self.order.kind),
            num_vars=self.order.num_vars,
            generators=len(self.ideal.generators),
            basis_size=len(reduced),
            reductions=self.reductions,
            zero_reductions=self.zero_reductions,
        )
        return GroebnerBasis(tuple(Poly.from_element(g) for g in reduced), self.order, reduced=True)


def buchberger(ideal: IdealBasis, limits: GroebnerLimits = DEFAULT_LIMITS) -> GroebnerBasis:
    """
    Reduced Gröbner basis of the ideal under `ideal.order`.

    Raises:
        PreconditionError: Empty generator list.
        ResourceLimitError: Step or basis-size limit exceeded.
    """
    if not ideal.generators:
        raise PreconditionError("Buchberger needs at least one generator")
    return _Buchberger(ideal, limits).run()


def ideal_contains(ideal: IdealBasis, f: Poly, limits: GroebnerLimits = DEFAULT_LIMITS) -> bool:
    return not normal_form(f, buchberger(ideal, limits))


def affine_dimension(leading_monomials: Sequence[MultiIndex], num_vars: int) -> int:
    """
    Krull dimension of S / (leading monomials).

    It is the size of the largest set of variables containing the support of
    no leading monomial; -1 for the unit ideal.
    """
    supports = [frozenset(i for i, a in enumerate(alpha) if a) for alpha in leading_monomials]
    if any(not s for s in supports):
        return -1
    for size in range(num_vars, -1, -1):
        for subset in itertools.combinations(range(num_vars), size):
            chosen = frozenset(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


def _require_homogeneous(ideal: IdealBasis) -> None:
    for g in ideal.generators:
        if not g.is_homogeneous():
            raise InhomogeneousError("generator is not homogeneous", generator=str(g))


def emptiness_of(gb: GroebnerBasis) -> EmptinessResult:
    """Read the emptiness certificate off the leading monomials of a Gröbner basis."""
    lms = gb.leading_monomials
    n = gb.order.num_vars
    if any(not any(alpha) for alpha in lms):
        return EmptinessResult(True, MappingProxyType(dict.fromkeys(range(n), 0)), (), -1)
    powers: dict[int, int] = {}
    for alpha in lms:
        support = [i for i, a in enumerate(alpha) if a]
        if len(support) == 1:
            i = support[0]
            powers[i] = min(powers.get(i, alpha[i]), alpha[i])
    missing = tuple(i for i in range(n) if i not in powers)
    return EmptinessResult(
        empty=not missing,
        pure_powers=MappingProxyType(powers),
        missing_variables=missing,
        affine_dimension=affine_dimension(lms, n),
    )


def is_projectively_empty(ideal: IdealBasis, limits: GroebnerLimits = DEFAULT_LIMITS) -> EmptinessResult:
    """
    Decide V(I) = {} in projective space.

    The zero set is empty exactly when the affine cone is the origin, i.e.
    when every variable has a pure power among the leading monomials of a
    Gröbner basis.
    """
    _require_homogeneous(ideal)
    return emptiness_of(buchberger(ideal, limits))


def hilbert_function(ideal: IdealBasis, t: int) -> int:
    """
    dim (S/I)_t, computed from the rank of the degree-t Macaulay matrix
    spanned by the multiples m * g of the generators.
    """
    _require_homogeneous(ideal)
    n = ideal.num_vars
    columns = {alpha: idx for idx, alpha in enumerate(multi_indices(n, t))}
    rows: list[dict[int, Fraction]] = []
    for g in ideal.generators:
        e = g.degree
        if e > t:
            continue
        for m in multi_indices(n, t - e):
            rows.append({columns[monomial_mul(alpha, m)]: c for alpha, c in g.terms.items()})
    return len(columns) - sparse_rank(rows)


def hilbert_function_from_basis(basis: GroebnerBasis, t: int) -> int:
    """Number of degree-t standard monomials, those outside the leading-term ideal."""
    lms = basis.leading_monomials
    return sum(
        1 for m in multi_indices(basis.order.num_vars, t) if not any(monomial_divides(lm, m) for lm in lms)
    )


def regularity_bound(ideal: IdealBasis) -> int:
    return sum(g.degree - 1 for g in ideal.generators) + 1


def zero_dim_degree(ideal: IdealBasis, limits: GroebnerLimits = DEFAULT_LIMITS) -> int:
    """
    Degree of the zero-dimensional projective scheme V(I), with multiplicity.

    The value is the stabilized Hilbert function, counted as standard
    monomials of the Gröbner basis: it is sampled from the regularity bound
    sum(deg g - 1) + 1 on until two consecutive values agree. An ideal
    without projective zeros has degree 0.

    Raises:
        DimensionError: V(I) has positive dimension.
        ResourceLimitError: No stabilization within the configured extra degrees.
    """
    _require_homogeneous(ideal)
    gb = buchberger(ideal, limits)
    dim = affine_dimension(gb.leading_monomials, ideal.num_vars)
    if dim >= 2:
        raise DimensionError("the ideal is not zero-dimensional", projective_dimension=dim - 1)
    if dim <= 0:
        return 0
    t = regularity_bound(ideal)
    previous = hilbert_function_from_basis(gb, t)
    for t in range(t + 1, t + 1 + limits.hilbert_extra_degrees):
        current = hilbert_function_from_basis(gb, t)
        if current == previous:
            logger.debug("Hilbert function stabilized", degree=t, value=current)
            return current
        previous = current
    raise ResourceLimitError(
        "Hilbert function did not stabilize",
        last_degree=t,
        last_value=previous,
        hilbert_extra_degrees=limits.hilbert_extra_degrees,
    )


def artinian_length(ideal: IdealBasis, limits: GroebnerLimits = DEFAULT_LIMITS) -> int:
    """
    Total length sum_t dim (S/I)_t of an ideal whose projective zero set is empty.

    Raises:
        DimensionError: The ideal has projective zeros.
        ResourceLimitError: The Hilbert function does not reach zero in time.
    """
    _require_homogeneous(ideal)
    gb = buchberger(ideal, limits)
    emptiness = emptiness_of(gb)
    if not emptiness.empty:
        raise DimensionError("the quotient is not Artinian", witness=emptiness.witness)
    total = 0
    last = regularity_bound(ideal) + limits.hilbert_extra_degrees
    for t in range(last + 1):
        value = hilbert_function_from_basis(gb, t)
        if not value:
            return total
        total += value
    raise ResourceLimitError("Hilbert function did not vanish", last_degree=last)


def eliminate(ideal: IdealBasis, keep_last: int, limits: GroebnerLimits = DEFAULT_LIMITS) -> IdealBasis:
    """
    Generators of I intersected with the subring of the trailing `keep_last` variables.

    The result lives in a ring with `keep_last` variables (x_i of the result is
    x_(i + n - keep_last) of the input). Keeping every variable returns the
    reduced Gröbner basis of I in its own ring.
    """
    n = ideal.num_vars
    if not 1 <= keep_last <= n:
        raise DimensionError("keep_last out of range", keep_last=keep_last, num_vars=n)
    if keep_last == n:
        return buchberger(ideal, limits).as_ideal()
    dropped = n - keep_last
    gb = buchberger(ideal.with_order(MonomialOrder.block(n, dropped)), limits)
    survivors = [
        Poly(keep_last, {alpha[dropped:]: c for alpha, c in g.terms.items()})
        for g in gb.basis
        if all(not any(alpha[:dropped]) for alpha in g.terms)
    ]
    logger.debug("Elimination finished", num_vars=n, kept=keep_last, generators=len(survivors))
    return IdealBasis.of(survivors, MonomialOrder.grevlex(keep_last))
