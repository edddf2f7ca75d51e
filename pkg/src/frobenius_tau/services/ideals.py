"""Gröbner engine: normal forms, reduced bases and ideal arithmetic."""

from __future__ import annotations

import heapq
import itertools
import logging
from typing import Iterable, Sequence

from ..core.errors import DegreeCapExceededError
from ..core.settings import Settings, settings as default_settings
from ..models.exponent import (
    Exponent,
    coprime,
    deg_lex_key,
    divides,
    exponent_lcm,
    exponent_sub,
)
from ..models.field import FieldConfig
from ..models.ideal import IdealHandle
from ..models.polynomial import Polynomial

logger = logging.getLogger(__name__)


def _heap_entry(exponent: Exponent) -> tuple[int, tuple[int, ...], Exponent]:
    # heapq is a min-heap; negating gives the deg-lex maximum first.
    return (-sum(exponent), tuple(-a for a in exponent), exponent)


class GroebnerService:
    """Buchberger's algorithm over F_p with the deg-lex order.

    Pairs are processed by lowest lcm degree first (normal strategy), with
    the coprime-leading-term and chain criteria. Bases are cached on the
    :class:`IdealHandle` they belong to.
    """

    def __init__(self, field: FieldConfig, settings: Settings | None = None) -> None:
        self.field = field
        self.settings = settings or default_settings

    # ------------------------------------------------------------ Normal form --
    def normal_form(self, f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
        """Fully reduce ``f`` by a list of monic polynomials."""

        self.field.ensure_same(f.field)
        if f.is_zero() or not basis:
            return f
        p = self.field.p
        leads = [(g.leading_exponent, g) for g in basis]
        work = dict(f.terms)
        heap = [_heap_entry(m) for m in work]
        heapq.heapify(heap)
        remainder: dict[Exponent, int] = {}
        while heap:
            monomial = heapq.heappop(heap)[2]
            coefficient = work.pop(monomial, 0)
            if not coefficient:
                continue
            for lead, g in leads:
                if not divides(lead, monomial):
                    continue
                shift = exponent_sub(monomial, lead)
                for exponent, gc in g.terms.items():
                    if exponent == lead:
                        continue
                    target = tuple(a + b for a, b in zip(exponent, shift))
                    previous = work.get(target)
                    value = ((previous or 0) - coefficient * gc) % p
                    if value:
                        if previous is None:
                            heapq.heappush(heap, _heap_entry(target))
                        work[target] = value
                    elif previous is not None:
                        del work[target]
                break
            else:
                remainder[monomial] = coefficient
        return Polynomial(self.field, remainder)

    def reduce(self, f: Polynomial, ideal: IdealHandle) -> Polynomial:
        """Deg-lex normal form of ``f`` modulo ``ideal``; zero iff f is in the ideal."""

        return self.normal_form(f, self.reduced_basis(ideal))

    # ------------------------------------------------------------ Buchberger --
    def reduced_basis(self, ideal: IdealHandle) -> tuple[Polynomial, ...]:
        """Return (and cache) the reduced Gröbner basis of ``ideal``."""

        self.field.ensure_same(ideal.field)
        cached = ideal.reduced_basis
        if cached is not None:
            return cached
        basis = self.groebner(ideal.generators)
        ideal.attach_basis(basis)
        return ideal.reduced_basis or ()

    def groebner(self, generators: Iterable[Polynomial]) -> tuple[Polynomial, ...]:
        polys = [g for g in generators if not g.is_zero()]
        if not polys:
            return ()
        if any(g.is_constant() for g in polys):
            return (Polynomial.one(self.field),)

        basis: list[Polynomial] = []
        for f in sorted(polys, key=lambda g: deg_lex_key(g.leading_exponent)):
            remainder = self.normal_form(f, basis)
            if remainder:
                if remainder.is_constant():
                    return (Polynomial.one(self.field),)
                basis.append(remainder.monic())
        logger.debug("Interreduced %d generators to %d", len(polys), len(basis))

        pending: set[tuple[int, int]] = set()
        queue: list[tuple[int, tuple[int, Exponent], int, int]] = []

        def add_pairs(j: int) -> None:
            lead_j = basis[j].leading_exponent
            for i in range(j):
                lcm = exponent_lcm(basis[i].leading_exponent, lead_j)
                heapq.heappush(queue, (sum(lcm), deg_lex_key(lcm), i, j))
                pending.add((i, j))

        for j in range(len(basis)):
            add_pairs(j)

        cap = self.settings.degree_cap
        reductions = 0
        while queue:
            lcm_degree, _, i, j = heapq.heappop(queue)
            pending.discard((i, j))
            lead_i = basis[i].leading_exponent
            lead_j = basis[j].leading_exponent
            if coprime(lead_i, lead_j):
                continue
            lcm = exponent_lcm(lead_i, lead_j)
            if self._chain_criterion(basis, pending, i, j, lcm):
                continue
            if lcm_degree > cap:
                raise DegreeCapExceededError(lcm_degree, cap)
            s_poly = self._s_polynomial(basis[i], basis[j], lcm)
            remainder = self.normal_form(s_poly, basis)
            reductions += 1
            if remainder.is_zero():
                continue
            if remainder.is_constant():
                return (Polynomial.one(self.field),)
            basis.append(remainder.monic())
            add_pairs(len(basis) - 1)

        reduced = self._reduce(basis)
        logger.debug(
            "Gröbner basis: %d elements after %d S-pair reductions", len(reduced), reductions
        )
        return reduced

    @staticmethod
    def _chain_criterion(
        basis: Sequence[Polynomial],
        pending: set[tuple[int, int]],
        i: int,
        j: int,
        lcm: Exponent,
    ) -> bool:
        for k, g in enumerate(basis):
            if k in (i, j) or not divides(g.leading_exponent, lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    @staticmethod
    def _s_polynomial(f: Polynomial, g: Polynomial, lcm: Exponent) -> Polynomial:
        # f and g are monic
        return f.shift(exponent_sub(lcm, f.leading_exponent)) - g.shift(
            exponent_sub(lcm, g.leading_exponent)
        )

    def _reduce(self, basis: Sequence[Polynomial]) -> tuple[Polynomial, ...]:
        ordered = sorted(basis, key=lambda g: deg_lex_key(g.leading_exponent))
        minimal: list[Polynomial] = []
        for g in ordered:
            if not any(divides(h.leading_exponent, g.leading_exponent) for h in minimal):
                minimal.append(g)
        reduced = []
        for index, g in enumerate(minimal):
            others = minimal[:index] + minimal[index + 1 :]
            reduced.append(self.normal_form(g, others).monic())
        return tuple(sorted(reduced, key=lambda g: deg_lex_key(g.leading_exponent)))

    # ----------------------------------------------------------- Comparison --
    def contains(self, ideal: IdealHandle, f: Polynomial) -> bool:
        return self.reduce(f, ideal).is_zero()

    def is_subset(self, small: IdealHandle, big: IdealHandle) -> bool:
        """J ⊆ K iff every generator of J reduces to zero modulo K."""

        basis = self.reduced_basis(big)
        return all(self.normal_form(g, basis).is_zero() for g in small.generators)

    def equals(self, left: IdealHandle, right: IdealHandle) -> bool:
        """Canonical-form equality of the reduced Gröbner bases."""

        return self.reduced_basis(left) == self.reduced_basis(right)

    def is_unit(self, ideal: IdealHandle) -> bool:
        basis = self.reduced_basis(ideal)
        return len(basis) == 1 and basis[0].is_constant()

    def canonical(self, ideal: IdealHandle) -> IdealHandle:
        """A handle whose generators are the reduced Gröbner basis."""

        basis = self.reduced_basis(ideal)
        handle = IdealHandle(self.field, basis)
        handle.attach_basis(basis)
        return handle

    # ----------------------------------------------------------- Arithmetic --
    def ideal(self, generators: Iterable[Polynomial]) -> IdealHandle:
        return IdealHandle(self.field, generators)

    def sum(self, left: IdealHandle, right: IdealHandle) -> IdealHandle:
        return IdealHandle(self.field, left.generators + right.generators)

    def product(self, left: IdealHandle, right: IdealHandle) -> IdealHandle:
        return IdealHandle(
            self.field,
            (f * g for f, g in itertools.product(left.generators, right.generators)),
        )

    def power(self, ideal: IdealHandle, n: int) -> IdealHandle:
        """Generator-level power: every product of n generators, repeats allowed."""

        if n < 0:
            raise ValueError(f"Ideal power must be non-negative, got {n}")
        if n == 0:
            return IdealHandle.unit(self.field)
        generators = ideal.generators
        if not generators:
            return IdealHandle.zero(self.field)
        if len(generators) == 1:
            return IdealHandle.principal(generators[0].mul_pow(n))
        powers: dict[tuple[int, int], Polynomial] = {}

        def cached_power(index: int, k: int) -> Polynomial:
            key = (index, k)
            if key not in powers:
                powers[key] = generators[index].mul_pow(k)
            return powers[key]

        products = []
        for combination in itertools.combinations_with_replacement(range(len(generators)), n):
            counts: dict[int, int] = {}
            for index in combination:
                counts[index] = counts.get(index, 0) + 1
            term = Polynomial.one(self.field)
            for index, k in counts.items():
                term = term * cached_power(index, k)
            products.append(term)
        return IdealHandle(self.field, products)

    def multiply(self, ideal: IdealHandle, f: Polynomial) -> IdealHandle:
        return IdealHandle(self.field, (f * g for g in ideal.generators))

    def bracket_power(self, ideal: IdealHandle, e: int) -> IdealHandle:
        """J^[p^e]: Frobenius powers of the generators (flatness of Frobenius)."""

        if e < 0:
            raise ValueError(f"Frobenius level must be non-negative, got {e}")
        return IdealHandle(self.field, (g.frob_power(e) for g in ideal.generators))
