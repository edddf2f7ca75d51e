"""Frobenius decompositions, trace maps and p^e-th root ideals."""

from __future__ import annotations

import logging

from ..core.settings import Settings, settings as default_settings
from ..models.decomposition import FrobeniusDecomposition
from ..models.exponent import Exponent, ExponentBox
from ..models.field import FieldConfig
from ..models.ideal import IdealHandle
from ..models.polynomial import Polynomial
from .ideals import GroebnerService

logger = logging.getLogger(__name__)


class FrobeniusService:
    """Encapsulates the monomial-basis description of F^e_* R.

    R = F_p[x1..xd] is free over R^(p^e) on the monomials x^λ, λ in I_e, and
    Hom_R(F^e_* R, R) is generated by the projection onto x^(μ_e). With a
    trivial canonical divisor that projection is the trace of Frobenius.
    """

    def __init__(self, field: FieldConfig, settings: Settings | None = None) -> None:
        self.field = field
        self.settings = settings or default_settings
        self.ideals = GroebnerService(field, self.settings)

    def box(self, e: int) -> ExponentBox:
        return ExponentBox(self.field.p, self.field.d, e)

    def decompose(self, f: Polynomial, e: int) -> FrobeniusDecomposition:
        """Split each monomial c·x^η as η = p^e·α + β and collect c·x^α under β.

        The p^e-th root of c in F_p is c itself, since c^p = c. Only non-zero
        parts are returned; I_e is never enumerated.
        """

        self.field.ensure_same(f.field)
        box = self.box(e)
        collected: dict[Exponent, dict[Exponent, int]] = {}
        for exponent, coefficient in f.terms.items():
            alpha, beta = box.split(exponent)
            collected.setdefault(beta, {})[alpha] = coefficient
        parts = {beta: Polynomial(self.field, terms) for beta, terms in collected.items()}
        return FrobeniusDecomposition(self.field, e, parts)

    def trace(self, f: Polynomial, e: int) -> Polynomial:
        """Tr_{F^e}(f): the x^(μ_e) part of the decomposition."""

        q = self.box(e).q
        terms: dict[Exponent, int] = {}
        for exponent, coefficient in f.terms.items():
            if all(a % q == q - 1 for a in exponent):
                terms[tuple(a // q for a in exponent)] = coefficient
        return Polynomial(self.field, terms)

    def iterate_trace(self, f: Polynomial, e: int) -> Polynomial:
        """Apply the level-1 trace e times (equals ``trace(f, e)``)."""

        for _ in range(e):
            f = self.trace(f, 1)
        return f

    def phi(self, f: Polynomial, e: int, h: Polynomial) -> Polynomial:
        """φ_{e,Δ}(f) for a pair with (p^e - 1)Δ = div(h): the trace of h·f."""

        return self.trace(h * f, e)

    def root_ideal(self, ideal: IdealHandle, e: int) -> IdealHandle:
        """I_e(J): the smallest ideal I with J ⊆ I^[p^e].

        Generated by every decomposition part of every generator of J.
        """

        self.field.ensure_same(ideal.field)
        if e == 0:
            return ideal
        parts: list[Polynomial] = []
        for generator in ideal.generators:
            parts.extend(self.decompose(generator, e).parts.values())
        logger.debug(
            "Root ideal at level %d: %d generators -> %d parts",
            e,
            len(ideal.generators),
            len(parts),
        )
        return IdealHandle(self.field, parts)

    def root_of_products(
        self,
        factor: Polynomial,
        ideal: IdealHandle,
        e: int,
    ) -> IdealHandle:
        """I_e(factor·J) without building the product ideal first."""

        parts: list[Polynomial] = []
        for generator in ideal.generators:
            parts.extend(self.decompose(factor * generator, e).parts.values())
        return IdealHandle(self.field, parts)
