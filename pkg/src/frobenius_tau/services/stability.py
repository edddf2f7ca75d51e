"""Measured stability of test ideals under perturbations of small multiplicity."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Sequence

from ..core.errors import FrobeniusTauError, InconclusiveChainError, NotInMaximalIdealError
from ..core.settings import Settings, settings as default_settings
from ..models.divisor import DivisorSpec
from ..models.field import FieldConfig
from ..models.ideal import IdealHandle
from ..models.polynomial import Polynomial
from ..models.reports import (
    JumpingNumber,
    PerturbationCheck,
    PerturbationWitness,
    StabilityReport,
    TestIdealReport,
)
from ..utils.rationals import farey_grid
from .tau import TestIdealService

logger = logging.getLogger(__name__)


class StabilityService:
    """Checks τ(Δ + E) = τ(Δ) at the origin and measures how small E must be.

    Ideals are compared globally in F_p[x1..xd]. Global equality implies
    equality after localising at the origin; reports also flag pairs that
    both contain a unit at the origin, which agree there regardless.
    """

    def __init__(self, field: FieldConfig, settings: Settings | None = None) -> None:
        self.field = field
        self.settings = settings or default_settings
        self.tau = TestIdealService(field, self.settings)
        self.ideals = self.tau.ideals

    # ---------------------------------------------------------- Perturbation --
    def check_perturbation(
        self,
        delta: DivisorSpec,
        perturbation: DivisorSpec,
        e_max: int | None = None,
    ) -> bool:
        return self.compare_at_origin(delta, perturbation, e_max).equal

    def compare_at_origin(
        self,
        delta: DivisorSpec,
        perturbation: DivisorSpec,
        e_max: int | None = None,
        *,
        base: TestIdealReport | None = None,
    ) -> PerturbationCheck:
        base = base or self._base(delta, e_max)
        if perturbation.is_zero():
            return PerturbationCheck(base.ideal, base.ideal, True, self._trivial(base.ideal, base.ideal))
        perturbed = self.tau.test_ideal(delta + perturbation, e_max=e_max)
        equal = self.ideals.equals(perturbed.ideal, base.ideal)
        # A capped entry sits inside the true τ(Δ + E) ⊆ τ(Δ), so equality is still conclusive.
        if perturbed.capped and not equal:
            raise InconclusiveChainError(
                f"Chain for Δ + E = {delta + perturbation} was capped; comparison undecided"
            )
        return PerturbationCheck(
            base=base.ideal,
            perturbed=perturbed.ideal,
            equal=equal,
            trivial_at_origin=self._trivial(base.ideal, perturbed.ideal),
        )

    def _base(self, delta: DivisorSpec, e_max: int | None) -> TestIdealReport:
        base = self.tau.test_ideal(delta, e_max=e_max)
        if base.capped:
            raise InconclusiveChainError(f"Chain for Δ = {delta} was capped")
        return base

    @staticmethod
    def _trivial(left: IdealHandle, right: IdealHandle) -> bool:
        """Both ideals contain an element that is a unit at the origin."""

        return not left.vanishes_at_origin() and not right.vanishes_at_origin()

    # ---------------------------------------------------------------- Jumps --
    def smallest_jumping_number(
        self,
        delta: DivisorSpec,
        g: Polynomial,
        max_den: int | None = None,
        e_max: int | None = None,
        *,
        upper: Fraction | int = 1,
    ) -> JumpingNumber:
        """Least grid s in (0, upper] with τ(Δ + s·div(g)) ⊊ τ(Δ).

        s ↦ [τ(Δ + s·div(g)) = τ(Δ)] is true below the jump and false from it
        on, so the grid is bisected. For g in m the jump is at most 1, since
        τ(Δ + div(g)) = g·τ(Δ).
        """

        self._check_probe(g)
        base = self._base(delta, e_max)
        grid = farey_grid(Fraction(0), Fraction(upper), max_den or self.settings.max_den)
        evaluations = 0

        def unchanged(s: Fraction) -> bool:
            nonlocal evaluations
            evaluations += 1
            return self.compare_at_origin(delta, DivisorSpec.of(g, s), e_max, base=base).equal

        low, high = 0, len(grid)
        while low < high:
            middle = (low + high) // 2
            if unchanged(grid[middle]):
                low = middle + 1
            else:
                high = middle
        if low == len(grid):
            logger.info("No jump of Δ=%s along %s up to %s", delta, g, upper)
            return JumpingNumber(Fraction(upper), found=False, evaluations=evaluations)
        return JumpingNumber(grid[low], found=True, evaluations=evaluations)

    # ----------------------------------------------------------------- Scans --
    def stability_scan(
        self,
        delta: DivisorSpec,
        probes: Sequence[Polynomial],
        n_max: int,
        e_max: int | None = None,
        *,
        n_min: int = 1,
    ) -> StabilityReport:
        """Compare τ(Δ + div(r)/p^n) with τ(Δ) for every probe r and level n."""

        if not probes:
            raise FrobeniusTauError("A stability scan needs at least one probe")
        if n_min < 0 or n_max < n_min:
            raise ValueError(f"Invalid level range {n_min}..{n_max}")
        for probe in probes:
            self._check_probe(probe)
        base = self._base(delta, e_max)
        p = self.field.p

        witnesses: list[PerturbationWitness] = []
        tails: dict[str, int | None] = {}
        for probe in probes:
            outcomes: list[tuple[int, bool]] = []
            for n in range(n_min, n_max + 1):
                perturbation = DivisorSpec.of(probe, Fraction(1, p**n))
                check = self.compare_at_origin(delta, perturbation, e_max, base=base)
                witnesses.append(
                    PerturbationWitness(
                        probe=probe,
                        level=n,
                        perturbation=perturbation,
                        ord=int(probe.ord_at_origin()),
                        mult=perturbation.mult_at_origin(),
                        equal=check.equal,
                    )
                )
                outcomes.append((n, check.equal))
                logger.debug("probe %s, n=%d: equal=%s", probe, n, check.equal)
            tails[str(probe)] = self._tail_index(outcomes)

        jumps = [w for w in witnesses if not w.equal]
        if jumps:
            first_jump = min(jumps, key=lambda w: (w.mult, w.level, str(w.probe)))
            delta_lower = first_jump.mult
        else:
            first_jump = None
            delta_lower = max(w.mult for w in witnesses)
        return StabilityReport(
            base_tau=base.ideal,
            delta_lower=delta_lower,
            witnesses=tuple(witnesses),
            first_jump=first_jump,
            tail_index=tails,
        )

    @staticmethod
    def _tail_index(outcomes: Sequence[tuple[int, bool]]) -> int | None:
        """First level from which every tested level kept τ unchanged."""

        tail = None
        for level, equal in reversed(outcomes):
            if not equal:
                break
            tail = level
        return tail

    def default_probes(self) -> list[Polynomial]:
        """x1, x1 + x2, x1^2 and the dense cubic Σ_{|λ|=3} x^λ."""

        x = [Polynomial.variable(self.field, i) for i in range(self.field.d)]
        probes = [x[0]]
        if self.field.d >= 2:
            probes.append(x[0] + x[1])
        probes.append(x[0] * x[0])
        cubic = {
            exponent: 1
            for exponent in itertools.product(range(4), repeat=self.field.d)
            if sum(exponent) == 3
        }
        probes.append(Polynomial(self.field, cubic))
        return probes

    def _check_probe(self, g: Polynomial) -> None:
        self.field.ensure_same(g.field)
        if g.is_zero() or not g.vanishes_at_origin():
            raise NotInMaximalIdealError(f"{g} must be a non-zero element of the maximal ideal")

    # ------------------------------------------------------------- Origin --
    def mult_at_origin(self, divisor: DivisorSpec) -> Fraction:
        return divisor.mult_at_origin()

    def jumps_at_origin(self, a: IdealHandle, e_max: int | None = None) -> bool:
        """Whether t ↦ τ(a^t) becomes non-trivial at the origin for some finite t.

        Decided at t = d: if a ⊆ m then τ(a^d) ⊆ τ(m^d) = m; otherwise a
        contains a unit at the origin and every τ(a^t) does too.
        """

        if a.is_zero():
            return True
        report = self.tau.test_ideal(DivisorSpec.zero(self.field), a, self.field.d, e_max)
        vanishes = report.ideal.vanishes_at_origin()
        if report.capped and vanishes:
            raise InconclusiveChainError("Chain for τ(a^d) was capped")
        return vanishes
