"""ν-functions, F-pure threshold brackets and F-jumping number scans."""

from __future__ import annotations

import logging
from fractions import Fraction

from ..core.errors import ChainInvariantError, NotInMaximalIdealError
from ..core.settings import Settings, settings as default_settings
from ..models.divisor import DivisorSpec
from ..models.exponent import Exponent
from ..models.field import FieldConfig, Ratio
from ..models.polynomial import Polynomial
from ..models.reports import FptBracket, JumpScanReport
from ..utils.rationals import farey_grid
from .tau import TestIdealService

logger = logging.getLogger(__name__)


class ThresholdService:
    """Encapsulates threshold computations at the origin."""

    def __init__(self, field: FieldConfig, settings: Settings | None = None) -> None:
        self.field = field
        self.settings = settings or default_settings
        self.tau = TestIdealService(field, self.settings)
        self.ideals = self.tau.ideals

    # ------------------------------------------------------------------- ν --
    def nu(self, f: Polynomial, e: int) -> int:
        """max{r : f^r not in (x1^q, ..., xd^q)}, q = p^e."""

        return self.nu_sequence(f, e)[-1]

    def nu_sequence(self, f: Polynomial, e: int) -> list[int]:
        """ν at levels 1..e.

        Membership in the bracket power of the maximal ideal is a per-monomial
        test, so only the part of f^r inside the box [0, q)^d is carried. The
        next level starts from the Frobenius power of that part, because
        p·ν_(e-1) <= ν_e <= p·ν_(e-1) + p - 1.
        """

        self.field.ensure_same(f.field)
        if e < 1:
            raise ValueError(f"Level must be at least 1, got {e}")
        if not f.vanishes_at_origin():
            raise NotInMaximalIdealError(f"ν is undefined for {f}: it is a unit at the origin")
        p = self.field.p
        inside = Polynomial.one(self.field)
        r = 0
        sequence = []
        for level in range(1, e + 1):
            q = p**level
            inside = inside.frob_power(1)
            r *= p
            while True:
                step = self._truncated_product(inside, f, q)
                if step.is_zero():
                    break
                inside = step
                r += 1
            sequence.append(r)
            logger.debug("ν(%s, %d) = %d", f, level, r)
        return sequence

    def _truncated_product(self, left: Polynomial, right: Polynomial, q: int) -> Polynomial:
        p = self.field.p
        result: dict[Exponent, int] = {}
        for el, cl in left.terms.items():
            for er, cr in right.terms.items():
                exponent = tuple(a + b for a, b in zip(el, er))
                if any(a >= q for a in exponent):
                    continue
                result[exponent] = (result.get(exponent, 0) + cl * cr) % p
        return Polynomial(self.field, result)

    # ------------------------------------------------------------------ fpt --
    def fpt_bracket(
        self,
        f: Polynomial,
        e_max: int,
        *,
        max_den: int | None = None,
        chain_e_max: int | None = None,
    ) -> FptBracket:
        """(ν_e/p^e, (ν_e + 1)/p^e] at e = e_max, which contains fpt(f).

        Grid rationals in the bracket are then tested in ascending order; the
        first one whose test ideal is proper is reported as ``confirmed``.
        """

        nu = self.nu(f, e_max)
        q = self.field.p**e_max
        lo, hi = Fraction(nu, q), Fraction(nu + 1, q)
        max_den = max_den or self.settings.max_den
        confirmed = None
        for s in farey_grid(lo, hi, max_den):
            report = self.tau.test_ideal(DivisorSpec.of(f, s), e_max=chain_e_max)
            if self.ideals.is_unit(report.ideal):
                continue
            if report.capped:
                logger.warning("Chain at s=%s capped; fpt bracket left unconfirmed", s)
                break
            confirmed = s
            break
        return FptBracket(lo=lo, hi=hi, nu=nu, e=e_max, confirmed=confirmed)

    # ---------------------------------------------------------------- Jumps --
    def jump_scan(
        self,
        delta: DivisorSpec,
        g: Polynomial,
        lo: Ratio | int,
        hi: Ratio | int,
        max_den: int | None = None,
        e_max: int | None = None,
    ) -> JumpScanReport:
        """Grid points s in (lo, hi] where s ↦ τ(Δ + s·div(g)) strictly drops."""

        if g.is_zero() or not g.vanishes_at_origin():
            raise NotInMaximalIdealError(f"{g} must be a non-zero element of the maximal ideal")
        lo, hi = Fraction(lo), Fraction(hi)
        if lo < 0:
            raise ValueError(f"Scan range must start at a non-negative value, got {lo}")
        grid = farey_grid(lo, hi, max_den or self.settings.max_den)

        previous = self.tau.test_ideal(delta.plus(g, lo), e_max=e_max)
        jumps: list[Fraction] = []
        capped: list[Fraction] = []
        for s in grid:
            current = self.tau.test_ideal(delta.plus(g, s), e_max=e_max)
            if current.capped:
                capped.append(s)
                logger.warning("Chain at s=%s capped; the scan may misplace a jump", s)
            if not self.ideals.equals(current.ideal, previous.ideal):
                exact = not (current.capped or previous.capped)
                if exact and not self.ideals.is_subset(current.ideal, previous.ideal):
                    raise ChainInvariantError(f"τ increased between grid points before {s}")
                jumps.append(s)
            previous = current
        logger.info("Jump scan over %d grid points found %d jumps", len(grid), len(jumps))
        return JumpScanReport(jumps=tuple(jumps), grid=grid, capped_points=tuple(capped))
