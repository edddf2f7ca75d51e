"""Test ideals τ(R, Δ, a^t) as stabilised ascending chains of root ideals."""

from __future__ import annotations

import logging
import time
from fractions import Fraction

from ..core.errors import ChainInvariantError, InconclusiveChainError
from ..core.settings import Settings, settings as default_settings
from ..models.divisor import DivisorSpec
from ..models.enums import ChainStop
from ..models.field import FieldConfig, Ratio, ceil_ratio, p_power_exponent
from ..models.ideal import IdealHandle
from ..models.polynomial import Polynomial
from ..models.reports import TestIdealReport
from .frobenius import FrobeniusService

logger = logging.getLogger(__name__)


class TestIdealService:
    """Computes test ideals on the regular ambient ring F_p[x1..xd].

    With K_R = 0 and Δ = Σ t_i·div(f_i) the chain of the general theory
    collapses to

        τ_n = I_n( ∏ f_i^⌈t_i·p^n⌉ · a^⌈t·p^n⌉ ),   n = 1, 2, ...

    which ascends to τ(R, Δ, a^t). The exponent convention is ⌈t·p^n⌉, not
    ⌈t·(p^n - 1)⌉; the φ-principal identity is the regression guard for it.
    """

    __test__ = False

    def __init__(self, field: FieldConfig, settings: Settings | None = None) -> None:
        self.field = field
        self.settings = settings or default_settings
        self.frobenius = FrobeniusService(field, self.settings)
        self.ideals = self.frobenius.ideals

    # ---------------------------------------------------------------- Chain --
    def test_ideal(
        self,
        delta: DivisorSpec,
        a: IdealHandle | None = None,
        t: Ratio | int = 0,
        e_max: int | None = None,
    ) -> TestIdealReport:
        """Run the root-ideal chain until it stabilises or reaches ``e_max``."""

        self.field.ensure_same(delta.field)
        t = Fraction(t)
        if t < 0:
            raise ValueError(f"Exponent t must be non-negative, got {t}")
        e_max = e_max if e_max is not None else self.settings.e_max_for(self.field.p)
        if e_max < 1:
            raise ValueError(f"e_max must be at least 1, got {e_max}")
        started = time.perf_counter()

        if a is None or t == 0:
            a = IdealHandle.unit(self.field)
            t = Fraction(0)
        elif a.is_zero():
            logger.info("τ of the zero ideal is (0) by convention")
            return self._trivial(IdealHandle.zero(self.field), started)
        if delta.is_zero() and self.ideals.is_unit(a):
            return self._trivial(IdealHandle.unit(self.field), started)

        exact_level = self._exact_level(delta, a, t)
        bound = self.ideals.canonical(IdealHandle.principal(delta.integral_part()))
        window = self.settings.confirm_window

        chain: list[IdealHandle] = []
        stop = ChainStop.CAPPED
        for n in range(1, e_max + 1):
            current = self.ideals.canonical(self._chain_step(delta, a, t, n))
            if chain and not self.ideals.is_subset(chain[-1], current):
                raise ChainInvariantError(f"Chain descended between levels {n - 1} and {n}")
            chain.append(current)
            logger.debug("τ_%d has %d basis elements", n, len(current.generators))

            if exact_level is not None and n >= exact_level:
                stop = ChainStop.EXACT
                break
            if self.ideals.equals(current, bound):
                stop = ChainStop.BOUND
                break
            if self._trailing_run(chain) > window:
                stop = ChainStop.STABLE
                break

        capped = stop is ChainStop.CAPPED
        if capped:
            logger.warning("Chain for Δ=%s, t=%s did not stabilise by level %d", delta, t, e_max)
        stabilized_at = len(chain) - self._trailing_run(chain) + 1
        report = TestIdealReport(
            ideal=chain[-1],
            stabilized_at=stabilized_at,
            chain=tuple(chain),
            capped=capped,
            stop=stop,
            elapsed=time.perf_counter() - started,
        )
        logger.info(
            "τ(Δ=%s, t=%s) stopped (%s) at level %d", delta, t, stop.value, len(chain)
        )
        return report

    def _chain_step(self, delta: DivisorSpec, a: IdealHandle, t: Fraction, n: int) -> IdealHandle:
        q = self.field.p**n
        factor = Polynomial.one(self.field)
        for term in delta.parts:
            exponent = ceil_ratio(term.t * q)
            if exponent:
                factor = factor * term.f.mul_pow(exponent)
        power = self.ideals.power(a, ceil_ratio(t * q))
        return self.frobenius.root_of_products(factor, power, n)

    def _exact_level(self, delta: DivisorSpec, a: IdealHandle, t: Fraction) -> int | None:
        """Level from which the chain is provably constant, if one is known.

        For a principal ideal (g) and exponents r/p^k, τ(g^(r/p^k)) = I_k(g^r),
        so level max(k, 1) already carries the test ideal. For other ideals
        I_k(a^r) is only contained in τ(a^(r/p^k)).
        """

        if t and len(self.ideals.reduced_basis(a)) > 1:
            return None
        levels = [p_power_exponent(term.t, self.field.p) for term in delta.parts]
        levels.append(p_power_exponent(t, self.field.p))
        if any(level is None for level in levels):
            return None
        return max(1, *levels)

    def _trailing_run(self, chain: list[IdealHandle]) -> int:
        """How many trailing entries equal the last one."""

        run = 1
        for earlier in reversed(chain[:-1]):
            if not self.ideals.equals(earlier, chain[-1]):
                break
            run += 1
        return run

    def _trivial(self, ideal: IdealHandle, started: float) -> TestIdealReport:
        ideal = self.ideals.canonical(ideal)
        return TestIdealReport(
            ideal=ideal,
            stabilized_at=0,
            chain=(),
            capped=False,
            stop=ChainStop.TRIVIAL,
            elapsed=time.perf_counter() - started,
        )

    # ------------------------------------------------------------ Predicates --
    def is_strongly_f_regular(
        self,
        delta: DivisorSpec,
        e_max: int | None = None,
        *,
        at_origin: bool = False,
    ) -> bool:
        """τ(R, Δ) = R (globally, or after localising at the origin).

        A capped chain is only conclusive when its last entry already
        witnesses regularity, because every chain entry lies inside τ.
        """

        report = self.test_ideal(delta, None, 0, e_max)
        if at_origin:
            regular = not report.ideal.vanishes_at_origin()
        else:
            regular = self.ideals.is_unit(report.ideal)
        if report.capped and not regular:
            raise InconclusiveChainError(
                f"Chain for Δ={delta} was capped; strong F-regularity undecided"
            )
        return regular
