"""Result records returned by the services."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .divisor import DivisorSpec
from .enums import ChainStop
from .ideal import IdealHandle
from .polynomial import Polynomial


@dataclass(frozen=True)
class TestIdealReport:
    """Outcome of an ascending root-ideal chain."""

    __test__ = False

    ideal: IdealHandle
    stabilized_at: int
    chain: tuple[IdealHandle, ...]
    capped: bool
    stop: ChainStop
    elapsed: float = 0.0


@dataclass(frozen=True)
class FptBracket:
    """ν_e/p^e < fpt <= (ν_e + 1)/p^e, plus a grid value confirmed by test ideals."""

    lo: Fraction
    hi: Fraction
    nu: int
    e: int
    confirmed: Fraction | None = None


@dataclass(frozen=True)
class JumpScanReport:
    jumps: tuple[Fraction, ...]
    grid: tuple[Fraction, ...]
    capped_points: tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class JumpingNumber:
    """Smallest jump on a grid; ``found`` False means only ``value`` < c is known."""

    value: Fraction
    found: bool
    evaluations: int = 0


@dataclass(frozen=True)
class PerturbationCheck:
    """τ(Δ) against τ(Δ + E).

    ``trivial_at_origin`` is set only when neither ideal vanishes at the origin,
    so both localise to the unit ideal there. Proper ideals that agree at the
    origin, such as (x) and (x·(x + 1)), leave it unset.
    """

    base: IdealHandle
    perturbed: IdealHandle
    equal: bool
    trivial_at_origin: bool


@dataclass(frozen=True)
class PerturbationWitness:
    probe: Polynomial
    level: int
    perturbation: DivisorSpec
    ord: int
    mult: Fraction
    equal: bool


@dataclass(frozen=True)
class StabilityReport:
    """Measured stability radius around a base divisor at the origin.

    ``delta_lower`` is a verified lower bound over the tested family: every
    witness with multiplicity below it kept the test ideal unchanged.
    """

    base_tau: IdealHandle
    delta_lower: Fraction
    witnesses: tuple[PerturbationWitness, ...]
    first_jump: PerturbationWitness | None
    tail_index: dict[str, int | None] = field(default_factory=dict)
