"""Effective divisors Σ t_i·div(f_i) with exact rational coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core.errors import InvalidDivisorError
from .field import FieldConfig, Ratio, floor_ratio
from .polynomial import Polynomial


@dataclass(frozen=True, slots=True)
class DivisorTerm:
    f: Polynomial
    t: Ratio


@dataclass(frozen=True)
class DivisorSpec:
    """A formal effective combination of principal divisors.

    The ambient ring is regular with trivial canonical divisor, so the pair
    (Spec R, Δ) is described by these terms alone. No terms means Δ = 0.
    """

    field: FieldConfig
    parts: tuple[DivisorTerm, ...] = ()

    def __post_init__(self) -> None:
        for term in self.parts:
            self.field.ensure_same(term.f.field)
            if term.f.is_zero():
                raise InvalidDivisorError("div(0) is not a divisor")
            if term.f.is_constant():
                raise InvalidDivisorError(f"div({term.f}) of a unit is not allowed")
            if term.t < 0:
                raise InvalidDivisorError(f"Coefficient {term.t} is negative")
        object.__setattr__(
            self,
            "parts",
            tuple(DivisorTerm(term.f, Fraction(term.t)) for term in self.parts),
        )

    @classmethod
    def zero(cls, field: FieldConfig) -> "DivisorSpec":
        return cls(field)

    @classmethod
    def of(cls, f: Polynomial, t: Ratio | int = 1) -> "DivisorSpec":
        return cls(f.field, (DivisorTerm(f, Fraction(t)),))

    def plus(self, f: Polynomial, t: Ratio | int) -> "DivisorSpec":
        """Δ + t·div(f)."""

        return self + DivisorSpec.of(f, t)

    def __add__(self, other: "DivisorSpec") -> "DivisorSpec":
        if not isinstance(other, DivisorSpec):
            return NotImplemented
        self.field.ensure_same(other.field)
        merged: dict[Polynomial, Fraction] = {}
        for term in self.parts + other.parts:
            merged[term.f] = merged.get(term.f, Fraction(0)) + term.t
        return DivisorSpec(self.field, tuple(DivisorTerm(f, t) for f, t in merged.items()))

    def is_zero(self) -> bool:
        return all(term.t == 0 for term in self.parts)

    def mult_at_origin(self) -> Fraction:
        """Σ t_i·ord_0(f_i); on a regular ambient this is the multiplicity."""

        return sum(
            (term.t * int(term.f.ord_at_origin()) for term in self.parts),
            Fraction(0),
        )

    def integral_part(self) -> Polynomial:
        """∏ f_i^⌊t_i⌋, a generator of O(-⌊Δ⌋)."""

        result = Polynomial.one(self.field)
        for term in self.parts:
            whole = floor_ratio(term.t)
            if whole:
                result = result * term.f.mul_pow(whole)
        return result

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return "; ".join(f"{term.t}*div({term.f})" for term in self.parts)
