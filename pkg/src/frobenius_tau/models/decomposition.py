"""Frobenius decompositions f = Σ f_λ^(p^e) x^λ."""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from types import MappingProxyType
from typing import Iterator, Mapping

from .exponent import Exponent, ExponentBox, deg_lex_key
from .field import FieldConfig
from .polynomial import Polynomial


@dataclass(frozen=True)
class FrobeniusDecomposition:
    """The non-zero parts f_λ, λ in I_e, of a polynomial at level e."""

    field: FieldConfig
    e: int
    parts: Mapping[Exponent, Polynomial] = dataclass_field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", MappingProxyType(dict(self.parts)))

    @property
    def box(self) -> ExponentBox:
        return ExponentBox(self.field.p, self.field.d, self.e)

    def part(self, index: Exponent) -> Polynomial:
        return self.parts.get(tuple(index), Polynomial.zero(self.field))

    def indices(self) -> Iterator[Exponent]:
        """Indices of the non-zero parts in ascending deg-lex order."""

        return iter(sorted(self.parts, key=deg_lex_key))

    def reconstruct(self) -> Polynomial:
        total = Polynomial.zero(self.field)
        for index, part in self.parts.items():
            total = total + part.frob_power(self.e).shift(index)
        return total
