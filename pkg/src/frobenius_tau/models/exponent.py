"""Exponent vectors, the degree-lexicographic order and Frobenius boxes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from ..core.errors import DimensionMismatchError

Exponent = tuple[int, ...]


def degree(exponent: Exponent) -> int:
    return sum(exponent)


def deg_lex_key(exponent: Exponent) -> tuple[int, Exponent]:
    """Sort key realising the degree-lexicographic order (x1 > x2 > ... > xd)."""

    return (sum(exponent), exponent)


def deg_lex_compare(left: Exponent, right: Exponent) -> int:
    """Return -1, 0 or 1 as ``left`` is below, equal to or above ``right``."""

    if len(left) != len(right):
        raise DimensionMismatchError(
            f"Cannot compare exponents of length {len(left)} and {len(right)}"
        )
    lkey, rkey = deg_lex_key(left), deg_lex_key(right)
    return (lkey > rkey) - (lkey < rkey)


def divides(small: Exponent, big: Exponent) -> bool:
    return all(a <= b for a, b in zip(small, big))


def exponent_add(left: Exponent, right: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(left, right))


def exponent_sub(left: Exponent, right: Exponent) -> Exponent:
    return tuple(a - b for a, b in zip(left, right))


def exponent_lcm(left: Exponent, right: Exponent) -> Exponent:
    return tuple(max(a, b) for a, b in zip(left, right))


def coprime(left: Exponent, right: Exponent) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(left, right))


@dataclass(frozen=True, slots=True)
class ExponentBox:
    """The index set I_e = {0 <= λ_i < p^e} of the Frobenius decomposition."""

    p: int
    d: int
    e: int

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError(f"Frobenius level must be positive, got {self.e}")

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def mu(self) -> Exponent:
        """The corner μ_e = (q-1, ..., q-1) selected by the trace."""

        return (self.q - 1,) * self.d

    def __len__(self) -> int:
        return self.q**self.d

    def __contains__(self, exponent: object) -> bool:
        return (
            isinstance(exponent, tuple)
            and len(exponent) == self.d
            and all(isinstance(a, int) and 0 <= a < self.q for a in exponent)
        )

    def __iter__(self) -> Iterator[Exponent]:
        return itertools.product(range(self.q), repeat=self.d)

    def split(self, exponent: Exponent) -> tuple[Exponent, Exponent]:
        """Write η = q·α + β with β in the box; return (α, β)."""

        q = self.q
        return (
            tuple(a // q for a in exponent),
            tuple(a % q for a in exponent),
        )
