"""Prime-field elements and exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import isprime

from ..core.errors import FieldMismatchError

Ratio = Fraction


@dataclass(frozen=True, slots=True)
class FieldConfig:
    """The ring F_p[x1, ..., xd]: characteristic and number of variables."""

    p: int
    d: int

    def __post_init__(self) -> None:
        if self.p < 2 or not isprime(self.p):
            raise ValueError(f"Characteristic must be a prime, got {self.p}")
        if self.d < 1:
            raise ValueError(f"Number of variables must be positive, got {self.d}")

    @property
    def variable_names(self) -> tuple[str, ...]:
        """Names used by the parser and printer: x, y, z for d <= 3, else x1..xd."""

        if self.d <= 3:
            return ("x", "y", "z")[: self.d]
        return tuple(f"x{i}" for i in range(1, self.d + 1))

    def element(self, value: int) -> "Fp":
        return Fp(value % self.p, self.p)

    def inverse(self, value: int) -> int:
        """Inverse of a raw coefficient, as a raw coefficient."""

        return fp_inverse(self.element(value)).value

    def ensure_same(self, other: "FieldConfig") -> None:
        if self != other:
            raise FieldMismatchError(f"Operands live in different rings: {self} and {other}")


@dataclass(frozen=True, slots=True)
class Fp:
    """An element of F_p stored as its residue in [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.p:
            raise ValueError(f"{self.value} is not a residue modulo {self.p}")

    def _coerce(self, other: "Fp | int") -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"Cannot combine F_{self.p} and F_{other.p}")
            return other.value
        return other % self.p

    def __add__(self, other: "Fp | int") -> "Fp":
        return Fp((self.value + self._coerce(other)) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other: "Fp | int") -> "Fp":
        return Fp((self.value - self._coerce(other)) % self.p, self.p)

    def __rsub__(self, other: "Fp | int") -> "Fp":
        return Fp((self._coerce(other) - self.value) % self.p, self.p)

    def __mul__(self, other: "Fp | int") -> "Fp":
        return Fp((self.value * self._coerce(other)) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self) -> "Fp":
        return Fp(-self.value % self.p, self.p)

    def __truediv__(self, other: "Fp | int") -> "Fp":
        return self * fp_inverse(Fp(self._coerce(other), self.p))

    def __pow__(self, exponent: int) -> "Fp":
        if exponent < 0:
            return fp_inverse(self) ** (-exponent)
        return Fp(pow(self.value, exponent, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def fp_inverse(a: Fp) -> Fp:
    """Multiplicative inverse in F_p."""

    if a.value == 0:
        raise ZeroDivisionError(f"0 has no inverse in F_{a.p}")
    return Fp(pow(a.value, -1, a.p), a.p)


def ceil_ratio(t: Ratio | int) -> int:
    """Smallest integer not below ``t``, computed exactly."""

    return math.ceil(Fraction(t))


def floor_ratio(t: Ratio | int) -> int:
    return math.floor(Fraction(t))


def p_power_exponent(t: Ratio | int, p: int) -> int | None:
    """Return k when the reduced denominator of ``t`` is p^k, otherwise None."""

    den = Fraction(t).denominator
    k = 0
    while den % p == 0:
        den //= p
        k += 1
    return k if den == 1 else None
