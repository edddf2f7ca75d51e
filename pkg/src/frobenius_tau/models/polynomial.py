"""Sparse multivariate polynomials over F_p."""

from __future__ import annotations

import math
from types import MappingProxyType
from typing import Iterator, Mapping

from ..core.errors import DimensionMismatchError
from .exponent import Exponent, deg_lex_key, exponent_add
from .field import FieldConfig


class Polynomial:
    """An immutable element of F_p[x1..xd] keyed by exponent vectors.

    Coefficients are stored as residues in [1, p); zero coefficients are never
    stored. Iteration runs in descending deg-lex order, so the first term is
    the leading term.
    """

    __slots__ = ("field", "_terms", "_order", "_hash")

    def __init__(self, field: FieldConfig, terms: Mapping[Exponent, int] | None = None) -> None:
        self.field = field
        cleaned: dict[Exponent, int] = {}
        p = field.p
        for exponent, coefficient in (terms or {}).items():
            if len(exponent) != field.d:
                raise DimensionMismatchError(
                    f"Exponent {exponent} does not have {field.d} components"
                )
            if any(a < 0 for a in exponent):
                raise ValueError(f"Negative exponent {exponent}")
            value = coefficient % p
            if value:
                cleaned[tuple(exponent)] = value
        self._terms = cleaned
        self._order: tuple[Exponent, ...] | None = None
        self._hash: int | None = None

    @classmethod
    def _trusted(cls, field: FieldConfig, terms: dict[Exponent, int]) -> "Polynomial":
        """Wrap an already-normalised term dict without copying it."""

        poly = cls.__new__(cls)
        poly.field = field
        poly._terms = terms
        poly._order = None
        poly._hash = None
        return poly

    # ------------------------------------------------------------ Builders --
    @classmethod
    def zero(cls, field: FieldConfig) -> "Polynomial":
        return cls._trusted(field, {})

    @classmethod
    def constant(cls, field: FieldConfig, value: int) -> "Polynomial":
        return cls(field, {(0,) * field.d: value})

    @classmethod
    def one(cls, field: FieldConfig) -> "Polynomial":
        return cls.constant(field, 1)

    @classmethod
    def monomial(cls, field: FieldConfig, exponent: Exponent, coefficient: int = 1) -> "Polynomial":
        return cls(field, {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, field: FieldConfig, index: int) -> "Polynomial":
        if not 0 <= index < field.d:
            raise ValueError(f"Variable index {index} out of range for d={field.d}")
        exponent = tuple(1 if i == index else 0 for i in range(field.d))
        return cls._trusted(field, {exponent: 1})

    # ---------------------------------------------------------- Inspection --
    @property
    def terms(self) -> Mapping[Exponent, int]:
        return MappingProxyType(self._terms)

    def exponents(self) -> tuple[Exponent, ...]:
        """Exponents in descending deg-lex order."""

        if self._order is None:
            self._order = tuple(sorted(self._terms, key=deg_lex_key, reverse=True))
        return self._order

    def items(self) -> Iterator[tuple[Exponent, int]]:
        for exponent in self.exponents():
            yield exponent, self._terms[exponent]

    def coefficient(self, exponent: Exponent) -> int:
        return self._terms.get(tuple(exponent), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(exponent) for exponent in self._terms)

    @property
    def leading_exponent(self) -> Exponent:
        if not self._terms:
            raise ValueError("The zero polynomial has no leading term")
        return self.exponents()[0]

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.leading_exponent]

    @property
    def constant_term(self) -> int:
        return self._terms.get((0,) * self.field.d, 0)

    def total_degree(self) -> int:
        return max((sum(exponent) for exponent in self._terms), default=-1)

    def ord_at_origin(self) -> int | float:
        """Order of vanishing at the origin: the lowest total degree, inf for 0."""

        if not self._terms:
            return math.inf
        return min(sum(exponent) for exponent in self._terms)

    def vanishes_at_origin(self) -> bool:
        return self.constant_term == 0

    # ---------------------------------------------------------- Arithmetic --
    def _check(self, other: "Polynomial") -> None:
        self.field.ensure_same(other.field)

    def _lift(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, other)
        return NotImplemented

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        result = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = (result.get(exponent, 0) + coefficient) % p
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return Polynomial._trusted(self.field, result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        p = self.field.p
        return Polynomial._trusted(self.field, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if len(other._terms) > len(self._terms):
            return other * self
        p = self.field.p
        result: dict[Exponent, int] = {}
        for em, cm in other._terms.items():
            for es, cs in self._terms.items():
                exponent = tuple(a + b for a, b in zip(es, em))
                result[exponent] = (result.get(exponent, 0) + cs * cm) % p
        return Polynomial._trusted(self.field, {m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        return self.mul_pow(exponent)

    def scale(self, factor: int) -> "Polynomial":
        p = self.field.p
        factor %= p
        if not factor:
            return Polynomial.zero(self.field)
        return Polynomial._trusted(self.field, {m: c * factor % p for m, c in self._terms.items()})

    def shift(self, exponent: Exponent, factor: int = 1) -> "Polynomial":
        """Multiply by factor·x^exponent."""

        p = self.field.p
        factor %= p
        if not factor:
            return Polynomial.zero(self.field)
        return Polynomial._trusted(
            self.field,
            {exponent_add(m, exponent): c * factor % p for m, c in self._terms.items()},
        )

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.field.inverse(self.leading_coefficient))

    def frob_power(self, e: int) -> "Polynomial":
        """Return f^(p^e) term by term.

        (Σ c x^λ)^q = Σ c^q x^(qλ) in characteristic p, and c^q = c in F_p.
        """

        if e < 0:
            raise ValueError(f"Frobenius exponent must be non-negative, got {e}")
        if e == 0:
            return self
        q = self.field.p**e
        return Polynomial._trusted(
            self.field,
            {tuple(q * a for a in m): c for m, c in self._terms.items()},
        )

    def mul_pow(self, n: int) -> "Polynomial":
        """Return f^n, splitting n p-adically so each digit goes through Frobenius."""

        if n < 0:
            raise ValueError(f"Power must be non-negative, got {n}")
        result = Polynomial.one(self.field)
        if n == 0:
            return result
        if not self._terms:
            return self
        if len(self._terms) == 1:
            ((exponent, coefficient),) = self._terms.items()
            return Polynomial._trusted(
                self.field,
                {tuple(n * a for a in exponent): pow(coefficient, n, self.field.p)},
            )
        p = self.field.p
        level = 0
        while n:
            n, digit = divmod(n, p)
            if digit:
                result = result * _binary_power(self, digit).frob_power(level)
            level += 1
        return result

    # ---------------------------------------------------------- Comparison --
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._terms.items())))
        return self._hash

    # ------------------------------------------------------------ Printing --
    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial(p={self.field.p}, d={self.field.d}, {format_polynomial(self)!r})"


def _binary_power(base: Polynomial, n: int) -> Polynomial:
    result = Polynomial.one(base.field)
    square = base
    while n:
        if n & 1:
            result = result * square
        n >>= 1
        if n:
            square = square * square
    return result


def format_monomial(exponent: Exponent, names: tuple[str, ...]) -> str:
    parts = []
    for name, power in zip(names, exponent):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return "*".join(parts)


def format_polynomial(poly: Polynomial) -> str:
    """Canonical text form: descending deg-lex, residues in [1, p)."""

    if poly.is_zero():
        return "0"
    names = poly.field.variable_names
    rendered = []
    for exponent, coefficient in poly.items():
        monomial = format_monomial(exponent, names)
        if not monomial:
            rendered.append(str(coefficient))
        elif coefficient == 1:
            rendered.append(monomial)
        else:
            rendered.append(f"{coefficient}*{monomial}")
    return " + ".join(rendered)
