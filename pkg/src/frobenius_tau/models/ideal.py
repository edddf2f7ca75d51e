"""Finitely generated ideals with a cached reduced Gröbner basis."""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import FieldConfig
from .polynomial import Polynomial


class IdealHandle:
    """An ideal of F_p[x1..xd] given by generators.

    The reduced deg-lex Gröbner basis is computed on demand by
    :class:`~frobenius_tau.services.ideals.GroebnerService` and stored once;
    after that the handle is read-only. The zero ideal has no generators.
    """

    __slots__ = ("field", "generators", "_basis")

    def __init__(self, field: FieldConfig, generators: Iterable[Polynomial] = ()) -> None:
        kept: list[Polynomial] = []
        seen: set[Polynomial] = set()
        for generator in generators:
            field.ensure_same(generator.field)
            if generator.is_zero() or generator in seen:
                continue
            seen.add(generator)
            kept.append(generator)
        self.field = field
        self.generators: tuple[Polynomial, ...] = tuple(kept)
        self._basis: tuple[Polynomial, ...] | None = None

    @classmethod
    def zero(cls, field: FieldConfig) -> "IdealHandle":
        return cls(field)

    @classmethod
    def unit(cls, field: FieldConfig) -> "IdealHandle":
        handle = cls(field, [Polynomial.one(field)])
        handle._basis = handle.generators
        return handle

    @classmethod
    def principal(cls, generator: Polynomial) -> "IdealHandle":
        return cls(generator.field, [generator])

    @property
    def reduced_basis(self) -> tuple[Polynomial, ...] | None:
        """The cached reduced Gröbner basis, or None if not computed yet."""

        return self._basis

    def attach_basis(self, basis: Sequence[Polynomial]) -> None:
        if self._basis is not None:
            return
        self._basis = tuple(basis)

    def is_zero(self) -> bool:
        return not self.generators

    def vanishes_at_origin(self) -> bool:
        """True when every element of the ideal vanishes at the origin."""

        return all(generator.vanishes_at_origin() for generator in self.generators)

    def __repr__(self) -> str:
        shown = ", ".join(str(g) for g in (self._basis or self.generators))
        return f"IdealHandle(p={self.field.p}, d={self.field.d}, ({shown}))"
