"""Helpers for grids of rationals with bounded denominators."""

from __future__ import annotations

import math
from fractions import Fraction


def farey_grid(lo: Fraction, hi: Fraction, max_den: int) -> tuple[Fraction, ...]:
    """All rationals s with lo < s <= hi and denominator <= max_den, ascending."""

    if max_den < 1:
        raise ValueError(f"max_den must be positive, got {max_den}")
    if hi < lo:
        raise ValueError(f"Empty range ({lo}, {hi}]")
    values: set[Fraction] = set()
    for den in range(1, max_den + 1):
        first = math.floor(lo * den) + 1
        last = math.floor(hi * den)
        for num in range(first, last + 1):
            values.add(Fraction(num, den))
    return tuple(sorted(values))


def parse_ratio(text: str) -> Fraction:
    """Parse ``a``, ``a/b`` or ``-a/b`` into an exact rational."""

    cleaned = text.strip()
    if not cleaned:
        raise ValueError("Empty rational literal")
    num, sep, den = cleaned.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Invalid rational literal '{text}'") from exc
