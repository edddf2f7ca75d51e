"""Shared fixtures: rings and seeded random polynomials."""

from __future__ import annotations

import random

import pytest

from frobenius_tau.models import FieldConfig, Polynomial


@pytest.fixture
def f7() -> FieldConfig:
    return FieldConfig(7, 2)


@pytest.fixture
def f3() -> FieldConfig:
    return FieldConfig(3, 2)


@pytest.fixture
def f2() -> FieldConfig:
    return FieldConfig(2, 2)


def random_polynomial(
    rng: random.Random,
    field: FieldConfig,
    max_degree: int = 6,
    max_terms: int = 5,
    *,
    in_maximal_ideal: bool = False,
    nonzero: bool = True,
) -> Polynomial:
    """A sparse polynomial with up to ``max_terms`` terms of degree <= ``max_degree``."""

    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            total = rng.randint(1 if in_maximal_ideal else 0, max_degree)
            cuts = sorted(rng.randint(0, total) for _ in range(field.d - 1))
            exponent = tuple(b - a for a, b in zip((0, *cuts), (*cuts, total)))
            terms[exponent] = rng.randrange(1, field.p)
        f = Polynomial(field, terms)
        if f or not nonzero:
            return f
