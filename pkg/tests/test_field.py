"""Prime-field elements and exact rational helpers."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from frobenius_tau.core.errors import FieldMismatchError
from frobenius_tau.models.field import (
    FieldConfig,
    Fp,
    ceil_ratio,
    floor_ratio,
    fp_inverse,
    p_power_exponent,
)

PRIMES = [2, 3, 5, 7, 11]


@pytest.mark.parametrize("p,a,expected", [(7, 3, 5), (2, 1, 1), (5, 4, 4)])
def test_fp_inverse(p, a, expected):
    assert fp_inverse(Fp(a, p)) == Fp(expected, p)


def test_fp_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        fp_inverse(Fp(0, 7))


@pytest.mark.parametrize("p", PRIMES)
def test_field_axioms_exhaustive(p):
    elements = [Fp(v, p) for v in range(p)]
    zero, one = Fp(0, p), Fp(1, p)
    for a in elements:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        assert a**p == a
        if a:
            assert a * fp_inverse(a) == one
            assert a / a == one
    for a, b, c in itertools.product(elements, repeat=3):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)


def test_fp_rejects_out_of_range_residue():
    with pytest.raises(ValueError):
        Fp(7, 7)


def test_fp_mixed_characteristic_raises():
    with pytest.raises(FieldMismatchError):
        Fp(1, 3) + Fp(1, 5)


@pytest.mark.parametrize("p,d", [(4, 2), (1, 1), (9, 3), (5, 0)])
def test_field_config_validation(p, d):
    with pytest.raises(ValueError):
        FieldConfig(p, d)


def test_variable_names():
    assert FieldConfig(3, 2).variable_names == ("x", "y")
    assert FieldConfig(3, 4).variable_names == ("x1", "x2", "x3", "x4")


@pytest.mark.parametrize(
    "t,ceil,floor",
    [(Fraction(5, 6), 1, 0), (Fraction(3), 3, 3), (Fraction(7, 2), 4, 3), (Fraction(-1, 2), 0, -1)],
)
def test_ceil_and_floor(t, ceil, floor):
    assert ceil_ratio(t) == ceil
    assert floor_ratio(t) == floor


@pytest.mark.parametrize(
    "t,p,expected",
    [
        (Fraction(1, 9), 3, 2),
        (Fraction(5, 3), 3, 1),
        (Fraction(2), 3, 0),
        (Fraction(1, 6), 3, None),
        (Fraction(5, 6), 7, None),
    ],
)
def test_p_power_exponent(t, p, expected):
    assert p_power_exponent(t, p) == expected


def test_ratio_arithmetic_is_exact():
    rng = random.Random(7)
    for _ in range(200):
        a, c = rng.randint(-10**12, 10**12), rng.randint(-10**12, 10**12)
        b, d = rng.randint(1, 10**12), rng.randint(1, 10**12)
        total = (Fraction(a, b) + Fraction(c, d)) * (b * d)
        assert total == a * d + c * b
        assert total.denominator == 1
