"""Sparse polynomials, exponent order and Frobenius helpers."""

from __future__ import annotations

import itertools
import math
import random

import pytest

from frobenius_tau.core.errors import DimensionMismatchError, FieldMismatchError
from frobenius_tau.models import ExponentBox, FieldConfig, Polynomial, deg_lex_compare
from frobenius_tau.io.parsing import parse_polynomial

from .conftest import random_polynomial


@pytest.mark.parametrize(
    "left,right,expected",
    [((1, 1), (0, 3), -1), ((2, 0), (2, 0), 0), ((1, 1), (0, 2), 1)],
)
def test_deg_lex_compare(left, right, expected):
    assert deg_lex_compare(left, right) == expected


def test_deg_lex_compare_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        deg_lex_compare((1, 0), (1, 0, 0))


def test_deg_lex_is_a_total_order():
    rng = random.Random(3)
    vectors = [tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(60)]
    for a, b, c in itertools.islice(itertools.product(vectors, repeat=3), 3000):
        assert deg_lex_compare(a, b) == -deg_lex_compare(b, a)
        if deg_lex_compare(a, b) <= 0 and deg_lex_compare(b, c) <= 0:
            assert deg_lex_compare(a, c) <= 0
        assert (deg_lex_compare(a, b) == 0) == (a == b)


def test_exponent_box():
    box = ExponentBox(3, 2, 1)
    assert box.q == 3
    assert box.mu == (2, 2)
    assert len(box) == 9
    assert len(list(box)) == 9
    assert (2, 0) in box
    assert (3, 0) not in box
    assert box.split((7, 2)) == ((2, 0), (1, 2))


def test_leading_term_and_canonical_order(f7):
    f = parse_polynomial("x^2 + 3*x*y^2 - 1", f7)
    assert f.leading_exponent == (1, 2)
    assert f.leading_coefficient == 3
    assert f.constant_term == 6
    assert f.exponents() == ((1, 2), (2, 0), (0, 0))
    assert str(f) == "3*x*y^2 + x^2 + 6"


@pytest.mark.parametrize("text,expected", [("x^2 + y^3", 2), ("0", math.inf), ("1 + x", 0)])
def test_ord_at_origin(f7, text, expected):
    assert parse_polynomial(text, f7).ord_at_origin() == expected


def test_ord_is_additive(f7):
    rng = random.Random(11)
    for _ in range(50):
        f = random_polynomial(rng, f7, 5, 4)
        g = random_polynomial(rng, f7, 5, 4)
        assert (f * g).ord_at_origin() == f.ord_at_origin() + g.ord_at_origin()


def test_frob_power_examples():
    f2 = FieldConfig(2, 2)
    f3 = FieldConfig(3, 2)
    assert parse_polynomial("x + y", f2).frob_power(1) == parse_polynomial("x^2 + y^2", f2)
    assert parse_polynomial("2*x", f3).frob_power(1) == parse_polynomial("2*x^3", f3)
    f = parse_polynomial("x*y + 2", f3)
    assert f.frob_power(0) is f


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frob_power_matches_repeated_multiplication(p):
    field = FieldConfig(p, 2)
    rng = random.Random(p)
    for _ in range(20):
        f = random_polynomial(rng, field, 4, 4)
        naive = Polynomial.one(field)
        for _ in range(p * p):
            naive = naive * f
        assert f.frob_power(2) == naive
        assert f.frob_power(1) == f.mul_pow(p)


def test_mul_pow_examples(f7):
    x = parse_polynomial("x", f7)
    assert x.mul_pow(5) == parse_polynomial("x^5", f7)
    assert Polynomial.zero(f7).mul_pow(3).is_zero()
    assert x.mul_pow(0) == Polynomial.one(f7)
    cusp = parse_polynomial("x^2 + y^3", f7)
    assert cusp.mul_pow(5).coefficient((6, 6)) == 3


def test_mul_pow_matches_naive_product(f3):
    rng = random.Random(5)
    for _ in range(20):
        f = random_polynomial(rng, f3, 3, 3)
        n = rng.randint(0, 20)
        naive = Polynomial.one(f3)
        for _ in range(n):
            naive = naive * f
        assert f.mul_pow(n) == naive


def test_arithmetic_drops_zero_coefficients(f7):
    f = parse_polynomial("x + y", f7)
    assert (f - f).is_zero()
    assert len(parse_polynomial("7*x + y", f7)) == 1
    assert parse_polynomial("7*x", f7).is_zero()


def test_mixing_rings_raises(f7, f3):
    with pytest.raises(FieldMismatchError):
        Polynomial.variable(f7, 0) + Polynomial.variable(f3, 0)


def test_monic_and_scale(f7):
    f = parse_polynomial("3*x + y", f7)
    assert f.monic().leading_coefficient == 1
    assert f.scale(7).is_zero()
    assert f.monic().scale(3) == f


@pytest.mark.parametrize("p,d", [(2, 1), (3, 2), (5, 3), (7, 4)])
def test_print_parse_round_trip(p, d):
    field = FieldConfig(p, d)
    rng = random.Random(p * 10 + d)
    for _ in range(30):
        f = random_polynomial(rng, field, 6, 6, nonzero=False)
        assert parse_polynomial(str(f), field) == f
