"""ν-functions, F-pure threshold brackets and jump scans."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from frobenius_tau.core.errors import NotInMaximalIdealError
from frobenius_tau.io.parsing import parse_divisor, parse_polynomial
from frobenius_tau.models import DivisorSpec, FieldConfig, Polynomial
from frobenius_tau.services import ThresholdService


def naive_nu(f: Polynomial, e: int) -> int:
    q = f.field.p**e
    power = Polynomial.one(f.field)
    r = 0
    while True:
        power = power * f
        if not any(all(a < q for a in exponent) for exponent in power.terms):
            return r
        r += 1


@pytest.mark.parametrize(
    "p,text,e,expected",
    [(7, "x^2 + y^3", 1, 5), (2, "x", 1, 1), (3, "x", 2, 8)],
)
def test_nu_examples(p, text, e, expected):
    field = FieldConfig(p, 2)
    assert ThresholdService(field).nu(parse_polynomial(text, field), e) == expected


def test_cusp_nu_sequence(f7):
    sequence = ThresholdService(f7).nu_sequence(parse_polynomial("x^2 + y^3", f7), 3)
    assert sequence == [5, 40, 285]
    assert sequence == [5 * (7**e - 1) // 6 for e in (1, 2, 3)]


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("text", ["x*y", "x^2 + y^2", "x^3 + x*y + y^4", "x + y^2"])
def test_nu_matches_naive_expansion(p, text):
    field = FieldConfig(p, 2)
    f = parse_polynomial(text, field)
    service = ThresholdService(field)
    for e in (1, 2):
        assert service.nu(f, e) == naive_nu(f, e)


def test_nu_frobenius_recurrence(f3):
    service = ThresholdService(f3)
    f = parse_polynomial("x^2 + x*y^3 + y^5", f3)
    sequence = service.nu_sequence(f, 4)
    for previous, current in itertools.pairwise(sequence):
        assert 3 * previous <= current <= 3 * previous + 2


def test_nu_of_unit_raises(f7):
    with pytest.raises(NotInMaximalIdealError):
        ThresholdService(f7).nu(parse_polynomial("1 + x", f7), 1)


def test_fpt_bracket_cusp(f7):
    bracket = ThresholdService(f7).fpt_bracket(parse_polynomial("x^2 + y^3", f7), 1)
    assert (bracket.lo, bracket.hi) == (Fraction(5, 7), Fraction(6, 7))
    assert bracket.nu == 5
    assert bracket.confirmed == Fraction(5, 6)


def test_fpt_bracket_refines_around_five_sixths(f7):
    bracket = ThresholdService(f7).fpt_bracket(parse_polynomial("x^2 + y^3", f7), 2, max_den=1)
    assert (bracket.lo, bracket.hi) == (Fraction(40, 49), Fraction(41, 49))
    assert bracket.lo < Fraction(5, 6) <= bracket.hi
    assert bracket.confirmed is None


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (5, 1)])
def test_fpt_bracket_of_coordinate(p, e):
    field = FieldConfig(p, 2)
    bracket = ThresholdService(field).fpt_bracket(parse_polynomial("x", field), e, max_den=1)
    q = p**e
    assert (bracket.lo, bracket.hi) == (1 - Fraction(1, q), Fraction(1))
    assert bracket.confirmed == 1


def test_jump_scan_coordinate():
    field = FieldConfig(5, 2)
    service = ThresholdService(field)
    x = parse_polynomial("x", field)
    report = service.jump_scan(DivisorSpec.zero(field), x, 0, 1, max_den=10)
    assert report.jumps == (Fraction(1),)
    assert report.capped_points == ()
    assert report.grid[-1] == 1
    assert service.jump_scan(DivisorSpec.zero(field), x, 0, Fraction(1, 2), max_den=10).jumps == ()


def test_jump_scan_cusp(f7):
    service = ThresholdService(f7)
    f = parse_polynomial("x^2 + y^3", f7)
    report = service.jump_scan(DivisorSpec.zero(f7), f, Fraction(3, 4), 1, max_den=12)
    assert report.jumps == (Fraction(5, 6), Fraction(1))
    assert report.capped_points == ()


def test_jump_scan_with_base_divisor(f3):
    service = ThresholdService(f3)
    report = service.jump_scan(
        parse_divisor("1/2*div(x)", f3), parse_polynomial("x", f3), 0, 1, max_den=6
    )
    assert report.jumps == (Fraction(1, 2),)


def test_jump_scan_rejects_unit(f3):
    with pytest.raises(NotInMaximalIdealError):
        ThresholdService(f3).jump_scan(DivisorSpec.zero(f3), parse_polynomial("x + 1", f3), 0, 1)
