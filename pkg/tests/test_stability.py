"""Perturbation checks, smallest jumping numbers and stability scans."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from frobenius_tau.core.errors import FrobeniusTauError, NotInMaximalIdealError
from frobenius_tau.io.parsing import parse_divisor, parse_polynomial
from frobenius_tau.models import DivisorSpec, FieldConfig, IdealHandle, Polynomial
from frobenius_tau.services import StabilityService


def test_check_perturbation_examples(f3):
    service = StabilityService(f3)
    assert service.check_perturbation(parse_divisor("1/2*div(x)", f3), parse_divisor("1/3*div(y)", f3))
    assert not service.check_perturbation(DivisorSpec.zero(f3), parse_divisor("div(x)", f3))
    base = parse_divisor("1/2*div(x); 1/3*div(x*y + y^2)", f3)
    assert service.check_perturbation(base, DivisorSpec.zero(f3))


def test_compare_at_origin_flags_units(f3):
    service = StabilityService(f3)
    check = service.compare_at_origin(parse_divisor("1/2*div(x)", f3), parse_divisor("1/3*div(y)", f3))
    assert check.equal
    assert check.trivial_at_origin

    check = service.compare_at_origin(DivisorSpec.zero(f3), parse_divisor("div(x + 1)", f3))
    assert not check.equal
    assert check.trivial_at_origin


def test_check_perturbation_is_monotone(f3):
    service = StabilityService(f3)
    base = parse_divisor("1/2*div(x)", f3)
    larger = parse_divisor("1/3*div(y); 1/3*div(x)", f3)
    smaller = parse_divisor("1/9*div(y); 1/9*div(x)", f3)
    assert service.check_perturbation(base, larger)
    assert service.check_perturbation(base, smaller)


def test_smallest_jumping_number_of_coordinate():
    field = FieldConfig(5, 2)
    service = StabilityService(field)
    jump = service.smallest_jumping_number(DivisorSpec.zero(field), parse_polynomial("x", field))
    assert jump.found
    assert jump.value == 1


def test_smallest_jumping_number_is_shifted_by_integral_part():
    field = FieldConfig(5, 2)
    service = StabilityService(field)
    x = parse_polynomial("x", field)
    jump = service.smallest_jumping_number(parse_divisor("div(x)", field), x)
    assert jump.value == 1


def test_smallest_jumping_number_of_cusp(f7):
    service = StabilityService(f7)
    jump = service.smallest_jumping_number(DivisorSpec.zero(f7), parse_polynomial("x^2 + y^3", f7))
    assert jump.found
    assert jump.value == Fraction(5, 6)
    assert jump.evaluations < 12


def test_smallest_jumping_number_reports_missing_jump(f3):
    service = StabilityService(f3)
    jump = service.smallest_jumping_number(
        DivisorSpec.zero(f3), parse_polynomial("x", f3), max_den=4, upper=Fraction(1, 2)
    )
    assert not jump.found
    assert jump.value == Fraction(1, 2)


def test_smallest_jumping_number_rejects_unit(f3):
    with pytest.raises(NotInMaximalIdealError):
        StabilityService(f3).smallest_jumping_number(DivisorSpec.zero(f3), parse_polynomial("2", f3))


def test_scan_small_perturbations_of_zero():
    field = FieldConfig(2, 2)
    service = StabilityService(field)
    x = parse_polynomial("x", field)
    report = service.stability_scan(DivisorSpec.zero(field), [x], 4)
    assert all(w.equal for w in report.witnesses)
    assert [w.level for w in report.witnesses] == [1, 2, 3, 4]
    assert report.first_jump is None
    assert report.delta_lower == Fraction(1, 2)
    assert report.tail_index == {"x": 1}


def test_scan_with_full_divisor_records_jump():
    field = FieldConfig(2, 2)
    service = StabilityService(field)
    report = service.stability_scan(
        DivisorSpec.zero(field), [parse_polynomial("x", field)], 2, n_min=0
    )
    assert report.first_jump is not None
    assert report.first_jump.level == 0
    assert report.delta_lower == 1
    assert report.tail_index == {"x": 1}


def test_scan_measures_tail_index(f3):
    service = StabilityService(f3)
    probes = [parse_polynomial(t, f3) for t in ("y", "x", "x^2")]
    report = service.stability_scan(parse_divisor("1/2*div(x)", f3), probes, 3)
    assert report.tail_index == {"y": 1, "x": 1, "x^2": 2}
    assert report.first_jump is not None
    assert str(report.first_jump.probe) == "x^2"
    assert report.first_jump.level == 1
    assert report.delta_lower == Fraction(2, 3)
    for witness in report.witnesses:
        if witness.mult < report.delta_lower:
            assert witness.equal


def test_scan_requires_probes(f3):
    with pytest.raises(FrobeniusTauError):
        StabilityService(f3).stability_scan(DivisorSpec.zero(f3), [], 2)


def test_default_probes(f3):
    probes = StabilityService(f3).default_probes()
    assert [str(r) for r in probes] == ["x", "x + y", "x^2", "x^3 + x^2*y + x*y^2 + y^3"]
    assert [int(r.ord_at_origin()) for r in probes] == [1, 1, 2, 3]


@pytest.mark.parametrize(
    "text,expected",
    [("1/2*div(x^2 + y^3)", Fraction(1)), ("0", Fraction(0)), ("1/3*div(x*y); 1/2*div(x)", Fraction(7, 6))],
)
def test_mult_at_origin(f7, text, expected):
    assert StabilityService(f7).mult_at_origin(parse_divisor(text, f7)) == expected


def test_jumps_at_origin(f2):
    service = StabilityService(f2)
    m = IdealHandle(f2, [parse_polynomial("x", f2), parse_polynomial("y", f2)])
    assert service.jumps_at_origin(m)
    assert not service.jumps_at_origin(IdealHandle(f2, [parse_polynomial("x + 1", f2), parse_polynomial("y", f2)]))
    assert service.jumps_at_origin(IdealHandle.zero(f2))


def test_jumps_at_origin_matches_containment_in_maximal_ideal(f3):
    service = StabilityService(f3)
    rng = random.Random(89)
    for _ in range(10):
        generators = []
        for _ in range(rng.randint(1, 2)):
            exponent = (rng.randint(0, 2), rng.randint(0, 2))
            generators.append(Polynomial.monomial(f3, exponent))
        a = IdealHandle(f3, generators)
        assert service.jumps_at_origin(a) == a.vanishes_at_origin()


def test_trivial_at_origin_ignores_proper_ideals_agreeing_there(f3):
    service = StabilityService(f3)
    check = service.compare_at_origin(parse_divisor("div(x)", f3), parse_divisor("div(x + 1)", f3))
    assert not check.equal
    assert not check.trivial_at_origin


def test_scan_at_cusp_threshold_keeps_tau(f7):
    service = StabilityService(f7)
    probes = [parse_polynomial(t, f7) for t in ("y", "x", "x^2", "x^3 + y^3")]
    report = service.stability_scan(parse_divisor("5/6*div(x^2 + y^3)", f7), probes, 3)
    assert len(report.witnesses) == 12
    assert all(w.equal for w in report.witnesses)
    assert report.first_jump is None
    assert report.tail_index == {"y": 1, "x": 1, "x^2": 1, "x^3 + y^3": 1}
    assert report.delta_lower == Fraction(3, 7)


def test_jump_times_order_bounds_measured_radius(f3):
    service = StabilityService(f3)
    base = parse_divisor("1/2*div(x)", f3)
    probes = [parse_polynomial(t, f3) for t in ("y", "x*y", "y^3", "x^2*y^2", "y^5")]
    report = service.stability_scan(base, probes, 2)
    assert report.delta_lower == 1
    assert [int(g.ord_at_origin()) for g in probes] == [1, 2, 3, 4, 5]
    for g in probes:
        jump = service.smallest_jumping_number(base, g, 12)
        assert jump.found
        scaled = jump.value * int(g.ord_at_origin())
        assert scaled >= report.delta_lower > 0
        assert scaled == 1
