from __future__ import annotations

import random
from fractions import Fraction
from itertools import islice

import pytest

from mdsfec.errors import CharacteristicError, CodeRangeError, RateError
from mdsfec.plan.planner import (
    adjusted_length,
    approx_rate,
    min_length,
    odd_distance_family,
    parse_rate,
    plan_code,
    prime_series,
    primes_congruent_one,
    series_multiples,
)


@pytest.mark.parametrize(
    "rate, t, want",
    [(Fraction(7, 8), 25, 400), (Fraction(1, 2), 1, 4), (Fraction(7, 9), 1, 9)],
)
def test_min_length(rate, t, want):
    assert min_length(rate, t) == want


def test_min_length_is_least_over_a_grid():
    rng = random.Random(8)
    for _ in range(100):
        b = rng.randint(2, 40)
        rate = Fraction(rng.randint(1, b - 1), b)
        t = rng.randint(1, 60)
        n = min_length(rate, t)
        assert n * (1 - rate) >= 2 * t
        assert (n - 1) * (1 - rate) < 2 * t


def test_min_length_rejects_bad_rates():
    with pytest.raises(RateError):
        min_length(Fraction(1), 3)
    with pytest.raises(RateError):
        min_length(Fraction(0), 3)


def test_parse_rate():
    assert parse_rate("7/8") == Fraction(7, 8)
    assert parse_rate(" 0.875 ") == Fraction(7, 8)
    for bad in ("3/2", "0", "seven", "1/0"):
        with pytest.raises(RateError):
            parse_rate(bad)


def _table(entries):
    return [((e.n, e.r, e.d), str(e.field)) for e in entries]


def test_characteristic_two_series():
    assert _table(series_multiples(9, 7, 2, 4)) == [
        ((9, 7, 3), "GF(2^6)"),
        ((27, 21, 7), "GF(2^18)"),
        ((45, 35, 11), "GF(2^12)"),
        ((63, 49, 15), "GF(2^6)"),
    ]


def test_characteristic_three_series():
    assert _table(series_multiples(10, 7, 3, 6)) == [
        ((10, 7, 4), "GF(3^4)"),
        ((20, 14, 7), "GF(3^4)"),
        ((40, 28, 13), "GF(3^4)"),
        ((50, 35, 16), "GF(3^20)"),
        ((70, 49, 22), "GF(3^12)"),
        ((80, 56, 25), "GF(3^4)"),
    ]


def test_series_ratio_decreases_to_one_minus_rate():
    entries = series_multiples(10, 7, 3, 6)
    ratios = [e.ratio for e in entries]
    assert ratios == sorted(ratios, reverse=True)
    for e in entries:
        assert e.ratio - Fraction(3, 10) == Fraction(1, e.n)
        assert e.d == e.n - e.r + 1
        assert e.n % 3


def test_series_rejects_characteristic_dividing_length():
    with pytest.raises(CharacteristicError):
        series_multiples(8, 7, 2, 3)


def test_approx_rate():
    got = approx_rate(Fraction(3, 4), Fraction(1, 32), 2)
    assert got.denominator % 2
    assert Fraction(3, 4) <= got <= Fraction(3, 4) + Fraction(1, 32)
    assert got == Fraction(7, 9)
    assert approx_rate(Fraction(1, 3), Fraction(1, 100), 2) == Fraction(1, 3)
    half = approx_rate(Fraction(1, 2), Fraction(1, 10), 2)
    assert half.denominator % 2 and Fraction(1, 2) <= half <= Fraction(3, 5)
    with pytest.raises(RateError):
        approx_rate(Fraction(9, 10), Fraction(1, 5), 2)


def test_prime_series():
    entries = prime_series(Fraction(3, 4), primes_congruent_one(4), 5)
    assert _table(entries) == [
        ((4, 3, 2), "GF(5)"),
        ((12, 9, 4), "GF(13)"),
        ((16, 12, 5), "GF(17)"),
        ((28, 21, 8), "GF(29)"),
        ((36, 27, 10), "GF(37)"),
    ]
    assert _table(prime_series(Fraction(1, 2), [11], 1)) == [((10, 5, 6), "GF(11)")]


def test_prime_series_first_prime_too_small():
    with pytest.raises(CodeRangeError):
        prime_series(Fraction(1, 4), [3, 5], 2)


def test_primes_congruent_one():
    assert list(islice(primes_congruent_one(4), 5)) == [5, 13, 17, 29, 37]
    assert list(islice(primes_congruent_one(256), 2)) == [257, 769]


def test_odd_distance_family_of_gf8():
    fam = odd_distance_family(2, 3)
    assert [(e.n, e.r, e.d) for e in fam] == [(7, 5, 3), (7, 3, 5), (7, 1, 7)]
    assert [e.t for e in fam] == [1, 2, 3]


def test_odd_distance_family_of_gf11():
    fam = odd_distance_family(11)
    assert [(e.n, e.r, e.d) for e in fam] == [(10, 8, 3), (10, 6, 5), (10, 4, 7), (10, 2, 9)]


def test_plan_for_rate_seven_eighths():
    plan = plan_code(Fraction(7, 8), 25)
    assert (plan.n, plan.r, plan.d, plan.t) == (400, 350, 51, 25)
    assert plan.min_length == 400
    names = [c.name for c in plan.fields]
    assert "GF(401)" in names
    assert names.index("GF(401)") == 0


def test_plan_with_characteristic_two():
    plan = plan_code(Fraction(7, 8), 25, p=2)
    assert (plan.n, plan.r, plan.d) == (399, 349, 51)
    assert [c.name for c in plan.fields] == ["GF(2^18)"]
    assert float(plan.rate) == pytest.approx(0.8747, abs=1e-4)


def test_adjusted_length():
    assert adjusted_length(400, 2) == 399
    assert adjusted_length(399, 2) == 399
    assert adjusted_length(9, 3) == 8
