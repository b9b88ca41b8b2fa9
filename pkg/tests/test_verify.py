from __future__ import annotations

import random
from math import gcd

import pytest

from mdsfec.cli.demo import RECEIVED
from mdsfec.code import codec, linalg
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.code.verify import (
    distance,
    is_mds,
    is_mds_generator,
    min_distance,
    _min_distance_dual,
    _min_distance_enum,
    oracle_decode,
    weight,
)
from mdsfec.errors import LengthMismatchError, OracleLimitError


def _code(n: int, p: int, r: int, b: int = 0, k: int = 1) -> CodeSpec:
    return CodeSpec(FourierCtx.for_length(n, p), r, b, k)


@pytest.mark.parametrize(
    "n, p, r, d",
    [
        (7, 2, 5, 3),
        (7, 2, 3, 5),
        (7, 2, 1, 7),
        (10, 11, 8, 3),
        (10, 11, 6, 5),
        (10, 11, 4, 7),
        (10, 11, 2, 9),
        (16, 17, 12, 5),
        (12, 13, 6, 7),
    ],
)
def test_min_distance_of_fourier_codes(n, p, r, d):
    c = _code(n, p, r)
    assert min_distance(c.field, c.generator) == d


def test_both_demo_codes_are_mds(code_k, code_l):
    assert min_distance(code_k.field, code_k.generator) == 7
    assert min_distance(code_l.field, code_l.generator) == 7
    assert is_mds(code_l)


def test_enumeration_and_dual_search_agree():
    c = _code(10, 11, 3, 2, 3)
    assert _min_distance_enum(c.field, c.generator) == _min_distance_dual(c.field, c.generator) == 8


STEPS = [k for k in range(1, 12) if gcd(12, k) == 1]


@pytest.mark.parametrize("k", STEPS)
def test_short_gf13_codes_are_mds(f12, k):
    for r in range(1, 4):
        for b in (0, 1, 7):
            assert is_mds(CodeSpec(f12, r, b, k))


@pytest.mark.slow
@pytest.mark.parametrize("k", STEPS)
def test_all_gf13_codes_up_to_half_rate_are_mds(f12, k):
    for r in range(4, 7):
        for b in range(12):
            assert is_mds(CodeSpec(f12, r, b, k))


def test_repeated_row_is_not_mds(code_k):
    g = [code_k.generator[1], code_k.generator[1], code_k.generator[2]]
    assert min_distance(code_k.field, g) == 0
    assert not is_mds_generator(code_k.field, g)


def test_distance_is_invariant_under_row_scaling(code_l):
    f = code_l.field
    g = [linalg.vec_scale(f, row, s) for row, s in zip(code_l.generator[:3], (2, 5, 11))]
    assert min_distance(f, g) == min_distance(f, code_l.generator[:3]) == 10


def test_guard_rejects_large_instances(code_k):
    with pytest.raises(OracleLimitError):
        min_distance(code_k.field, code_k.generator, limit=100)


def test_oracle_decode_finds_the_nearby_codeword():
    c = _code(12, 13, 4)
    cw = codec.encode(c, [1, 2, 3, 4])
    w = list(cw)
    w[4] = (w[4] + 3) % 13
    w[10] = (w[10] + 1) % 13
    assert oracle_decode(c, w) == cw
    assert oracle_decode(c, cw) == cw


def test_oracle_guard_and_length(code_k):
    with pytest.raises(OracleLimitError):
        oracle_decode(code_k, RECEIVED)
    with pytest.raises(LengthMismatchError):
        oracle_decode(_code(6, 7, 2), [1, 2, 3])


def test_oracle_agrees_with_decoder_on_random_words():
    c = _code(6, 7, 2)
    rng = random.Random(17)
    hits = 0
    for _ in range(300):
        w = [rng.randrange(7) for _ in range(6)]
        expected = oracle_decode(c, w)
        outcome = codec.decode(c, w)
        if expected is None:
            assert not outcome.ok
        else:
            hits += 1
            assert outcome.ok
            assert outcome.codeword == expected
    assert hits > 0


def test_oracle_agrees_with_decoder_on_low_weight_errors():
    c = _code(10, 11, 4)
    rng = random.Random(23)
    for _ in range(60):
        cw = codec.encode(c, [rng.randrange(11) for _ in range(4)])
        w = list(cw)
        for m in rng.sample(range(10), rng.randint(1, 3)):
            w[m] = (w[m] + rng.randrange(1, 11)) % 11
        assert codec.decode(c, w).codeword == oracle_decode(c, w) == cw


def test_weight_and_distance():
    assert weight([0, 3, 0, 1]) == 2
    assert distance([1, 2, 3], [1, 0, 3]) == 1
