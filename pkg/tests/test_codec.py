from __future__ import annotations

import itertools
import random

import pytest

from mdsfec.cli.demo import EXPECTED, F12, RECEIVED
from mdsfec.code import codec, linalg
from mdsfec.code.codec import DecodeEvent, DecodeStatus, Syndrome
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.code.verify import distance, oracle_decode
from mdsfec.errors import FieldRangeError, LengthMismatchError

CODEWORD = [8, 9, 2, 9, 3, 2, 10, 8, 4, 10, 5, 7]


def _corrupt(c: CodeSpec, cw: list[int], errors: dict[int, int]) -> list[int]:
    w = list(cw)
    for m, v in errors.items():
        w[m] = c.field.add(w[m], v)
    return w


def _random_errors(rng: random.Random, c: CodeSpec, weight: int) -> dict[int, int]:
    return {m: rng.randrange(1, c.field.order) for m in rng.sample(range(c.n), weight)}


def test_encode_demo_data(code_k):
    assert codec.encode(code_k, [1, 2, 3, 4, 5, 6]) == CODEWORD
    assert codec.encode(code_k, [0] * 6) == [0] * 12
    assert codec.encode(code_k, [1, 0, 0, 0, 0, 0]) == [1] * 12


def test_encode_validates_input(code_k):
    with pytest.raises(LengthMismatchError):
        codec.encode(code_k, [1, 2, 3])
    with pytest.raises(FieldRangeError):
        codec.encode(code_k, [1, 2, 3, 4, 5, 13])


def test_syndrome_of_demo_word(code_k):
    assert codec.syndrome(code_k, RECEIVED).s == (2, 9, 12, 10, 11, 11)
    assert codec.syndrome(code_k, CODEWORD).is_zero
    w = _corrupt(code_k, CODEWORD, {3: 10, 5: 1, 9: 4})
    assert w == RECEIVED


def test_hankel_matrix_and_kernel(gf13):
    s = Syndrome((2, 9, 12, 10, 11, 11))
    assert codec.hankel_matrix(s, 3) == EXPECTED["hankel"]
    assert codec.hankel_kernel(gf13, s, 3) == [1, 2, 1, 2]


def test_locator_and_positions(code_k):
    x = [7, 1, 7, 1]
    assert codec.locator(code_k, x) == EXPECTED["a"]
    assert codec.locate(code_k, x) == [3, 5, 9]
    assert codec.locate(code_k, [1, 2, 1, 2]) == [3, 5, 9]


def test_locator_zeros_do_not_depend_on_kernel_scaling(code_k, code_l):
    rng = random.Random(11)
    for _ in range(100):
        c = rng.choice([code_k, code_l])
        w = _corrupt(c, codec.encode(c, [rng.randrange(13) for _ in range(6)]),
                     _random_errors(rng, c, rng.randint(1, 3)))
        x = codec.hankel_kernel(c.field, codec.syndrome(c, w), 3)
        assert x is not None
        scaled = linalg.vec_scale(c.field, x, rng.randrange(1, 13))
        assert codec.locate(c, scaled) == codec.locate(c, x)


def test_magnitudes(code_k):
    s = codec.syndrome(code_k, RECEIVED)
    assert codec.magnitudes(code_k, s, [3, 5, 9]) == [10, 1, 4]
    assert codec.magnitudes(code_k, Syndrome((0,) * 6), []) == []
    assert codec.magnitudes(code_k, s, []) is None


def test_spurious_locator_root_gets_zero_magnitude(code_k):
    s = codec.syndrome(code_k, _corrupt(code_k, CODEWORD, {2: 5, 7: 3}))
    assert codec.magnitudes(code_k, s, [2, 4, 7]) == [5, 0, 3]


def test_decode_demo_word(code_k):
    outcome = codec.decode(code_k, RECEIVED)
    assert outcome.ok
    assert outcome.codeword == CODEWORD
    assert outcome.error_vector == EXPECTED["error"]
    assert outcome.positions == [3, 5, 9]
    assert outcome.data == [1, 2, 3, 4, 5, 6]


def test_decode_codeword_is_clean(code_l):
    cw = codec.encode(code_l, [3, 1, 4, 1, 5, 9])
    outcome = codec.decode(code_l, cw)
    assert outcome.ok
    assert outcome.error_vector == [0] * 12
    assert outcome.positions == []
    assert outcome.data == [3, 1, 4, 1, 5, 9]


def test_decode_reports_each_stage(code_k):
    events: list[DecodeEvent] = []
    codec.decode(code_k, RECEIVED, on_event=events.append)
    kinds = [e.kind for e in events]
    assert kinds == [
        "syndrome", "hankel", "kernel", "locator", "positions",
        "magnitudes", "corrected", "data", "done",
    ]
    assert events[0].values == EXPECTED["s"]


def test_normalize_turns_stepped_code_into_consecutive(code_l):
    assert codec.normalize(code_l, F12[1]) == [1] * 12
    rng = random.Random(5)
    w = [rng.randrange(13) for _ in range(12)]
    assert codec.denormalize(code_l, codec.normalize(code_l, w)) == w
    assert codec.normalize(CodeSpec(code_l.ctx, 6), w) == w


def test_decode_failure_keeps_received_word(code_k):
    w = _corrupt(code_k, CODEWORD, {0: 1, 1: 1, 2: 1, 3: 1, 4: 1})
    events: list[DecodeEvent] = []
    outcome = codec.decode(code_k, w, on_event=events.append)
    if outcome.ok:
        assert distance(outcome.codeword, w) <= 3
    else:
        assert outcome.status is DecodeStatus.TOO_MANY_ERRORS
        assert outcome.stage
        assert outcome.codeword == w
        assert outcome.error_vector == [0] * 12
        assert any(e.is_error for e in events)


def test_zero_capacity_code_fails_on_any_error(f12):
    c = CodeSpec(f12, 11)
    w = _corrupt(c, codec.encode(c, [1] * 11), {4: 2})
    outcome = codec.decode(c, w)
    assert not outcome.ok
    assert outcome.stage == "capacity"


def test_decode_validates_input(code_k):
    with pytest.raises(LengthMismatchError):
        codec.decode(code_k, [1, 2])
    with pytest.raises(FieldRangeError):
        codec.decode(code_k, [13] * 12)


CODES = [
    ("gf13-k", 12, 13, 6, 0, 1),
    ("gf13-l", 12, 13, 6, 1, 5),
    ("gf8", 7, 2, 3, 0, 1),
    ("gf8-step", 7, 2, 1, 2, 3),
    ("gf16", 15, 2, 7, 4, 2),
    ("gf11", 10, 11, 4, 0, 1),
    ("gf9", 8, 3, 2, 3, 3),
]


@pytest.fixture(params=CODES, ids=[c[0] for c in CODES])
def any_code(request) -> CodeSpec:
    _, n, p, r, b, k = request.param
    return CodeSpec(FourierCtx.for_length(n, p), r, b, k)


def test_random_errors_up_to_capacity_are_corrected(any_code):
    c = any_code
    rng = random.Random(c.n * 31 + c.start)
    for _ in range(1500):
        u = [rng.randrange(c.field.order) for _ in range(c.r)]
        cw = codec.encode(c, u)
        errors = _random_errors(rng, c, rng.randint(0, c.t))
        outcome = codec.decode(c, _corrupt(c, cw, errors))
        assert outcome.ok
        assert outcome.codeword == cw
        assert outcome.data == u
        assert sorted(outcome.positions) == sorted(errors)


def test_decode_never_claims_a_distant_codeword(any_code):
    c = any_code
    rng = random.Random(99)
    for _ in range(1500):
        cw = codec.encode(c, [rng.randrange(c.field.order) for _ in range(c.r)])
        weight = min(c.n, c.t + rng.randint(1, 3))
        w = _corrupt(c, cw, _random_errors(rng, c, weight))
        outcome = codec.decode(c, w)
        if outcome.ok:
            assert codec.syndrome(c, outcome.codeword).is_zero
            assert distance(outcome.codeword, w) <= c.t
        else:
            assert outcome.codeword == w


def _all_patterns(c: CodeSpec, max_weight: int):
    q = c.field.order
    for weight in range(1, max_weight + 1):
        for pos in itertools.combinations(range(c.n), weight):
            for vals in itertools.product(range(1, q), repeat=weight):
                yield dict(zip(pos, vals))


def test_every_pattern_of_weight_two_is_corrected(code_k):
    cw = CODEWORD
    for errors in _all_patterns(code_k, 2):
        outcome = codec.decode(code_k, _corrupt(code_k, cw, errors))
        assert outcome.codeword == cw, errors


@pytest.mark.slow
def test_every_pattern_of_weight_three_is_corrected():
    c = CodeSpec(FourierCtx.for_length(10, 11), 4)
    rng = random.Random(1)
    for _ in range(3):
        cw = codec.encode(c, [rng.randrange(11) for _ in range(4)])
        patterns = list(_all_patterns(c, 3))
        for errors in patterns:
            outcome = codec.decode(c, _corrupt(c, cw, errors))
            assert outcome.codeword == cw, errors
        for errors in rng.sample(patterns, 40):
            w = _corrupt(c, cw, errors)
            assert codec.decode(c, w).codeword == oracle_decode(c, w) == cw, errors


@pytest.mark.parametrize(
    "n, p, r, trials",
    [
        (256, 257, 224, 30),
        (508, 509, 486, 5),
        pytest.param(256, 257, 224, 1000, marks=pytest.mark.slow),
        pytest.param(508, 509, 486, 100, marks=pytest.mark.slow),
    ],
)
def test_large_field_round_trip(n, p, r, trials):
    c = CodeSpec(FourierCtx.for_length(n, p), r)
    rng = random.Random(n)
    for _ in range(trials):
        u = [rng.randrange(p) for _ in range(r)]
        w = _corrupt(c, codec.encode(c, u), _random_errors(rng, c, rng.randint(0, c.t)))
        assert codec.decode(c, w).data == u
