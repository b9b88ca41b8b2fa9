"""Encoding and Hankel-kernel decoding of Fourier-row MDS codes.

A code with rows e_{b+jk} is first normalised: scaling position m by
omega^(-b*m) turns it into the code of the first r rows of F_n(omega^k).
Decoding then runs on the normalised word:

  1. syndrome s_j = sum_m w'[m] omega'^(j*m), j = 1..n-r
  2. non-zero kernel vector x of the Hankel matrix rows (s_{i+1}..s_{i+t+1})
  3. locator a[m] = sum_l x_l omega'^(l*m); error positions are its zeros
  4. magnitudes from the first |positions| syndrome equations, the rest
     checked for consistency
  5. correction, final syndrome check, data = codeword . K

Each stage can be reported through an `on_event` callback.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from mdsfec.code import linalg
from mdsfec.code.linalg import Matrix, Vector
from mdsfec.code.mdscode import CodeSpec
from mdsfec.errors import CodeRangeError, LengthMismatchError
from mdsfec.field.gf import FieldSpec

log = logging.getLogger(__name__)


class DecodeStatus(str, Enum):
    SUCCESS = "success"
    TOO_MANY_ERRORS = "too-many-errors"


@dataclass(frozen=True)
class Syndrome:
    """s[j-1] for j = 1..n-r, computed on the normalised word."""

    s: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.s)

    def __len__(self) -> int:
        return len(self.s)


@dataclass
class DecodeOutcome:
    codeword: Vector
    error_vector: Vector
    positions: list[int]
    data: Vector
    status: DecodeStatus = DecodeStatus.SUCCESS
    stage: str = ""
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.status is DecodeStatus.SUCCESS


@dataclass
class DecodeEvent:
    """A single event emitted while decoding."""

    kind: str  # "syndrome", "hankel", "kernel", "locator", "positions", "magnitudes", "corrected", "data", "error", "done"
    values: list[int] = field(default_factory=list)
    matrix: Matrix = field(default_factory=list)
    text: str = ""
    is_error: bool = False


EventCallback = Callable[[DecodeEvent], None]


class DecodeFailure(Exception):
    """Internal signal carrying the stage that could not complete."""

    def __init__(self, stage: str, reason: str) -> None:
        super().__init__(reason)
        self.stage = stage
        self.reason = reason


def _check_len(v: Vector, n: int, what: str) -> None:
    if len(v) != n:
        raise LengthMismatchError(f"{what} needs {n} symbols, got {len(v)}")


def encode(c: CodeSpec, u: Vector) -> Vector:
    """Codeword u . G"""
    _check_len(u, c.r, "data word")
    for x in u:
        c.field.check(x)
    return linalg.vec_mat(c.field, u, c.generator)


def normalize(c: CodeSpec, w: Vector) -> Vector:
    """w'[m] = w[m] * omega^(-b*m)"""
    _check_len(w, c.n, "word")
    if c.start == 0:
        return list(w)
    return linalg.vec_mul(c.field, w, c.ctx.exponent_matrix([-c.start], list(range(c.n)))[0])


def denormalize(c: CodeSpec, w: Vector) -> Vector:
    """Inverse of normalize: w[m] = w'[m] * omega^(b*m)"""
    _check_len(w, c.n, "word")
    if c.start == 0:
        return list(w)
    return linalg.vec_mul(c.field, w, c.ctx.exponent_matrix([c.start], list(range(c.n)))[0])


def _syndrome_normalized(c: CodeSpec, wn: Vector) -> Syndrome:
    cols = c.reference_ctx.exponent_matrix(list(range(c.n)), list(range(1, c.n - c.r + 1)))
    return Syndrome(tuple(linalg.vec_mat(c.field, wn, cols)))


def syndrome(c: CodeSpec, w: Vector) -> Syndrome:
    return _syndrome_normalized(c, normalize(c, w))


def hankel_matrix(s: Syndrome, t: int) -> Matrix:
    """Rows (s_{i+1}, ..., s_{i+t+1}) for i = 0 .. len(s)-t-1."""
    if len(s) < 2 * t:
        raise CodeRangeError(f"{len(s)} syndromes cannot carry t={t}")
    return [list(s.s[i : i + t + 1]) for i in range(len(s) - t)]


def hankel_kernel(f: FieldSpec, s: Syndrome, t: int) -> Vector | None:
    """Non-zero kernel vector of length t+1 with first non-zero entry 1.

    None when the Hankel matrix has full column rank (more than t errors).
    """
    x = linalg.kernel_vector(f, hankel_matrix(s, t), t + 1)
    if x is None:
        return None
    lead = next(v for v in x if v)
    return linalg.vec_scale(f, x, f.inv(lead))


def locator(c: CodeSpec, x: Vector) -> Vector:
    """a[m] = sum_{l=1..len(x)} x_l omega'^(l*m)"""
    rows = c.reference_ctx.exponent_matrix(list(range(1, len(x) + 1)), list(range(c.n)))
    return linalg.vec_mat(c.field, x, rows)


def locate(c: CodeSpec, x: Vector) -> list[int]:
    """0-based positions m where the locator vanishes."""
    return [m for m, v in enumerate(locator(c, x)) if v == 0]


def magnitudes(c: CodeSpec, s: Syndrome, positions: list[int]) -> Vector | None:
    """Normalised error values at `positions`, or None if inconsistent.

    Solves M y = s with M[j-1][i] = omega'^(j*pos_i) on the first
    len(positions) rows and verifies every remaining row.
    """
    if not positions:
        return [] if s.is_zero else None
    if len(positions) > len(s):
        return None
    f = c.field
    rows = c.reference_ctx.exponent_matrix(list(range(1, len(s) + 1)), positions)
    k = len(positions)
    y = linalg.solve(f, rows[:k], list(s.s[:k]))
    if y is None:
        return None
    for row, sj in zip(rows[k:], s.s[k:]):
        if linalg.dot(f, row, y) != sj:
            return None
    return y


def decode(c: CodeSpec, w: Vector, on_event: EventCallback | None = None) -> DecodeOutcome:
    """Correct up to t symbol errors in w.

    Never reports success unless the corrected word is a codeword within
    distance t of w.
    """
    _check_len(w, c.n, "received word")
    for x in w:
        c.field.check(x)
    emit = on_event or (lambda _e: None)
    try:
        outcome = _decode(c, list(w), emit)
    except DecodeFailure as e:
        log.debug("decode failed at %s: %s", e.stage, e.reason)
        emit(DecodeEvent(kind="error", text=f"{e.stage}: {e.reason}", is_error=True))
        outcome = DecodeOutcome(
            codeword=list(w),
            error_vector=[0] * c.n,
            positions=[],
            data=linalg.vec_mat(c.field, w, c.right_inv),
            status=DecodeStatus.TOO_MANY_ERRORS,
            stage=e.stage,
            reason=e.reason,
        )
    emit(DecodeEvent(kind="done"))
    return outcome


def _decode(c: CodeSpec, w: Vector, emit: EventCallback) -> DecodeOutcome:
    f = c.field
    wn = normalize(c, w)
    s = _syndrome_normalized(c, wn)
    emit(DecodeEvent(kind="syndrome", values=list(s.s)))

    if s.is_zero:
        data = linalg.vec_mat(f, w, c.right_inv)
        emit(DecodeEvent(kind="data", values=data))
        return DecodeOutcome(list(w), [0] * c.n, [], data)

    t = c.t
    if t == 0:
        raise DecodeFailure("capacity", "non-zero syndrome and the code corrects no errors")

    emit(DecodeEvent(kind="hankel", matrix=hankel_matrix(s, t)))
    x = hankel_kernel(f, s, t)
    if x is None:
        raise DecodeFailure("kernel", "Hankel matrix has trivial kernel")
    emit(DecodeEvent(kind="kernel", values=x))

    a = locator(c, x)
    emit(DecodeEvent(kind="locator", values=a))
    positions = [m for m, v in enumerate(a) if v == 0]
    emit(DecodeEvent(kind="positions", values=positions))
    if not positions:
        raise DecodeFailure("locate", "locator has no zeros")

    y = magnitudes(c, s, positions)
    if y is None:
        raise DecodeFailure("magnitudes", "syndrome equations are inconsistent")
    found = [(m, v) for m, v in zip(positions, y) if v]
    if len(found) > t:
        raise DecodeFailure("weight", f"{len(found)} corrections exceed t={t}")
    emit(DecodeEvent(kind="magnitudes", values=[v for _, v in found]))

    err_n = [0] * c.n
    for m, v in found:
        err_n[m] = v
    error_vector = denormalize(c, err_n)
    codeword = linalg.vec_sub(f, w, error_vector)
    if not syndrome(c, codeword).is_zero:
        raise DecodeFailure("verify", "corrected word has non-zero syndrome")
    emit(DecodeEvent(kind="corrected", values=codeword))

    data = linalg.vec_mat(f, codeword, c.right_inv)
    emit(DecodeEvent(kind="data", values=data))
    return DecodeOutcome(codeword, error_vector, [m for m, _ in found], data)
