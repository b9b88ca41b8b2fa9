"""MDS codes from rows of Fourier (and Vandermonde) matrices.

A code takes r rows e_b, e_{b+k}, ..., e_{b+(r-1)k} of F_n (indices mod n,
gcd(n, k) = 1) as generator G. The columns f_j of F_n^* for the remaining
indices j form H^T, and G H^T = 0 because e_i . f_j = 0 for i != j. The
selected columns f_i scaled by n^-1 give a right inverse K with G K = I_r.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

import numpy as np

from mdsfec.code import linalg
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.linalg import Matrix
from mdsfec.errors import (
    CodeRangeError,
    DescriptorError,
    EvaluationPointsError,
    InvalidStepError,
    MdsFecError,
)
from mdsfec.field.gf import FieldSpec
from mdsfec.field.search import make_field

DESCRIPTOR_KEYS = ("p", "beta", "modulus", "omega", "n", "r", "start", "step")


@dataclass(frozen=True)
class CodeSpec:
    ctx: FourierCtx
    r: int
    start: int = 0
    step: int = 1

    def __post_init__(self) -> None:
        n = self.ctx.n
        if not 1 <= self.r <= n:
            raise CodeRangeError(f"dimension r={self.r} outside 1..{n}")
        if gcd(n, self.step) != 1:
            raise InvalidStepError(f"gcd({n}, {self.step}) = {gcd(n, self.step)} != 1")
        object.__setattr__(self, "start", self.start % n)
        object.__setattr__(self, "step", self.step % n if n > 1 else 1)

    def __str__(self) -> str:
        return f"({self.n},{self.r},{self.d}) over {self.field}"

    @property
    def field(self) -> FieldSpec:
        return self.ctx.field

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def t(self) -> int:
        return (self.n - self.r) // 2

    @property
    def d(self) -> int:
        return self.n - self.r + 1

    @property
    def is_consecutive(self) -> bool:
        return self.start == 0 and self.step == 1

    @cached_property
    def indices(self) -> list[int]:
        """Selected row indices b + j*k mod n, in selection order."""
        return [(self.start + j * self.step) % self.n for j in range(self.r)]

    @cached_property
    def check_indices(self) -> list[int]:
        """Indices j of the columns f_j forming H^T.

        The consecutive code lists them as f_{n-1}, ..., f_r, which are the
        columns e_1^T, ..., e_{n-r}^T; other codes use ascending order.
        """
        chosen = set(self.indices)
        rest = [j for j in range(self.n) if j not in chosen]
        return rest[::-1] if self.is_consecutive else rest

    @cached_property
    def reference_ctx(self) -> FourierCtx:
        """Context on omega^k, in which the code becomes the consecutive one."""
        return self.ctx.with_root_power(self.step)

    @cached_property
    def generator(self) -> Matrix:
        return [self.ctx.row(i) for i in self.indices]

    @cached_property
    def check_t(self) -> Matrix:
        cols = [self.ctx.inv_col(j) for j in self.check_indices]
        if not cols:
            return [[] for _ in range(self.n)]
        return linalg.transpose(cols)

    @cached_property
    def right_inv(self) -> Matrix:
        cols = [self.ctx.inv_col(i) for i in self.indices]
        n_inv = self.ctx.n_inv
        return [linalg.vec_scale(self.field, row, n_inv) for row in linalg.transpose(cols)]

    # ── descriptor text ────────────────────────────────────────

    def to_descriptor(self) -> str:
        f = self.field
        lines = [f"p={f.p}", f"beta={f.beta}"]
        if f.beta > 1:
            lines.append("modulus=" + ",".join(str(c) for c in f.modulus))
        lines += [
            f"omega={self.ctx.omega}",
            f"n={self.n}",
            f"r={self.r}",
            f"start={self.start}",
            f"step={self.step}",
        ]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_descriptor(cls, text: str) -> CodeSpec:
        values: dict[str, str] = {}
        order: list[str] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep:
                raise DescriptorError(f"line {lineno}: expected key=value, got {line!r}")
            if key not in DESCRIPTOR_KEYS:
                raise DescriptorError(f"line {lineno}: unknown key {key!r}")
            if key in values:
                raise DescriptorError(f"line {lineno}: duplicate key {key!r}")
            values[key] = value.strip()
            order.append(key)
        if order != [k for k in DESCRIPTOR_KEYS if k in values]:
            raise DescriptorError(f"keys out of order: {', '.join(order)}")
        try:
            p = int(values["p"])
            beta = int(values["beta"])
            modulus: tuple[int, ...] = ()
            if beta > 1:
                modulus = tuple(int(c) for c in values["modulus"].split(","))
            elif "modulus" in values:
                raise DescriptorError("modulus given for a prime field")
            field = make_field(p, beta, modulus)
            ctx = FourierCtx(field, int(values["n"]), int(values["omega"]))
            return cls(ctx, int(values["r"]), int(values["start"]), int(values["step"]))
        except KeyError as e:
            raise DescriptorError(f"missing key {e.args[0]!r}") from None
        except DescriptorError:
            raise
        except (MdsFecError, ValueError) as e:
            raise DescriptorError(str(e)) from e


def build_code(ctx: FourierCtx, r: int, b: int = 0, k: int = 1) -> CodeSpec:
    return CodeSpec(ctx, r, b, k)


def generator_matrix(c: CodeSpec) -> Matrix:
    return [list(row) for row in c.generator]


def check_matrix_t(c: CodeSpec) -> Matrix:
    return [list(row) for row in c.check_t]


def right_inverse(c: CodeSpec) -> Matrix:
    return [list(row) for row in c.right_inv]


@dataclass(frozen=True)
class VandermondeCode:
    """Generator from rows 0, k, ..., (r-1)k of V(x_1..x_n), plus the
    report of whether no ratio x_i/x_j is a k-th root of unity."""

    field: FieldSpec
    xs: tuple[int, ...]
    r: int
    k: int
    generator: Matrix
    condition_holds: bool

    @property
    def n(self) -> int:
        return len(self.xs)


def vandermonde_code(f: FieldSpec, xs: list[int], r: int, k: int = 1) -> VandermondeCode:
    n = len(xs)
    if len(set(xs)) != n or any(x == 0 for x in xs):
        raise EvaluationPointsError("evaluation points must be distinct and non-zero")
    for x in xs:
        f.check(x)
    if not 1 <= r <= n:
        raise CodeRangeError(f"dimension r={r} outside 1..{n}")
    if k < 1 or (r - 1) * k >= n:
        raise CodeRangeError(f"rows 0..{(r - 1) * k} step {k} do not fit a {n}x{n} matrix")
    x = f.array(xs)
    generator = [linalg.to_list(x ** (i * k)) for i in range(r)]
    ratios = (x[:, np.newaxis] / x[np.newaxis, :]) ** k
    off_diagonal = ~np.eye(n, dtype=bool)
    holds = not np.any(ratios.view(np.ndarray)[off_diagonal] == 1)
    return VandermondeCode(f, tuple(xs), r, k, generator, holds)
