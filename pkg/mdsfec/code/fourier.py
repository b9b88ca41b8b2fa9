"""Fourier matrices F_n over a finite field and their pairs F_n^*.

Rows of F_n are e_i with e_i[m] = omega^(i*m); columns of F_n^* are
f_i = e_{n-i}^T, so e_i . f_j = n when i = j and 0 otherwise. Indices
wrap mod n. Application is the naive O(n^2) product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from mdsfec.code import linalg
from mdsfec.code.linalg import Matrix, Vector
from mdsfec.errors import CharacteristicError, LengthMismatchError, NoRootError
from mdsfec.field.gf import Fe, FieldSpec
from mdsfec.field.numtheory import prime_divisors
from mdsfec.field.search import find_field, nth_root

# Above this length rows are generated on demand instead of tabulated
TABLE_LIMIT = 4096


@dataclass(frozen=True)
class FourierCtx:
    field: FieldSpec
    n: int
    omega: int

    def __post_init__(self) -> None:
        f = self.field
        if self.n < 1:
            raise NoRootError(f"length must be positive, got {self.n}")
        if self.n % f.p == 0:
            raise CharacteristicError(f"{f.p} divides {self.n}; n is not invertible in {f}")
        f.check(self.omega)
        if f.pow(self.omega, self.n) != 1 or any(
            f.pow(self.omega, self.n // q) == 1 for q in prime_divisors(self.n)
        ):
            raise NoRootError(f"{self.omega} is not a primitive {self.n}-th root of unity in {f}")

    @classmethod
    def for_length(cls, n: int, p: int) -> FourierCtx:
        """Smallest field of characteristic p, omega = delta^s."""
        f = find_field(n, p)
        return cls(f, n, nth_root(f, n).value)

    @classmethod
    def over(cls, f: FieldSpec, n: int) -> FourierCtx:
        return cls(f, n, nth_root(f, n).value)

    @property
    def root(self) -> Fe:
        return Fe(self.field, self.omega)

    @cached_property
    def powers(self) -> list[int]:
        """omega^0, ..., omega^(n-1)."""
        w = self.field.gf(self.omega)
        acc = self.field.gf(1)
        out = []
        for _ in range(self.n):
            out.append(int(acc))
            acc = acc * w
        return out

    @cached_property
    def n_inv(self) -> int:
        return self.field.inv(self.field.scalar(self.n))

    @cached_property
    def _table(self) -> Matrix | None:
        if self.n > TABLE_LIMIT:
            return None
        return [self._build_row(i) for i in range(self.n)]

    def _build_row(self, i: int) -> Vector:
        pw, n = self.powers, self.n
        return [pw[(i * m) % n] for m in range(n)]

    def row(self, i: int) -> Vector:
        """e_i, index taken mod n."""
        i %= self.n
        table = self._table
        return list(table[i]) if table is not None else self._build_row(i)

    def inv_col(self, i: int) -> Vector:
        """f_i = e_{n-i}^T, as a flat list."""
        return self.row(-i)

    def matrix(self) -> Matrix:
        return [self.row(i) for i in range(self.n)]

    def inv_matrix(self) -> Matrix:
        """F_n^*, whose column i is f_i."""
        return linalg.transpose([self.inv_col(i) for i in range(self.n)])

    def conjugate(self) -> FourierCtx:
        """The context built on omega^(n-1); its matrix is F_n^*."""
        return FourierCtx(self.field, self.n, self.field.pow(self.omega, self.n - 1))

    def with_root_power(self, k: int) -> FourierCtx:
        return FourierCtx(self.field, self.n, self.field.pow(self.omega, k))

    def apply(self, v: Vector) -> Vector:
        """v . F_n"""
        self._check_len(v)
        table = self._table
        if table is not None:
            return linalg.vec_mat(self.field, v, table)
        return [self._eval(v, m) for m in range(self.n)]

    def apply_inv(self, v: Vector) -> Vector:
        """v . F_n^* . n^-1, the inverse of apply."""
        self._check_len(v)
        return linalg.vec_scale(self.field, self._conj.apply(v), self.n_inv)

    @cached_property
    def _conj(self) -> FourierCtx:
        return self.conjugate()

    def _eval(self, v: Vector, m: int) -> int:
        return linalg.dot(self.field, v, self._build_row(m))

    def exponent_matrix(self, rows: list[int], cols: list[int]) -> Matrix:
        """[[omega^(j*m) for m in cols] for j in rows], exponents mod n."""
        if not rows or not cols:
            return [[] for _ in rows]
        exps = np.outer(rows, cols) % self.n
        return np.asarray(self.powers, dtype=np.int64)[exps].tolist()

    def _check_len(self, v: Vector) -> None:
        if len(v) != self.n:
            raise LengthMismatchError(f"expected {self.n} symbols, got {len(v)}")


def row(ctx: FourierCtx, i: int) -> Vector:
    return ctx.row(i)


def inv_col(ctx: FourierCtx, i: int) -> Vector:
    return ctx.inv_col(i)


def apply(ctx: FourierCtx, v: Vector) -> Vector:
    return ctx.apply(v)


def apply_inv(ctx: FourierCtx, v: Vector) -> Vector:
    return ctx.apply_inv(v)
