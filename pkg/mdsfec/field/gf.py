"""Exact arithmetic in GF(p) and GF(p^beta), backed by `galois`.

Elements are stored in canonical integer form: the polynomial-basis
coefficient vector (c_0, ..., c_{beta-1}) encodes as sum(c_i * p^i), which
is also the integer representation of a `galois.FieldArray`. Prime fields
use that integer directly as the residue.

`FieldSpec` names a field by characteristic, modulus and primitive element
and hands out the matching `galois.GF` class; `Fe` wraps a single element
for the scalar API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import galois
import numpy as np

from mdsfec.errors import (
    FieldDivisionError,
    FieldMismatchError,
    FieldRangeError,
    ModulusError,
    NotPrimeError,
)
from mdsfec.field.numtheory import digits, is_prime, undigits


def modulus_poly(p: int, coeffs: list[int] | tuple[int, ...]) -> galois.Poly:
    """The polynomial over GF(p) with ascending coefficients `coeffs`."""
    return galois.Poly(list(coeffs)[::-1], field=galois.GF(p))


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^beta) with its modulus and (optionally) a primitive element.

    `modulus` lists the coefficients of the monic irreducible polynomial in
    ascending order, leading 1 included; it is empty for prime fields.
    `delta` is the canonical integer of a primitive element, or None for a
    field still under construction (see fieldsearch.primitive_element).
    """

    p: int
    beta: int = 1
    modulus: tuple[int, ...] = ()
    delta: int | None = None

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise NotPrimeError(f"characteristic {self.p} is not prime")
        if self.beta < 1:
            raise ModulusError(f"extension degree must be >= 1, got {self.beta}")
        if self.beta == 1:
            if self.modulus:
                raise ModulusError("prime fields carry no modulus")
        else:
            m = self.modulus
            if len(m) != self.beta + 1 or m[-1] != 1:
                raise ModulusError(
                    f"modulus must be monic of degree {self.beta}, got {list(m)}"
                )
            if any(not 0 <= c < self.p for c in m):
                raise ModulusError(f"modulus coefficients must lie in [0, {self.p})")
            if not modulus_poly(self.p, m).is_irreducible():
                raise ModulusError(f"modulus {list(m)} is reducible over GF({self.p})")
        if self.delta is not None and not self.is_primitive(self.delta):
            raise ModulusError(f"{self.delta} is not a primitive element of {self}")

    def __str__(self) -> str:
        if self.beta == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.beta})"

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        """Identity of the field, independent of the primitive element chosen."""
        return (self.p, self.beta, self.modulus)

    @cached_property
    def order(self) -> int:
        return self.p**self.beta

    @property
    def is_prime_field(self) -> bool:
        return self.beta == 1

    @cached_property
    def gf(self) -> type[galois.FieldArray]:
        """The `galois` field class for this modulus and primitive element."""
        kwargs: dict[str, object] = {}
        if self.beta > 1:
            kwargs["irreducible_poly"] = modulus_poly(self.p, self.modulus)
        if self.delta is not None:
            kwargs["primitive_element"] = self.delta
        return galois.GF(self.order, verify=False, **kwargs)

    def array(self, values: object) -> galois.FieldArray:
        """Field array from canonical integers (nested lists allowed)."""
        return self.gf(np.asarray(values, dtype=np.int64))

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def element(self, v: int) -> Fe:
        return Fe(self, v)

    # ── int-level arithmetic ───────────────────────────────────

    def check(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise FieldRangeError(f"{v} is not an element of {self}")
        return v

    def to_coeffs(self, v: int) -> list[int]:
        return digits(v, self.p, self.beta)

    def from_coeffs(self, coeffs: list[int] | tuple[int, ...]) -> int:
        if len(coeffs) > self.beta:
            raise FieldRangeError(f"{len(coeffs)} coefficients exceed degree {self.beta}")
        return undigits([c % self.p for c in coeffs], self.p)

    def add(self, a: int, b: int) -> int:
        return int(self.gf(a) + self.gf(b))

    def neg(self, a: int) -> int:
        return int(-self.gf(a))

    def sub(self, a: int, b: int) -> int:
        return int(self.gf(a) - self.gf(b))

    def mul(self, a: int, b: int) -> int:
        return int(self.gf(a) * self.gf(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError(f"zero has no inverse in {self}")
        return int(self.gf(a) ** -1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise FieldDivisionError(f"zero has no inverse in {self}")
            return 1 if e == 0 else 0
        return int(self.gf(a) ** (e % (self.order - 1)))

    def scalar(self, n: int) -> int:
        """The image of the integer n in the prime subfield."""
        return n % self.p

    def is_primitive(self, a: int) -> bool:
        """True iff a generates the multiplicative group."""
        if a == 0 or not 0 <= a < self.order:
            return False
        return self.multiplicative_order(a) == self.order - 1

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldDivisionError("zero has no multiplicative order")
        return int(self.gf(a).multiplicative_order())


@dataclass(frozen=True)
class Fe:
    """A single field element; arithmetic requires operands of one field."""

    field: FieldSpec
    value: int

    def __post_init__(self) -> None:
        self.field.check(self.value)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field.to_coeffs(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)

    def _other(self, other: Fe | int) -> int:
        if isinstance(other, Fe):
            if other.field.key != self.field.key:
                raise FieldMismatchError(f"{self.field} and {other.field} differ")
            return other.value
        if isinstance(other, int):
            return self.field.scalar(other)
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other: Fe | int) -> Fe:
        return Fe(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: Fe | int) -> Fe:
        return Fe(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other: Fe | int) -> Fe:
        return Fe(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other: Fe | int) -> Fe:
        return Fe(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: Fe | int) -> Fe:
        return Fe(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> Fe:
        return Fe(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> Fe:
        return Fe(self.field, self.field.pow(self.value, e))


def _same(a: Fe, b: Fe) -> FieldSpec:
    if a.field.key != b.field.key:
        raise FieldMismatchError(f"{a.field} and {b.field} differ")
    return a.field


def add(a: Fe, b: Fe) -> Fe:
    f = _same(a, b)
    return Fe(f, f.add(a.value, b.value))


def neg(a: Fe) -> Fe:
    return Fe(a.field, a.field.neg(a.value))


def sub(a: Fe, b: Fe) -> Fe:
    f = _same(a, b)
    return Fe(f, f.sub(a.value, b.value))


def mul(a: Fe, b: Fe) -> Fe:
    f = _same(a, b)
    return Fe(f, f.mul(a.value, b.value))


def inv(a: Fe) -> Fe:
    return Fe(a.field, a.field.inv(a.value))


def power(a: Fe, e: int) -> Fe:
    """a**e; negative exponents go through inv."""
    return Fe(a.field, a.field.pow(a.value, e))


def to_int(a: Fe) -> int:
    return a.value


def from_int(v: int, f: FieldSpec) -> Fe:
    return Fe(f, f.check(v))
