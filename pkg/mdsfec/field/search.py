"""Finding fields that hold a primitive n-th root of unity.

GF(p^beta) contains one iff p does not divide n, and the least such beta
is the multiplicative order of p mod n. The root itself is delta^s with
delta primitive and s = (p^beta - 1) / n.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from functools import lru_cache
from math import gcd

from mdsfec.errors import (
    CharacteristicError,
    ModulusError,
    NoOrderError,
    NoRootError,
    NotPrimeError,
)
from mdsfec.field.gf import Fe, FieldSpec, modulus_poly
from mdsfec.field.numtheory import digits, factorize, is_prime, primes_upto

log = logging.getLogger(__name__)


def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError(f"euler_phi needs m >= 1, got {m}")
    phi = m
    for q, _ in factorize(m):
        phi = phi // q * (q - 1)
    return phi


def order_mod(a: int, m: int) -> int:
    """Least beta >= 1 with a^beta = 1 (mod m)."""
    if m < 1:
        raise NoOrderError(f"modulus must be positive, got {m}")
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise NoOrderError(f"gcd({a}, {m}) != 1, so {a} has no order mod {m}")
    e = euler_phi(m)
    for q, k in factorize(e):
        for _ in range(k):
            if pow(a, e // q, m) != 1:
                break
            e //= q
    return e


def smallest_modulus(p: int, beta: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree beta over GF(p).

    Candidates run through the non-leading coefficients in canonical
    integer order, so GF(2^3) gets x^3 + x + 1.
    """
    if beta == 1:
        return ()
    for v in range(p**beta):
        cand = digits(v, p, beta) + [1]
        if cand[0] == 0:
            continue
        if modulus_poly(p, cand).is_irreducible():
            return tuple(cand)
    raise ModulusError(f"no irreducible polynomial of degree {beta} over GF({p})")


def primitive_element(f: FieldSpec) -> Fe:
    """Smallest element, in canonical-integer order, of order p^beta - 1."""
    for v in range(1, f.order):
        if f.is_primitive(v):
            return Fe(f, v)
    raise AssertionError(f"{f} has no primitive element")


@lru_cache(maxsize=256)
def make_field(p: int, beta: int = 1, modulus: tuple[int, ...] | None = None) -> FieldSpec:
    """Build GF(p^beta) with a validated modulus and its primitive element."""
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    if modulus is None:
        modulus = smallest_modulus(p, beta)
    bare = FieldSpec(p, beta, tuple(modulus))
    delta = primitive_element(bare)
    log.debug("built %s modulus=%s delta=%d", bare, list(bare.modulus), delta.value)
    return replace(bare, delta=delta.value)


def find_field(n: int, p: int) -> FieldSpec:
    """Smallest field of characteristic p holding a primitive n-th root."""
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    if n < 1:
        raise CharacteristicError(f"length must be positive, got {n}")
    if n % p == 0:
        raise CharacteristicError(
            f"{p} divides {n}: n = 0 in characteristic {p}, no {n}-th root of unity exists"
        )
    return make_field(p, order_mod(p, n))


def nth_root(f: FieldSpec, n: int) -> Fe:
    """omega = delta^s of exact order n, s = (p^beta - 1) / n."""
    if n < 1 or (f.order - 1) % n != 0:
        raise NoRootError(f"{n} does not divide |{f}*| = {f.order - 1}")
    if f.delta is None:
        f = make_field(f.p, f.beta, f.modulus)
    s = (f.order - 1) // n
    return Fe(f, f.pow(f.delta, s))


def root_count(n: int) -> int:
    """Number of primitive n-th roots in any field that contains one."""
    return euler_phi(n)


@dataclass(frozen=True)
class FieldCandidate:
    p: int
    beta: int

    @property
    def size(self) -> int:
        return self.p**self.beta

    @property
    def is_prime_field(self) -> bool:
        return self.beta == 1

    @property
    def name(self) -> str:
        return f"GF({self.p})" if self.beta == 1 else f"GF({self.p}^{self.beta})"


def candidate_fields(n: int, limit: int) -> list[FieldCandidate]:
    """Every characteristic p <= limit with p not dividing n, smallest field first."""
    out = [FieldCandidate(p, order_mod(p, n)) for p in primes_upto(limit) if n % p != 0]
    out.sort(key=lambda c: (c.size, c.p))
    return out
