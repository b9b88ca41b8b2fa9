"""Integer helpers by deterministic trial division (desk-scale inputs)."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


@lru_cache(maxsize=1024)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n >= 1 as ((prime, exponent), ...) ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    factors: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return tuple(factors)


def prime_divisors(n: int) -> list[int]:
    return [q for q, _ in factorize(n)]


def primes_upto(limit: int) -> Iterator[int]:
    """Primes 2 <= p <= limit in increasing order."""
    if limit < 2:
        return
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    for i, flag in enumerate(sieve):
        if flag:
            yield i


def digits(v: int, base: int, width: int) -> list[int]:
    """Little-endian base-`base` digits of v, padded to `width`."""
    out = []
    for _ in range(width):
        v, d = divmod(v, base)
        out.append(d)
    return out


def undigits(coeffs: list[int] | tuple[int, ...], base: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * base + c
    return v
