"""Turn rate and error-capability requirements into code parameters.

All rate arithmetic uses exact fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Iterable

from mdsfec.errors import CharacteristicError, CodeRangeError, NotPrimeError, RateError
from mdsfec.field.gf import FieldSpec
from mdsfec.field.numtheory import is_prime
from mdsfec.field.search import FieldCandidate, candidate_fields, find_field, order_mod


@dataclass(frozen=True)
class SeriesEntry:
    n: int
    r: int
    d: int
    field: FieldSpec

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def ratio(self) -> Fraction:
        """Distance over length."""
        return Fraction(self.d, self.n)


@dataclass(frozen=True)
class FamilyEntry:
    n: int
    r: int
    d: int

    @property
    def t(self) -> int:
        return (self.d - 1) // 2


@dataclass
class Plan:
    n: int
    r: int
    d: int
    t: int
    rate: Fraction
    min_length: int
    fields: list[FieldCandidate] = field(default_factory=list)


def _check_rate(rate: Fraction) -> Fraction:
    rate = Fraction(rate)
    if not 0 < rate < 1:
        raise RateError(f"rate {rate} is not in (0, 1)")
    return rate


def parse_rate(text: str) -> Fraction:
    """'7/8' or '0.875' as an exact fraction in (0, 1)."""
    try:
        rate = Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise RateError(f"cannot read rate {text!r}") from None
    return _check_rate(rate)


def min_length(rate: Fraction, t: int) -> int:
    """Least n with n * (1 - R) >= 2t."""
    rate = _check_rate(rate)
    if t < 1:
        raise CodeRangeError(f"error capability must be >= 1, got {t}")
    return ceil(Fraction(2 * t) / (1 - rate))


def series_multiples(n: int, r: int, p: int, count: int) -> list[SeriesEntry]:
    """(i*n, i*r, i*(n-r)+1) for the first `count` multipliers i with p not dividing i*n."""
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    if n % p == 0:
        raise CharacteristicError(f"{p} divides the base length {n}")
    if not 1 <= r < n:
        raise CodeRangeError(f"need 1 <= r < n, got r={r}, n={n}")
    out: list[SeriesEntry] = []
    i = 0
    while len(out) < count:
        i += 1
        ni = i * n
        if ni % p == 0:
            continue
        out.append(SeriesEntry(ni, i * r, i * (n - r) + 1, find_field(ni, p)))
    return out


def approx_rate(rate: Fraction, eps: Fraction, p: int) -> Fraction:
    """First r'/n' in [R, R + eps] with p not dividing n', scanning n' upward."""
    rate, eps = Fraction(rate), Fraction(eps)
    if not 0 < rate < rate + eps < 1:
        raise RateError(f"need 0 < R < R + eps < 1, got R={rate}, eps={eps}")
    n = 0
    while True:
        n += 1
        if n % p == 0:
            continue
        r = ceil(rate * n)
        if rate <= Fraction(r, n) <= rate + eps:
            return Fraction(r, n)


def prime_series(rate: Fraction, primes: Iterable[int], count: int) -> list[SeriesEntry]:
    """(p-1, floor((p-1)R), (p-1)-r+1) over GF(p) for the first `count` primes."""
    rate = _check_rate(rate)
    out: list[SeriesEntry] = []
    for p in primes:
        if len(out) == count:
            break
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        n = p - 1
        r = (n * rate.numerator) // rate.denominator
        if r < 1:
            if not out:
                raise CodeRangeError(f"(p-1)*R < 1 for the first prime p={p}")
            continue
        out.append(SeriesEntry(n, r, n - r + 1, find_field(n, p)))
    return out


def primes_congruent_one(m: int, start: int = 2):
    """Primes p >= start with p = 1 (mod m), increasing."""
    p = max(start, 2)
    while True:
        if p % m == 1 % m and is_prime(p):
            yield p
        p += 1


def odd_distance_family(p: int, beta: int = 1) -> list[FamilyEntry]:
    """(q-1, q-1-2m, 2m+1) codes from F_{q-1} over GF(p^beta), m = 1, 2, ..."""
    if not is_prime(p):
        raise NotPrimeError(f"characteristic {p} is not prime")
    n = p**beta - 1
    return [FamilyEntry(n, n - 2 * m, 2 * m + 1) for m in range(1, (n - 1) // 2 + 1)]


def adjusted_length(n: int, p: int) -> int:
    """Nearest length to n not divisible by p; ties go to the smaller one."""
    if n % p:
        return n
    for delta in range(1, n + 1):
        if n - delta > 0 and (n - delta) % p:
            return n - delta
        if (n + delta) % p:
            return n + delta
    return n + 1


def plan_code(rate: Fraction, t: int, p: int | None = None, prime_limit: int = 0) -> Plan:
    """Length, dimension and fields for a rate-R code correcting t errors.

    r = n - 2t keeps distance exactly 2t+1; with a characteristic p that
    divides the minimum length the nearest admissible length is used.
    """
    rate = _check_rate(rate)
    n0 = min_length(rate, t)
    if p is None:
        n = n0
        limit = prime_limit or max(2 * n + 2, 64)
        fields = candidate_fields(n, limit)
    else:
        if not is_prime(p):
            raise NotPrimeError(f"characteristic {p} is not prime")
        n = adjusted_length(n0, p)
        fields = [FieldCandidate(p, order_mod(p, n))]
    r = n - 2 * t
    if r < 1:
        raise CodeRangeError(f"length {n} leaves no room for data with t={t}")
    return Plan(n=n, r=r, d=2 * t + 1, t=t, rate=Fraction(r, n), min_length=n0, fields=fields)
