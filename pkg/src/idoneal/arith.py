"""Exact integer kernel: factorization, factor pairs, primality.

Everything here works on Python ints but refuses magnitudes beyond the
signed 63-bit range so that results stay portable to fixed-width code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

MAX_VALUE = 2**63 - 1

# Miller-Rabin with these bases is exact for every n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def check_range(value: int, what: str = "value") -> int:
    if value < 0 or value > MAX_VALUE:
        raise OverflowError(f"{what}={value} outside [0, 2**63-1]")
    return value


@dataclass(frozen=True, order=True)
class FactorPair:
    r: int
    s: int

    def __post_init__(self):
        if not self.r >= self.s >= 1:
            raise DomainError(f"need r >= s >= 1, got ({self.r}, {self.s})")

    @property
    def half_sum(self) -> int:
        return (self.r + self.s) // 2

    @property
    def half_diff(self) -> int:
        return (self.r - self.s) // 2


@dataclass(frozen=True)
class PrimeFactorization:
    value: int
    factors: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __str__(self):
        if not self.factors:
            return "1"
        return "·".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


def is_prime(m: int) -> bool:
    """Deterministic primality for 0 <= m <= 2**63-1."""
    check_range(m, "m")
    if m < 2:
        return False
    for p in _MR_BASES:
        if m % p == 0:
            return m == p
    if m < 41 * 41:
        return True
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def factorize(m: int) -> PrimeFactorization:
    """Prime factorization by trial division.

    Stops early once the cofactor is prime, so the cost is governed by the
    second largest prime factor rather than by sqrt(m).
    """
    if m < 1:
        raise DomainError(f"cannot factorize {m}")
    check_range(m, "m")
    factors = []
    rest = m
    for p in (2, 3, 5):
        e = 0
        while rest % p == 0:
            rest //= p
            e += 1
        if e:
            factors.append((p, e))
    # 2-3-5 wheel over the residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    p, i = 7, 0
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
            if is_prime(rest):
                break
        p += steps[i]
        i = (i + 1) % 8
    if rest > 1:
        factors.append((rest, 1))
    return PrimeFactorization(m, tuple(factors))


def merge_factorizations(*parts: PrimeFactorization, divide_by: PrimeFactorization | None = None) -> PrimeFactorization:
    """Factorization of prod(parts) / divide_by, which must be exact."""
    exps: dict[int, int] = {}
    value = 1
    for part in parts:
        value *= part.value
        for p, e in part.factors:
            exps[p] = exps.get(p, 0) + e
    if divide_by is not None:
        if value % divide_by.value:
            raise DomainError(f"{divide_by.value} does not divide {value}")
        value //= divide_by.value
        for p, e in divide_by.factors:
            exps[p] -= e
    return PrimeFactorization(value, tuple(sorted((p, e) for p, e in exps.items() if e)))


def pairs_from_factorization(fact: PrimeFactorization) -> list[FactorPair]:
    M = fact.value
    root = isqrt(M)
    small = [d for d in fact.divisors() if d <= root]
    return [FactorPair(M // d, d) for d in small]


def divisor_pairs(M: int) -> list[FactorPair]:
    """All (r, s) with r*s == M and r >= s, by decreasing r."""
    if M < 1:
        raise DomainError(f"divisor_pairs needs M >= 1, got {M}")
    return pairs_from_factorization(factorize(M))


def same_parity_pairs(M: int) -> list[FactorPair]:
    """Factor pairs of M whose members are both odd or both even."""
    if M % 4 == 2:
        return []
    return [pr for pr in divisor_pairs(M) if (pr.r - pr.s) % 2 == 0]
