"""Reduced binary quadratic forms of discriminant -4n and the idoneal test.

n is idoneal exactly when every genus of primitive forms of discriminant
-4n holds a single class, i.e. h(-4n) = 2^(mu-1) with mu read off from the
odd prime divisors of n and the residue of n mod 8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import DomainError, factorize

MAX_N = 10**6


@dataclass(frozen=True, order=True)
class QuadraticForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        return b >= 0 or (abs(b) != a and a != c)

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y


@dataclass(frozen=True)
class IdonealVerdict:
    n: int
    class_number: int
    odd_prime_count: int
    mu: int
    idoneal: bool


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise DomainError(f"n must lie in [1, {MAX_N}], got {n}")


def reduced_forms(n: int, b_max: int | None = None) -> list[QuadraticForm]:
    """Primitive reduced forms (a, b, c) with b^2 - 4ac = -4n, ordered by (a, b).

    ``b_max`` widens the scan over |b| beyond the reduction bound sqrt(4n/3);
    it exists so tests can confirm nothing is hiding out there.
    """
    _check_n(n)
    if b_max is None:
        b_max = isqrt(4 * n // 3)
    forms = []
    for b in range(0, b_max + 1, 2):
        ac = (b * b + 4 * n) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                for f in {QuadraticForm(a, b, c), QuadraticForm(a, -b, c)}:
                    if f.is_reduced() and f.is_primitive():
                        forms.append(f)
            a += 1
    return sorted(forms)


def odd_prime_count(n: int) -> int:
    return sum(1 for p in factorize(n).primes() if p != 2)


def mu(n: int) -> int:
    """Genus exponent for discriminant -4n: there are 2^(mu-1) genera."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    r = odd_prime_count(n)
    if n % 4 == 3:
        return r
    if n % 4 in (1, 2):
        return r + 1
    if n % 8 == 4:
        return r + 1
    return r + 2


@lru_cache(maxsize=4096)
def is_idoneal(n: int) -> IdonealVerdict:
    h = len(reduced_forms(n))
    m = mu(n)
    return IdonealVerdict(n, h, odd_prime_count(n), m, h == 2 ** (m - 1))


def idoneal_up_to(limit: int) -> list[int]:
    if limit > MAX_N:
        raise DomainError(f"limit must be <= {MAX_N}")
    return [n for n in range(1, limit + 1) if is_idoneal(n).idoneal]
