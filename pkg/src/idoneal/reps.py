"""Representations m = n*x^2 + y^2, primality by uniqueness, and factoring
from a pair of distinct representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .arith import DomainError, check_range, is_prime
from .forms import MAX_N, is_idoneal

# below 2**52 the float64 sqrt lands within one unit of the integer root
_VECTOR_LIMIT = 2**52
_SCALAR_SCAN = 256

CERTIFIED_PRIME = "CertifiedPrime"
COMPOSITE = "CompositeByMultipleReps"
NOT_REPRESENTED = "NotRepresented"
NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class Representation:
    x: int
    y: int

    @property
    def proper(self) -> bool:
        return gcd(self.x, self.y) == 1

    def value(self, n: int) -> int:
        return n * self.x * self.x + self.y * self.y


@dataclass
class Certificate:
    n: int
    m: int
    representations: list[Representation]
    status: str
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "status": self.status,
            "reason": self.reason,
            "representations": [{"x": r.x, "y": r.y, "proper": r.proper} for r in self.representations],
        }


def enumerate_reps(n: int, m: int) -> list[Representation]:
    """Every (x, y) with x, y >= 0 and n*x^2 + y^2 = m, by decreasing x."""
    if n < 1 or m < 1:
        raise DomainError(f"need n, m >= 1, got n={n}, m={m}")
    check_range(m, "m")
    x_max = isqrt(m // n)
    if x_max < _SCALAR_SCAN or m >= _VECTOR_LIMIT:
        out = []
        for x in range(x_max, -1, -1):
            rest = m - n * x * x
            y = isqrt(rest)
            if y * y == rest:
                out.append(Representation(x, y))
        return out
    xs = np.arange(x_max, -1, -1, dtype=np.int64)
    rest = m - n * xs * xs
    ys = np.sqrt(rest.astype(np.float64)).astype(np.int64)
    ys += (ys + 1) * (ys + 1) <= rest
    ys -= ys * ys > rest
    hit = ys * ys == rest
    return [Representation(int(x), int(y)) for x, y in zip(xs[hit], ys[hit])]


def criterion_status(n: int, m: int) -> tuple[str, list[Representation]]:
    """Apply the uniqueness rule without asking whether n is idoneal."""
    reps = enumerate_reps(n, m)
    if len(reps) >= 2:
        return COMPOSITE, reps
    if len(reps) == 1 and reps[0].proper:
        return CERTIFIED_PRIME, reps
    # a lone improper representation still leaves m without a proper one
    return NOT_REPRESENTED, reps


def certify(n: int, m: int) -> Certificate:
    if n < 1 or m < 2:
        raise DomainError(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    check_range(m, "m")
    if n > MAX_N:
        return Certificate(n, m, [], NOT_APPLICABLE, f"n > {MAX_N} not supported by the idoneal test")
    if not is_idoneal(n).idoneal:
        return Certificate(n, m, [], NOT_APPLICABLE, f"{n} is not idoneal")
    if m % 2 == 0:
        return Certificate(n, m, [], NOT_APPLICABLE, "m is even")
    if gcd(m, n) > 1:
        return Certificate(n, m, [], NOT_APPLICABLE, f"gcd(m, n) = {gcd(m, n)}")
    status, reps = criterion_status(n, m)
    return Certificate(n, m, reps, status)


def certify_form_value(n: int, a: int) -> Certificate:
    """Certificate for m = n*a^2 + 1, with the overflow check on m."""
    m = n * a * a + 1
    check_range(m, "n*a^2+1")
    return certify(n, m)


class FactoringFailure(ArithmeticError):
    """Both gcd branches came out trivial."""


def factor_from_two_reps(n: int, m: int, rep1: Representation, rep2: Representation) -> int:
    """Nontrivial divisor of m from two distinct representations.

    From n*x1^2 + y1^2 = n*x2^2 + y2^2 = m one gets
    (x1*y2 - x2*y1)(x1*y2 + x2*y1) = x1^2*y2^2 - x2^2*y1^2 = 0 (mod m),
    so at least one of the two gcds with m is a proper divisor unless one
    factor is itself 0 mod m.
    """
    for rep in (rep1, rep2):
        if rep.value(n) != m:
            raise DomainError(f"{rep} does not represent {m} by n={n}")
    if rep1 == rep2:
        raise DomainError("representations must be distinct")
    cross = rep1.x * rep2.y
    other = rep2.x * rep1.y
    for t in (cross - other, cross + other):
        d = gcd(m, t)
        if 1 < d < m:
            return d
    raise FactoringFailure(f"both gcds trivial for m={m}, reps {rep1}, {rep2}")


@dataclass(frozen=True)
class Finding:
    """Disagreement between the uniqueness rule and a primality oracle."""

    n: int
    a: int
    m: int
    status: str
    prime: bool
    explanation: str  # empty means unexplained

    def to_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("n", "a", "m", "status", "prime", "explanation")}


def _explain(n: int, m: int, status: str, prime: bool, reps: list[Representation]) -> str:
    if n == 1 and prime and status == COMPOSITE:
        # x^2 + y^2 is symmetric, so (x, y) and (y, x) are counted separately
        halves = {frozenset((r.x, r.y)) for r in reps}
        if len(halves) == 1:
            return "swap symmetry of x^2 + y^2"
    return ""


@dataclass
class Audit:
    n: int
    idoneal: bool
    checked: int = 0
    findings: list[Finding] = field(default_factory=list)

    @property
    def unexplained(self) -> list[Finding]:
        return [f for f in self.findings if not f.explanation]


def audit_form(n: int, m_max: int) -> Audit:
    """Compare the uniqueness rule to is_prime on m = n*a^2 + 1 <= m_max.

    For idoneal n the gated certificate is used and mismatches are findings.
    For other n the raw rule is applied, and every unique-representation
    composite is recorded as a counterexample.
    """
    idoneal = is_idoneal(n).idoneal
    audit = Audit(n, idoneal)
    a = 1
    while n * a * a + 1 <= m_max:
        m = n * a * a + 1
        a_cur = a
        a += 1
        if m % 2 == 0 or gcd(m, n) > 1:
            continue
        prime = is_prime(m)
        if idoneal:
            cert = certify(n, m)
            status, reps = cert.status, cert.representations
        else:
            status, reps = criterion_status(n, m)
        audit.checked += 1
        if (status == CERTIFIED_PRIME) != prime or status == NOT_REPRESENTED:
            explanation = _explain(n, m, status, prime, reps)
            if not idoneal:
                explanation = f"{n} is not idoneal"
            audit.findings.append(Finding(n, a_cur, m, status, prime, explanation))
    return audit
