"""Exclusion sieve for primes of the form n*a^2 + 1.

If n*a^2 + 1 is composite it has a second representation n*x^2 + y^2 with
y > 1.  Rearranging gives (a + x)(a - x) = (y^2 - 1)/n, so each admissible
y and each same-parity factor pair (r, s) of M = (y^2 - 1)/n excludes
a = (r + s)/2.  Whatever is never excluded below the bound survives.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import isqrt

from .arith import (
    MAX_VALUE,
    DomainError,
    FactorPair,
    factorize,
    merge_factorizations,
    pairs_from_factorization,
)

PLUS, MINUS = "plus", "minus"


@dataclass(frozen=True)
class SieveConfig:
    n: int = 232
    bound: int = 300

    def __post_init__(self):
        if self.n < 1 or self.bound < 1:
            raise DomainError(f"need n >= 1 and bound >= 1, got n={self.n}, bound={self.bound}")
        if self.n * self.bound**2 + 1 > MAX_VALUE:
            raise OverflowError(f"n*bound^2+1 exceeds 2**63-1 for n={self.n}, bound={self.bound}")


@dataclass(frozen=True)
class ExclusionWitness:
    a: int
    x: int
    y: int
    pair: FactorPair

    def check(self, n: int) -> bool:
        r, s = self.pair.r, self.pair.s
        return (
            r * s * n == self.y**2 - 1
            and (r - s) % 2 == 0
            and 2 * self.a == r + s
            and 2 * self.x == r - s
            and n * self.a**2 + 1 == n * self.x**2 + self.y**2
        )


@dataclass(frozen=True)
class ZIndex:
    z: int
    sign: str

    def y(self, step: int = 58) -> int:
        return step * self.z + (1 if self.sign == PLUS else -1)


@dataclass
class SieveReport:
    config: SieveConfig
    per_y: list[tuple[int, list[ExclusionWitness]]]
    occurrences: dict[int, int]
    excluded: list[int]
    survivors: list[int] = field(default_factory=list)

    def witnesses(self):
        for _, ws in self.per_y:
            yield from ws

    def witnesses_of(self, a: int) -> list[ExclusionWitness]:
        return [w for w in self.witnesses() if w.a == a]

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "per_y": [
                {
                    "y": y,
                    "witnesses": [
                        {"a": w.a, "x": w.x, "y": w.y, "r": w.pair.r, "s": w.pair.s} for w in ws
                    ],
                }
                for y, ws in self.per_y
            ],
            # JSON object keys are strings; order ascending by a
            "occurrences": {str(a): c for a, c in sorted(self.occurrences.items())},
            "excluded": list(self.excluded),
            "survivors": list(self.survivors),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SieveReport":
        per_y = [
            (
                e["y"],
                [ExclusionWitness(w["a"], w["x"], w["y"], FactorPair(w["r"], w["s"])) for w in e["witnesses"]],
            )
            for e in d["per_y"]
        ]
        return cls(
            config=SieveConfig(**d["config"]),
            per_y=per_y,
            occurrences={int(a): c for a, c in d["occurrences"].items()},
            excluded=list(d["excluded"]),
            survivors=list(d["survivors"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, separators=(",", ":"))


def admissible_y(n: int, y_limit: int) -> list[int]:
    """All y in [2, y_limit] with y^2 = 1 (mod n)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    # residues mod n repeat, so solve once and tile
    roots = [t for t in range(n) if (t * t - 1) % n == 0]
    out = []
    base = 0
    while base <= y_limit:
        for t in roots:
            y = base + t
            if 2 <= y <= y_limit:
                out.append(y)
        base += n
    return out


def z_sign_of_y(y: int, step: int = 58) -> ZIndex:
    """Write y as step*z +/- 1 (step 58 belongs to n = 232)."""
    if y < step - 1:
        raise DomainError(f"y={y} below {step - 1}")
    if y % step == 1:
        return ZIndex((y - 1) // step, PLUS)
    if y % step == step - 1:
        return ZIndex((y + 1) // step, MINUS)
    raise DomainError(f"y={y} is not +/-1 mod {step}")


def _pairs_for_y(n: int, y: int) -> list[FactorPair]:
    # (y-1)(y+1) is far cheaper to factor in two halves than M itself
    fact = merge_factorizations(factorize(y - 1), factorize(y + 1), divide_by=factorize(n))
    if fact.value % 4 == 2:
        return []
    return [pr for pr in pairs_from_factorization(fact) if (pr.r - pr.s) % 2 == 0]


def exclusions_for_y(n: int, y: int, bound: int) -> list[ExclusionWitness]:
    """Witnesses produced by one admissible y, ordered by decreasing r."""
    if y < 2 or (y * y - 1) % n:
        raise DomainError(f"n={n} does not divide y^2-1 for y={y}")
    return [
        ExclusionWitness(pr.half_sum, pr.half_diff, y, pr)
        for pr in _pairs_for_y(n, y)
        if pr.half_sum <= bound
    ]


def y_limit(config: SieveConfig) -> int:
    """Largest y with (y^2 - 1)/n <= bound^2; any larger y only excludes a > bound."""
    return isqrt(config.n * config.bound**2 + 1)


def run_sieve(config: SieveConfig, threads: int = 1) -> SieveReport:
    n, bound = config.n, config.bound
    ys = admissible_y(n, y_limit(config))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            lists = list(pool.map(lambda y: exclusions_for_y(n, y, bound), ys))
    else:
        lists = [exclusions_for_y(n, y, bound) for y in ys]
    per_y = [(y, ws) for y, ws in zip(ys, lists) if ws]
    occ = Counter(w.a for _, ws in per_y for w in ws)
    excluded = sorted(occ)
    report = SieveReport(config, per_y, dict(sorted(occ.items())), excluded)
    report.survivors = survivors(report)
    return report


def survivors(report: SieveReport) -> list[int]:
    """[1, bound-1] minus the excluded values."""
    gone = set(report.excluded)
    return [a for a in range(1, report.config.bound) if a not in gone]


def per_z(report: SieveReport, step: int = 58) -> dict[int, list[ExclusionWitness]]:
    """Regroup witnesses by z, merging the two signs (only meaningful for n = 232)."""
    rows: dict[int, list[ExclusionWitness]] = {}
    for y, ws in report.per_y:
        rows.setdefault(z_sign_of_y(y, step).z, []).extend(ws)
    return rows
