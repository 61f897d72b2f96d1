"""Printed exclusion tables for 232*a^2 + 1 and a diff engine against the sieve.

The transcription lives in ``data/tables.txt`` so it can be proofread
without reading code.  Every discrepancy class is decided from witness
existence (n*a^2 + 1 = n*x^2 + y^2), never from a list of known errata.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .arith import DomainError
from .sieve import SieveReport, per_z

PAPER_N = 232
PAPER_BOUND = 300

MATCH = "Match"
BRACKET_RESTORED = "BracketRestored"
PAPER_MISSING = "PaperMissing"
PAPER_EXTRA = "PaperExtra"
MULTIPLICITY_MISMATCH = "MultiplicityMismatch"
CLASSES = (MATCH, BRACKET_RESTORED, PAPER_MISSING, PAPER_EXTRA, MULTIPLICITY_MISMATCH)
BENIGN = frozenset({MATCH, BRACKET_RESTORED})


@dataclass(frozen=True)
class PrintedEntry:
    value: int
    bracketed: bool = False
    starred: bool = False

    def __str__(self):
        s = f"{self.value}{'*' if self.starred else ''}"
        return f"[{s}]" if self.bracketed else s


@dataclass(frozen=True)
class DiffEntry:
    table: str  # "table16", "table18" or "survivors"
    row: int
    value: int
    cls: str
    printed: int = 0
    computed: int = 0
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "table": self.table,
            "row": self.row,
            "value": self.value,
            "class": self.cls,
            "printed": self.printed,
            "computed": self.computed,
            "note": self.note,
        }


_TOKEN = re.compile(r"\[|\]|\d+\*?")
_HEADER = re.compile(r"\[([a-z]\w*)\]")


def parse_row(text: str) -> list[PrintedEntry]:
    """Parse ``54, [57], 58`` style rows; one bracket may span several values."""
    entries = []
    depth = 0
    for tok in _TOKEN.findall(text):
        if tok == "[":
            depth += 1
        elif tok == "]":
            depth -= 1
        else:
            starred = tok.endswith("*")
            entries.append(PrintedEntry(int(tok.rstrip("*")), depth > 0, starred))
    if depth != 0:
        raise ValueError(f"unbalanced brackets in {text!r}")
    return entries


@lru_cache(maxsize=None)
def _sections() -> dict[str, list[str]]:
    text = resources.files("idoneal").joinpath("data/tables.txt").read_text()
    sections: dict[str, list[str]] = {}
    current = None
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        header = _HEADER.fullmatch(line)
        if header:
            current = header.group(1)
            sections[current] = []
            continue
        sections[current].append(line)
    return sections


def _keyed(section: str) -> dict[int, list[PrintedEntry]]:
    rows = {}
    for line in _sections()[section]:
        key, _, rest = line.partition(":")
        rows[int(key)] = parse_row(rest)
    return rows


def printed_table16() -> dict[int, list[PrintedEntry]]:
    """Rows of the per-z exclusion table; z values never printed map to []."""
    rows = _keyed("table16")
    last = max(rows)
    return {z: rows.get(z, []) for z in range(1, last + 1)}


def printed_table18() -> dict[int, list[PrintedEntry]]:
    """Consolidated exclusions keyed by floor(a/10), stars and brackets kept."""
    return _keyed("table18")


def printed_survivors() -> list[int]:
    return [int(v) for v in re.findall(r"\d+", " ".join(_sections()["survivors"]))]


def render_table(rows: dict[int, list[PrintedEntry]]) -> str:
    return "\n".join(f"{k}: {', '.join(map(str, v))}" for k, v in rows.items())


def _classify_counts(printed: list[PrintedEntry], computed: int) -> str:
    plain = sum(not e.bracketed for e in printed)
    if computed == 0:
        return PAPER_EXTRA
    if not printed:
        return PAPER_MISSING
    if plain == 0:
        return BRACKET_RESTORED
    if len(printed) != computed:
        return MULTIPLICITY_MISMATCH
    return MATCH


def diff_table16(report: SieveReport) -> list[DiffEntry]:
    printed = printed_table16()
    computed = {z: Counter(w.a for w in ws) for z, ws in per_z(report).items()}
    out = []
    for z in sorted(set(printed) | set(computed)):
        got = computed.get(z, Counter())
        by_value: dict[int, list[PrintedEntry]] = {}
        for e in printed.get(z, []):
            by_value.setdefault(e.value, []).append(e)
        for v in sorted(set(by_value) | set(got)):
            entries = by_value.get(v, [])
            out.append(DiffEntry("table16", z, v, _classify_counts(entries, got[v]), len(entries), got[v]))
    return out


def diff_table18(report: SieveReport) -> list[DiffEntry]:
    printed = {e.value: e for row in printed_table18().values() for e in row}
    occ = report.occurrences
    top = report.config.bound - 1
    out = []
    for v in sorted(set(printed) | {a for a in report.excluded if a <= top}):
        e = printed.get(v)
        count = occ.get(v, 0)
        note = ""
        if count == 0:
            cls = PAPER_EXTRA
        elif e is None:
            cls = PAPER_MISSING
        elif e.starred != (count > 1):
            cls = MULTIPLICITY_MISMATCH
            note = f"starred={e.starred} but {count} witness(es)"
        elif e.bracketed:
            cls = BRACKET_RESTORED
        else:
            cls = MATCH
        out.append(DiffEntry("table18", v // 10, v, cls, int(e is not None), count, note))
    return out


def diff_survivors(report: SieveReport) -> list[DiffEntry]:
    """A printed survivor with a witness is a missed exclusion; a value in range
    that is neither printed as survivor nor witnessed is a spurious exclusion."""
    printed = set(printed_survivors())
    in_table18 = {e.value for row in printed_table18().values() for e in row}
    gone = set(report.excluded)
    out = []
    for a in range(1, report.config.bound):
        p, c = a in printed, a in gone
        if p and c:
            cls = PAPER_MISSING
        elif not p and not c:
            cls = PAPER_EXTRA
        else:
            cls = MATCH
        note = "" if (a in in_table18) != p else "value in both or neither printed table"
        out.append(DiffEntry("survivors", a // 10, a, cls, int(p), int(c), note))
    return out


def diff_against_paper(report: SieveReport, include_matches: bool = False) -> list[DiffEntry]:
    cfg = report.config
    if (cfg.n, cfg.bound) != (PAPER_N, PAPER_BOUND):
        raise DomainError(f"paper tables are for n={PAPER_N}, bound={PAPER_BOUND}; got n={cfg.n}, bound={cfg.bound}")
    diffs = diff_table16(report) + diff_table18(report) + diff_survivors(report)
    if include_matches:
        return diffs
    return [d for d in diffs if d.cls != MATCH or d.note]


def is_clean(diffs: list[DiffEntry]) -> bool:
    return all(d.cls in BENIGN for d in diffs)
