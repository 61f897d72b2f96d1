"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import paperdata
from .arith import DomainError
from .forms import idoneal_up_to, is_idoneal, reduced_forms
from .reps import FactoringFailure, Representation, certify, enumerate_reps, factor_from_two_reps
from .sieve import SieveConfig, SieveReport, per_z, run_sieve, z_sign_of_y

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class InvariantFailure(RuntimeError):
    pass


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _md_table(header: list[str], rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _sieve(args) -> SieveReport:
    report = run_sieve(SieveConfig(args.coefficient, args.bound), threads=args.threads)
    n = report.config.n
    bad = [w for w in report.witnesses() if not w.check(n)]
    if bad:
        raise InvariantFailure(f"{len(bad)} witness(es) violate n*a^2+1 = n*x^2+y^2, first {bad[0]}")
    return report


def _z_of(n: int, y: int) -> tuple[str, str]:
    if n != paperdata.PAPER_N:
        return "", ""
    zi = z_sign_of_y(y)
    return str(zi.z), zi.sign


def _starred(report: SieveReport, a: int) -> str:
    return f"{a}*" if report.occurrences[a] > 1 else str(a)


def _format_report(report: SieveReport, fmt: str, by_z: bool, diffs=None) -> str:
    n = report.config.n
    if fmt == "json":
        d = report.to_dict()
        d["diffs"] = [x.to_dict() for x in (diffs or [])]
        return _json(d)
    if fmt == "csv":
        rows = []
        for y, ws in report.per_y:
            z, sign = _z_of(n, y)
            rows += [(y, z, sign, w.a, w.x, w.pair.r, w.pair.s) for w in ws]
        return _csv(["y", "z", "sign", "a", "x", "r", "s"], rows)
    if by_z:
        rows = [(z, ", ".join(str(w.a) for w in sorted(ws, key=lambda w: w.a))) for z, ws in per_z(report).items()]
        return _md_table(["z", "Exclusions"], rows)
    tens: dict[int, list[str]] = {}
    for a in report.excluded:
        if a < report.config.bound:
            tens.setdefault(a // 10, []).append(_starred(report, a))
    return _md_table(["", "Exclusions"], [(k, ", ".join(v)) for k, v in tens.items()])


def cmd_sieve(args) -> int:
    if args.per_z and args.coefficient != paperdata.PAPER_N:
        raise DomainError("--per-z is only defined for n = 232")
    sys.stdout.write(_format_report(_sieve(args), args.format, args.per_z))
    return EXIT_OK


def cmd_survivors(args) -> int:
    report = _sieve(args)
    n = report.config.n
    if args.format == "json":
        out = _json({"config": {"n": n, "bound": report.config.bound}, "survivors": report.survivors})
    elif args.format == "csv":
        out = _csv(["a", "m"], [(a, n * a * a + 1) for a in report.survivors])
    else:
        vals = report.survivors
        out = _md_table(["a"] * 11, [vals[i : i + 11] + [""] * (11 - len(vals[i : i + 11])) for i in range(0, len(vals), 11)])
    sys.stdout.write(out)
    return EXIT_OK


def _reps_rows(reps):
    return [(r.x, r.y, r.proper) for r in reps]


def cmd_certify(args) -> int:
    if (args.a is None) == (args.m is None):
        raise DomainError("give exactly one of -a or -m")
    n = args.coefficient
    m = args.m if args.m is not None else n * args.a * args.a + 1
    cert = certify(n, m)
    if args.format == "json":
        out = _json(cert.to_dict())
    elif args.format == "csv":
        out = _csv(["n", "m", "status", "x", "y", "proper"], [(n, m, cert.status, *row) for row in _reps_rows(cert.representations)] or [(n, m, cert.status, "", "", "")])
    else:
        out = f"**{cert.status}**: m = {m}, n = {n}" + (f" ({cert.reason})" if cert.reason else "") + "\n\n"
        out += _md_table(["x", "y", "proper"], _reps_rows(cert.representations))
    sys.stdout.write(out)
    return EXIT_OK


def cmd_reps(args) -> int:
    if args.m is None:
        raise DomainError("-m is required")
    reps = enumerate_reps(args.coefficient, args.m)
    if args.format == "json":
        out = _json({"n": args.coefficient, "m": args.m, "representations": [{"x": r.x, "y": r.y, "proper": r.proper} for r in reps]})
    elif args.format == "csv":
        out = _csv(["x", "y", "proper"], _reps_rows(reps))
    else:
        out = _md_table(["x", "y", "proper"], _reps_rows(reps))
    sys.stdout.write(out)
    return EXIT_OK


def cmd_idoneal(args) -> int:
    if args.max is not None:
        values = idoneal_up_to(args.max)
        if args.format == "json":
            out = _json({"max": args.max, "count": len(values), "idoneal": values})
        elif args.format == "csv":
            out = _csv(["n"], [(v,) for v in values])
        else:
            out = ", ".join(map(str, values)) + "\n"
        sys.stdout.write(out)
        return EXIT_OK
    v = is_idoneal(args.coefficient)
    forms = [(f.a, f.b, f.c) for f in reduced_forms(v.n)]
    fields = {"n": v.n, "class_number": v.class_number, "odd_prime_count": v.odd_prime_count, "mu": v.mu, "idoneal": v.idoneal}
    if args.format == "json":
        out = _json({**fields, "forms": [list(f) for f in forms]})
    elif args.format == "csv":
        out = _csv(list(fields), [list(fields.values())])
    else:
        out = _md_table(list(fields), [list(fields.values())]) + "\n" + _md_table(["a", "b", "c"], forms)
    sys.stdout.write(out)
    return EXIT_OK


def _parse_rep(text: str) -> Representation:
    x, _, y = text.partition(",")
    return Representation(int(x), int(y))


def cmd_factor_from_reps(args) -> int:
    n, m = args.coefficient, args.m
    if m is None:
        raise DomainError("-m is required")
    if args.rep:
        if len(args.rep) != 2:
            raise DomainError("give --rep exactly twice")
        rep1, rep2 = map(_parse_rep, args.rep)
    else:
        reps = enumerate_reps(n, m)
        if len(reps) < 2:
            raise DomainError(f"{m} has fewer than two representations by n={n}")
        rep1, rep2 = reps[0], reps[1]
    try:
        d = factor_from_two_reps(n, m, rep1, rep2)
    except FactoringFailure as exc:
        print(exc, file=sys.stderr)
        return EXIT_MISMATCH
    row = {"n": n, "m": m, "rep1": [rep1.x, rep1.y], "rep2": [rep2.x, rep2.y], "divisor": d, "cofactor": m // d}
    if args.format == "json":
        out = _json(row)
    elif args.format == "csv":
        out = _csv(["n", "m", "x1", "y1", "x2", "y2", "divisor", "cofactor"], [(n, m, rep1.x, rep1.y, rep2.x, rep2.y, d, m // d)])
    else:
        out = f"{m} = {d} · {m // d}\n"
    sys.stdout.write(out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    args.coefficient, args.bound = paperdata.PAPER_N, paperdata.PAPER_BOUND
    report = _sieve(args)
    diffs = paperdata.diff_against_paper(report)
    if args.format == "json":
        out = _format_report(report, "json", False, diffs)
    else:
        header = ["table", "row", "value", "class", "printed", "computed", "note"]
        rows = [[d.table, d.row, d.value, d.cls, d.printed, d.computed, d.note] for d in diffs]
        out = _csv(header, rows) if args.format == "csv" else _md_table(header, rows)
    sys.stdout.write(out)
    bad = [d for d in diffs if d.cls not in paperdata.BENIGN]
    for d in bad:
        print(f"{d.table} row {d.row}: {d.value} {d.cls} {d.note}".rstrip(), file=sys.stderr)
    return EXIT_OK if not bad else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--coefficient", type=int, default=232, help="form coefficient n in n*a^2+1 (default 232)")
    common.add_argument("--format", choices=("json", "csv", "markdown"), default="json")

    sieving = argparse.ArgumentParser(add_help=False)
    sieving.add_argument("--bound", type=int, default=300, help="largest a for which exclusions are kept")
    sieving.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="idoneal", description="Exclusion sieve for primes n*a^2+1 and idoneal-number tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sieve", parents=[common, sieving], help="run the exclusion sieve")
    p.add_argument("--per-z", action="store_true", help="group exclusions by z (n = 232 only)")
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("survivors", parents=[common, sieving], help="values of a in [1, bound-1] never excluded")
    p.set_defaults(func=cmd_survivors)

    p = sub.add_parser("certify", parents=[common], help="primality by uniqueness of representation")
    p.add_argument("-a", type=int, help="certify m = n*a^2+1")
    p.add_argument("-m", type=int, help="certify m directly")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("reps", parents=[common], help="all (x, y) with n*x^2+y^2 = m")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=cmd_reps)

    p = sub.add_parser("idoneal", parents=[common], help="idoneal test for n, or list up to --max")
    p.add_argument("--max", type=int)
    p.set_defaults(func=cmd_idoneal)

    p = sub.add_parser("factor-from-reps", parents=[common], help="split m using two representations")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--rep", action="append", metavar="X,Y", help="representation, given twice; default: first two found")
    p.set_defaults(func=cmd_factor_from_reps)

    p = sub.add_parser("verify-paper", parents=[common], help="diff the sieve against the printed tables")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (DomainError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantFailure as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run_cli())
