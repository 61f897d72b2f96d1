"""Compare the uniqueness-of-representation rule with a primality oracle
on m = n*a^2 + 1 and dump the findings as JSON lines."""

import argparse
import json
import sys

from idoneal.reps import audit_form


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, action="append", help="coefficients (repeatable)")
    ap.add_argument("--max", type=int, default=10**9, help="largest m checked")
    ap.add_argument("--limit", type=int, default=20, help="findings printed per n")
    args = ap.parse_args()

    for n in args.n or [1, 2, 3, 5, 8, 232, 1848, 11, 14]:
        audit = audit_form(n, args.max)
        print(
            f"n={n} idoneal={audit.idoneal} checked={audit.checked} "
            f"findings={len(audit.findings)} unexplained={len(audit.unexplained)}",
            file=sys.stderr,
        )
        for f in audit.findings[: args.limit]:
            print(json.dumps(f.to_dict()))


if __name__ == "__main__":
    main()
