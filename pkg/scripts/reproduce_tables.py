"""Print the computed per-z and consolidated tables next to the printed ones,
then every non-matching diff."""

import argparse

from idoneal.paperdata import diff_against_paper, printed_table16, printed_table18, render_table
from idoneal.sieve import SieveConfig, per_z, run_sieve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    report = run_sieve(SieveConfig(232, 300), threads=args.threads)
    printed16 = printed_table16()
    print("z   computed | printed")
    for z, ws in per_z(report).items():
        got = ", ".join(str(w.a) for w in sorted(ws, key=lambda w: w.a))
        print(f"{z:<3} {got} | {', '.join(map(str, printed16.get(z, [])))}")
    print()
    print(render_table(printed_table18()))
    print()
    for d in diff_against_paper(report):
        print(f"{d.table:<9} row {d.row:<3} {d.value:<4} {d.cls:<20} {d.note}")
    print(f"\nexcluded below 300: {sum(a < 300 for a in report.excluded)}, survivors: {len(report.survivors)}")


if __name__ == "__main__":
    main()
