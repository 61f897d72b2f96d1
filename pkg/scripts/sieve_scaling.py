"""Time run_sieve(232, bound) for growing bounds and check soundness of the
survivors against is_prime along the way."""

import argparse
import time

from idoneal.arith import is_prime
from idoneal.sieve import SieveConfig, run_sieve


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=232)
    ap.add_argument("--bounds", type=int, nargs="+", default=[300, 1000, 3000, 10000, 30000])
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print("bound  seconds  survivors  excluded  oracle_ok")
    for bound in args.bounds:
        t0 = time.perf_counter()
        report = run_sieve(SieveConfig(args.n, bound), threads=args.threads)
        dt = time.perf_counter() - t0
        ok = all(is_prime(args.n * a * a + 1) for a in report.survivors) and not any(
            is_prime(args.n * a * a + 1) for a in report.excluded
        )
        print(f"{bound:<6} {dt:7.2f}  {len(report.survivors):9d}  {len(report.excluded):8d}  {ok}")


if __name__ == "__main__":
    main()
