"""Run the exact verification suite over many random cevian points.

    python scripts/run_random_suite.py --count 1000 --seed 3
"""

import argparse
import collections
import time

from halfturn.verify import run_suite, suite_points


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--bound", type=int, default=50)
    args = ap.parse_args()

    start = time.perf_counter()
    reports = run_suite(suite_points(args.seed, args.count, args.bound))
    elapsed = time.perf_counter() - start

    per_family = collections.Counter()
    failures = []
    for r in reports:
        for c in r.claims:
            per_family[c.id.split(".")[0]] += 1
            if not c.passed:
                failures.append((r.p, c))
    for fam, n in sorted(per_family.items()):
        print(f"{fam:8s} {n:7d} claims")
    print(f"{len(reports)} points in {elapsed:.2f}s, {len(failures)} failures")
    for p, c in failures[:20]:
        print(f"  P={p} {c.id} {c.witness or ''}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
