"""Prove every registered theorem and print identity counts, degrees and timings."""

import time

from halfturn.symbolic import THEOREMS, prove_theorem, sym_configuration


def main():
    t0 = time.perf_counter()
    cfg = sym_configuration()
    print(f"symbolic configuration built in {time.perf_counter() - t0:.3f}s")
    for name in THEOREMS:
        t = time.perf_counter()
        rep = prove_theorem(name, cfg)
        top = max(i.degree for i in rep.identities)
        print(f"{name:14s} {rep.status:7s} {len(rep.identities):3d} identities  "
              f"max degree {top:3d}  {time.perf_counter() - t:.3f}s")


if __name__ == "__main__":
    main()
