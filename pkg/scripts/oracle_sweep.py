#!/usr/bin/env python3
"""Sweep the finite-field oracle over every parameter of the given ranks.

Prints one JSON report line per (parameter, field) pair and exits 3 if any
comparison fails.

Example:
    python3 scripts/oracle_sweep.py --max-n 3 --sp2-fields 2 4 --exotic-fields 3 5
"""

import argparse
import json
import sys
import time

from springerbc.fforacle import verify_against_formula
from springerbc.gf import field
from springerbc.params import enumerate_bipartitions, enumerate_omega


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--sp2-fields", type=int, nargs="*", default=[2, 4])
    ap.add_argument("--exotic-fields", type=int, nargs="*", default=[3, 5])
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    failed = 0
    for n in range(1, args.max_n + 1):
        for q in args.sp2_fields:
            for p in enumerate_omega(n):
                rep = verify_against_formula(p, field(q), jobs=args.jobs)
                failed += not rep["pass"]
                print(json.dumps(rep))
        for q in args.exotic_fields:
            for b in enumerate_bipartitions(n):
                rep = verify_against_formula(b, field(q), jobs=args.jobs)
                failed += not rep["pass"]
                print(json.dumps(rep))
    print(
        f"# {failed} failures, {time.perf_counter() - t0:.1f}s", file=sys.stderr
    )
    sys.exit(3 if failed else 0)


if __name__ == "__main__":
    main()
