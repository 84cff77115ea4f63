#!/usr/bin/env python3
"""Print the restriction identities and character-value table for a rank.

Example:
    python3 scripts/character_tables.py --theory exotic --n 3
"""

import argparse

from springerbc.cli import charsum_text
from springerbc.evaluator import value_table
from springerbc.params import enumerate_bipartitions, enumerate_omega
from springerbc.qpoly import poly_to_text
from springerbc.restrict import restrict_exotic, restrict_symplectic


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--theory", choices=("sp2", "exotic"), required=True)
    ap.add_argument("--n", type=int, required=True)
    args = ap.parse_args()

    if args.theory == "sp2":
        params = enumerate_omega(args.n)
        restrict = restrict_symplectic
    else:
        params = enumerate_bipartitions(args.n)
        restrict = restrict_exotic

    print(f"# restriction identities, rank {args.n}")
    for p in params:
        print(f"Res({p}) = {charsum_text(restrict(p))}")

    print(f"\n# character values, rank {args.n}")
    for p, vid, vs1 in value_table(args.n, args.theory):
        print(f"{p}\n  at id: {poly_to_text(vid)}\n  at s1: {poly_to_text(vs1)}")


if __name__ == "__main__":
    main()
