"""Census table for increasing arrow bounds.

    python scripts/census_table.py --max-arrows 4
"""
from __future__ import annotations

import argparse
import time

from openstrings.census import CensusConfig, census


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-arrows", type=int, default=3)
    ap.add_argument("--depth", type=int, default=8)
    ap.add_argument("--no-commute", action="store_true")
    args = ap.parse_args()
    print("M  diagrams  move-classes  phi-classes  commuting  abelian-fail  full-fail  full-only  secs")
    for m in range(args.max_arrows + 1):
        t0 = time.perf_counter()
        r = census(CensusConfig(max_arrows=m, depth=args.depth, commute=not args.no_commute)).to_json()
        ob = r["obstructions"]
        comm = f"{r['commuting_pairs']}/{r['pairs_tested']}" if not args.no_commute else "-"
        print(f"{m:<2} {r['diagrams']:>9} {r['move_classes']:>13} {r['phi_classes']:>12} {comm:>10} "
              f"{ob['abelian_fail']:>13} {ob['full_fail']:>10} {ob['full_fail_abelian_pass']:>10} "
              f"{time.perf_counter() - t0:>5.1f}")


if __name__ == "__main__":
    main()
