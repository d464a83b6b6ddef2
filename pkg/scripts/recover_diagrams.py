"""Recover reference diagrams known only through their invariants.

Searches every Gauss diagram with the given number of arrows for those whose
word (or polynomial) matches the reference value.

    python scripts/recover_diagrams.py
"""
from __future__ import annotations

import argparse

from openstrings.gauss import all_diagrams, format_diagram, hat
from openstrings.invariant import phi, phi_poly
from openstrings.laurent import parse_polynomial

TARGETS = {
    # the second ribbon string: its seven-letter word
    "alpha3": ("word", 3, "a[0,0] a[1,2] a[2,1] a[3,3] A[3,2] A[2,3] A[1,1]"),
    # the string whose square with its reflection fails the abelian test
    "square_base": ("poly", 3, "-u*v^3 - u^3*v^2 + u^3*v^3 + u + v^2"),
}


def search(kind: str, m: int, target: str) -> list[str]:
    hits = []
    want = parse_polynomial(target) if kind == "poly" else target
    for d in all_diagrams(m):
        got = phi_poly(d) if kind == "poly" else str(phi(d))
        if got == want:
            tag = " (hat-symmetric)" if hat(d) == d else ""
            hits.append(format_diagram(d) + tag)
    return hits


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", choices=sorted(TARGETS))
    args = ap.parse_args()
    for name, (kind, m, target) in TARGETS.items():
        if args.only and name != args.only:
            continue
        hits = search(kind, m, target)
        print(f"{name}: {len(hits)} diagram(s) with {m} arrows")
        for h in hits:
            print(f"  {h}")


if __name__ == "__main__":
    main()
