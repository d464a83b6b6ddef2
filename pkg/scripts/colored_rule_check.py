"""Which variable placements make the colored invariant survive the moves.

Plants random slidable triangles (and bigons) on random colored diagrams and
counts how often each candidate rule changes the invariant.

    python scripts/colored_rule_check.py --trials 500
"""
from __future__ import annotations

import argparse
import random

from openstrings import moves
from openstrings.multistring import ColoredGaussDiagram, apply_move, crossing_shifts, phi_multi, random_colored


def _vec(dim, entries):
    out = [0] * dim
    for i, x in entries:
        out[i] += x
    return tuple(out)


# indices (u1..un, v): v is the last slot
def u_of_over(oc, uc, s, dim):
    return _vec(dim, [(dim - 1, -s)]), _vec(dim, [(oc - 1, -s), (dim - 1, -s)]), _vec(dim, [(oc - 1, -s)])


def u_of_under(oc, uc, s, dim):
    return _vec(dim, [(dim - 1, -s)]), _vec(dim, [(uc - 1, -s), (dim - 1, -s)]), _vec(dim, [(uc - 1, -s)])


# indices (u, v1..vn): u is slot 0
def v_of_over(oc, uc, s, dim):
    return _vec(dim, [(oc, -s)]), _vec(dim, [(0, -s), (oc, -s)]), _vec(dim, [(0, -s)])


RULES = {
    "u per over color, shared v": u_of_over,
    "u per under color, shared v": u_of_under,
    "shared u, v per over color": v_of_over,
    "shared u, v per under color (adopted)": crossing_shifts,
}


def trial(rng: random.Random):
    d = random_colored(rng.randint(2, 4), rng.randint(0, 3), rng)
    layout = moves.Layout(d.lines)
    gaps = [rng.choice(list(layout.gaps())) for _ in range(3)]
    arrows, lines, mv = moves.plant_triangle(d.arrows, d.lines, gaps, rng.choice(sorted(moves.TRIANGLES)))
    e = ColoredGaussDiagram(d.colors, d.perm, lines, arrows)
    g1, g2 = sorted(rng.choice(list(layout.gaps())) for _ in range(2))
    bigon = moves.HomotopyMove("H2", "insert", (g1, g2, rng.random() < 0.5, rng.choice((1, -1))))
    return (e, apply_move(e, mv)), (d, apply_move(d, bigon))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    cases = [trial(rng) for _ in range(args.trials)]
    print(f"{'rule':<40} {'H3 changed':>10} {'H2 changed':>10}")
    for name, rule in RULES.items():
        h3 = sum(phi_multi(a, rule) != phi_multi(b, rule) for (a, b), _ in cases)
        h2 = sum(phi_multi(a, rule) != phi_multi(b, rule) for _, (a, b) in cases)
        print(f"{name:<40} {h3:>10} {h2:>10}")


if __name__ == "__main__":
    main()
