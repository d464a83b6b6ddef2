"""One check per acceptance criterion; each prints a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) for the lines alone, or
under pytest, where they are repeated in the terminal summary.
"""
from __future__ import annotations

import io
import itertools
import json
import random
import sys
from collections import Counter
from contextlib import redirect_stdout
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import (  # noqa: E402
    ALPHA1,
    ALPHA1_WORD,
    ALPHA2,
    ALPHA2_WORD,
    ALPHA3,
    ALPHA3_WORD,
    ASYM,
    SQUARE_BASE,
    record_acceptance,
)
from openstrings import moves  # noqa: E402
from openstrings.checks import unit_values  # noqa: E402
from openstrings.cli import main  # noqa: E402
from openstrings.gauss import (  # noqa: E402
    GaussDiagram,
    apply_move,
    concat,
    insertion_moves,
    parse_diagram,
    random_diagram,
    simplify,
    star,
)
from openstrings.invariant import (  # noqa: E402
    commute_check,
    compose,
    path_products,
    phi,
    phi_poly,
    ribbon_obstruction_abelian,
)
from openstrings.laurent import LaurentPolynomial, parse_polynomial, swap_uv  # noqa: E402
from openstrings.multistring import (  # noqa: E402
    ColoredGaussDiagram,
    ColorMismatch,
    compose_multi,
    phi_multi,
    specialize,
)
from openstrings.words import abelianize, star_word  # noqa: E402

U = LaurentPolynomial.var(0)
V = LaurentPolynomial.var(1)
ONE = LaurentPolynomial.one()


def _cli(*argv) -> tuple[int, str]:
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def criterion_1():
    got = (str(phi(ALPHA1)), str(phi(ALPHA2)))
    return got == (ALPHA1_WORD, ALPHA2_WORD), f"phi(alpha1) = {got[0]}; phi(alpha2) = {got[1]}"


def criterion_2():
    p1, p2 = phi(ALPHA1), phi(ALPHA2)
    w12, w21 = compose(p1, p2), compose(p2, p1)
    ok = w12 != w21 and w12 == phi(concat(ALPHA1, ALPHA2)) and w21 == phi(concat(ALPHA2, ALPHA1))
    return ok, f"composites differ; lengths {len(w12.word)} and {len(w21.word)}; both match the direct sweep"


def criterion_3():
    target = U + V - U ** 2 * V - U * V ** 2 + U ** 2 * V ** 2
    p = phi_poly(ALPHA2)
    ok = abelianize(phi(ALPHA2).word) == p == target and swap_uv(p) == p
    return ok, f"phi(alpha2) = {p}, swap-symmetric"


def criterion_4():
    ok = star_word(phi(ALPHA1).word) == phi(star(ALPHA1)).word
    rng = random.Random(4)
    bad = 0
    for _ in range(1000):
        d = random_diagram(rng.randint(0, 6), rng)
        bad += phi(star(d)).word != star_word(phi(d).word)
    return ok and bad == 0, f"alpha1 holds; {bad} exceptions in 1000 random diagrams"


def criterion_5():
    reference = [
        V * V * U * V ** -1 * U * U ** -1,
        (ONE - U * V) * V ** -1 * U * U ** -1,
        V * (ONE - U * V) * U ** -1,
        V * V * U * (ONE - U ** -1 * V ** -1),
        (ONE - U * V) * (ONE - U ** -1 * V ** -1),
    ]
    paths = path_products(ASYM)
    p = phi_poly(ASYM)
    code, out = _cli("ribbon", "3>1,5>2,4>6")
    reference_total = parse_polynomial("u*v^2 - v^2 - u - v + u^-1*v - v^-1")
    ok = (
        len(paths) == 5
        and Counter(paths) == Counter(reference)
        and p == abelianize(phi(ASYM).word) == sum(reference, LaurentPolynomial.zero())
        and swap_uv(p) != p
        and out.startswith("FAIL (abelian)")
        and unit_values(p) == (1, LaurentPolynomial.one(1))
        and unit_values(reference_total)[0] != 1
        and p != reference_total
    )
    return ok, f"5 paths match the reference products; phi = {p}; ribbon -> {out.splitlines()[0]}"


def criterion_6():
    word_ok = str(phi(ALPHA3)) == ALPHA3_WORD
    distinct = not commute_check(ALPHA2, ALPHA3)
    p = phi_poly(SQUARE_BASE)
    poly_ok = p == parse_polynomial("-u*v^3 - u^3*v^2 + u^3*v^3 + u + v^2")
    q = phi_poly(concat(SQUARE_BASE, star(SQUARE_BASE)))
    inv = LaurentPolynomial({tuple(-x for x in e): c for e, c in p.terms.items()})
    square_ok = q == p * inv and swap_uv(q) != q
    ok = word_ok and distinct and poly_ok and square_ok
    return ok, (
        f"alpha3 = {ALPHA3} gives the reference word: {word_ok}; DISTINCT: {distinct}; "
        f"square base = {SQUARE_BASE} polynomial: {poly_ok}; beta asymmetric: {square_ok}"
    )


def criterion_7():
    code, out = _cli("verify", "--count", "1000", "--max-arrows", "6", "--seed", "7", "--json")
    doc = json.loads(out)
    omega = doc["omega_differs_from_writhe"]
    ok = code == 0 and doc["ok"] and omega == 0
    return ok, (
        f"checks a-g with the normal-form shape: {len(doc['failures'])} failures; "
        f"(e) as stated, omega = writhe: fails on {omega} of 1000 "
        f"(omega is a homotopy invariant, the writhe is not: the kink 1>2 has writhe 1, omega 0)"
    )


def criterion_8():
    cases = [parse_diagram(c) for c in ("1>2", "1>3,4>2", "1>4,3>2")] + [GaussDiagram()]
    ok = all(phi(d).is_identity() for d in cases)
    rng = random.Random(8)
    reduced = 0
    for _ in range(300):
        # grow from the empty diagram by random insertions and slides, then reduce greedily
        d = GaussDiagram()
        for _ in range(rng.randint(1, 4)):
            d = apply_move(d, rng.choice(list(insertion_moves(d))))
            slides = [mv for mv in moves.deletions_and_slides(d.arrows, d.lines) if mv.kind == "H3"]
            if slides:
                d = apply_move(d, rng.choice(slides))
        ok &= phi(d).is_identity()
        if simplify(d) == GaussDiagram():
            reduced += 1
    for seed in range(2000):
        d = random_diagram(seed % 7, seed)
        if simplify(d) == GaussDiagram():
            reduced += 1
            ok &= phi(d).is_identity()
    return ok, f"4 listed diagrams trivial; {reduced} engine-reducible diagrams all trivial"


def criterion_9():
    rng = random.Random(9)
    spec_ok = all(
        specialize(phi_multi(ColoredGaussDiagram.from_gauss(d))) == phi(d).word
        for d in (random_diagram(rng.randint(0, 6), rng) for _ in range(200))
    )
    # 2 lines: a swap followed by a swap back
    swap = phi_multi(ColoredGaussDiagram.trivial((1, 2), (2, 1)))
    two_ok = compose_multi(swap, phi_multi(ColoredGaussDiagram.trivial((2, 1), (2, 1)))).perm == (1, 2)
    try:
        compose_multi(swap, phi_multi(ColoredGaussDiagram.trivial((1, 2))))
        two_ok = False
    except ColorMismatch as exc:
        two_ok &= exc.height == 1
    # 3 lines: of the six colorings of the right factor exactly the matching one composes
    left = ColoredGaussDiagram((3, 1, 2), (2, 3, 1), (2, 2, 2), ((1, 3), (4, 6), (5, 2)))
    accepted = []
    for colors in itertools.permutations((1, 2, 3)):
        right = ColoredGaussDiagram(colors, (3, 1, 2), (2, 0, 0), ((2, 1),))
        try:
            out = compose_multi(phi_multi(left), phi_multi(right))
        except ColorMismatch:
            continue
        accepted.append(colors)
        three_perm = out.perm
    three_ok = accepted == [(2, 3, 1)] and three_perm == (1, 2, 3)
    ok = spec_ok and two_ok and three_ok
    return ok, f"200 specializations agree: {spec_ok}; 2-line: {two_ok}; 3-line accepted {accepted}"


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 10)}
KNOWN_UNATTAINABLE = {7}


def _line(i: int) -> tuple[bool, str]:
    ok, detail = CRITERIA[i]()
    line = f"criterion {i}: {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    record_acceptance(line)
    return ok, line


@pytest.mark.parametrize("i", [i for i in CRITERIA if i not in KNOWN_UNATTAINABLE])
def test_criterion(i):
    ok, line = _line(i)
    assert ok, line


@pytest.mark.xfail(strict=True, reason="omega = writhe contradicts H1 invariance; see the decisions ledger")
def test_criterion_7_as_stated():
    ok, line = _line(7)
    assert ok, line


def test_criterion_7_attainable_parts():
    code, out = _cli("verify", "--count", "1000", "--max-arrows", "6", "--seed", "7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failures"] == []


if __name__ == "__main__":
    results = [_line(i)[0] for i in CRITERIA]
    sys.exit(0 if all(results) else 1)
