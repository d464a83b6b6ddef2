"""Shared diagrams and strategies."""
from __future__ import annotations

from hypothesis import strategies as st

from openstrings.gauss import GaussDiagram, parse_diagram

ALPHA1 = parse_diagram("1>3,2>4")
ALPHA2 = parse_diagram("3>1,4>2")
# recovered from its word by scripts/recover_diagrams.py
ALPHA3 = parse_diagram("3>1,5>2,6>4")
# recovered from its polynomial by scripts/recover_diagrams.py
SQUARE_BASE = parse_diagram("5>1,4>2,6>3")
# reproduces the five reference path products
ASYM = parse_diagram("3>1,5>2,4>6")

ALPHA1_WORD = "A[-1,-2] A[-2,-1] a[-2,-2] a[-1,0] a[0,-1]"
ALPHA2_WORD = "a[0,1] a[1,0] a[2,2] A[2,1] A[1,2]"
ALPHA3_WORD = "a[0,0] a[1,2] a[2,1] a[3,3] A[3,2] A[2,3] A[1,1]"


@st.composite
def diagrams(draw, max_arrows: int = 5) -> GaussDiagram:
    m = draw(st.integers(0, max_arrows))
    order = draw(st.permutations(range(1, 2 * m + 1)))
    flips = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    arrows = []
    for i, flip in enumerate(flips):
        a, b = order[2 * i], order[2 * i + 1]
        arrows.append((b, a) if flip else (a, b))
    return GaussDiagram(tuple(arrows))


_ACCEPTANCE_LINES: list[str] = []


def record_acceptance(line: str) -> None:
    _ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
