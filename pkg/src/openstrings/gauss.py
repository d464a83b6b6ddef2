"""Gauss diagrams of open virtual strings.

An open string with ``m`` uncircled double points is a line carrying the
positions ``1..2m``, paired into ``m`` arrows ``(tail, head)``. Circled
(virtual) double points are not recorded, so virtual moves act trivially.
"""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass
from typing import Iterable

from . import moves as _moves
from .moves import HomotopyMove, MoveError

__all__ = [
    "DiagramError",
    "GaussDiagram",
    "HomotopyMove",
    "MoveError",
    "apply_move",
    "concat",
    "enumerate_moves",
    "format_diagram",
    "hat",
    "inverse_move",
    "is_ribbon_presentation",
    "parse_diagram",
    "random_diagram",
    "star",
    "writhe",
]


class DiagramError(ValueError):
    """Invalid Gauss code or arrow set."""


@dataclass(frozen=True)
class GaussDiagram:
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arrows = tuple(tuple(int(x) for x in a) for a in self.arrows)
        seen: set[int] = set()
        n = 2 * len(arrows)
        for t, h in arrows:
            if t == h:
                raise DiagramError(f"arrow {t}>{h} has tail equal to head")
            for p in (t, h):
                if not 1 <= p <= n:
                    raise DiagramError(f"position {p} out of range 1..{n}")
                if p in seen:
                    raise DiagramError(f"duplicate position {p}")
                seen.add(p)
        object.__setattr__(self, "arrows", _moves.canonical(arrows))

    @property
    def m(self) -> int:
        return len(self.arrows)

    arrow_count = m

    @property
    def lines(self) -> tuple[int, ...]:
        return (2 * self.m,)

    def __str__(self) -> str:
        return format_diagram(self)

    def __repr__(self) -> str:
        return f"GaussDiagram({format_diagram(self)!r})"

    def to_json(self) -> dict:
        return {"m": self.m, "arrows": [list(a) for a in self.arrows]}

    @classmethod
    def from_json(cls, doc: dict | str) -> "GaussDiagram":
        if isinstance(doc, str):
            doc = json.loads(doc)
        d = cls(tuple(tuple(a) for a in doc["arrows"]))
        if doc.get("m", d.m) != d.m:
            raise DiagramError(f"m={doc['m']} but {d.m} arrows given")
        return d


def sign(arrow: tuple[int, int]) -> int:
    """Crossing sign of the descending resolution: +1 iff tail precedes head."""
    return 1 if arrow[0] < arrow[1] else -1


_TOKEN = re.compile(r"(\d+)>(\d+)")


def parse_diagram(text: str) -> GaussDiagram:
    text = "".join(text.split())
    if not text:
        return GaussDiagram()
    arrows = []
    for i, tok in enumerate(text.split(",")):
        m = _TOKEN.fullmatch(tok)
        if m is None:
            raise DiagramError(f"malformed token {tok!r} at index {i}")
        arrows.append((int(m.group(1)), int(m.group(2))))
    try:
        return GaussDiagram(tuple(arrows))
    except DiagramError as exc:
        bad = _offending(arrows)
        raise DiagramError(f"{exc} (token {bad[1]!r} at index {bad[0]})") from None


def _offending(arrows):
    n = 2 * len(arrows)
    seen = set()
    for i, (t, h) in enumerate(arrows):
        tok = f"{t}>{h}"
        if t == h:
            return i, tok
        for p in (t, h):
            if not 1 <= p <= n or p in seen:
                return i, tok
            seen.add(p)
    return len(arrows) - 1, ""


def format_diagram(d: GaussDiagram) -> str:
    return ",".join(f"{t}>{h}" for t, h in d.arrows)


def concat(d1: GaussDiagram, d2: GaussDiagram) -> GaussDiagram:
    k = 2 * d1.m
    return GaussDiagram(d1.arrows + tuple((t + k, h + k) for t, h in d2.arrows))


def star(d: GaussDiagram) -> GaussDiagram:
    """Reverse every arrow (the planar reflection of the string)."""
    return GaussDiagram(tuple((h, t) for t, h in d.arrows))


def hat(d: GaussDiagram) -> GaussDiagram:
    """Reflect the line end-to-end and reverse every arrow."""
    r = 2 * d.m + 1
    return GaussDiagram(tuple((r - h, r - t) for t, h in d.arrows))


def is_ribbon_presentation(d: GaussDiagram) -> bool:
    return hat(d) == d


def writhe(d: GaussDiagram) -> int:
    return sum(sign(a) for a in d.arrows)


def enumerate_moves(d: GaussDiagram, include_insertions: bool = True) -> list[HomotopyMove]:
    """All H1/H2 deletions and H3 slides, then (optionally) every insertion."""
    return _moves.enumerate_moves(d.arrows, d.lines, include_insertions)


def insertion_moves(d: GaussDiagram) -> Iterable[HomotopyMove]:
    return _moves.insertions(d.lines)


def apply_move(d: GaussDiagram, mv: HomotopyMove) -> GaussDiagram:
    arrows, _ = _moves.apply_move(d.arrows, d.lines, mv)
    return GaussDiagram(arrows)


def inverse_move(d: GaussDiagram, mv: HomotopyMove) -> HomotopyMove:
    return _moves.inverse_move(d.arrows, d.lines, mv)


def h1_insert(d: GaussDiagram, offset: int, forward: bool = True) -> HomotopyMove:
    return HomotopyMove("H1", "insert", ((0, offset), forward))


def h2_insert(d: GaussDiagram, off1: int, off2: int, crossed: bool, orient: int = 1) -> HomotopyMove:
    return HomotopyMove("H2", "insert", ((0, off1), (0, off2), crossed, orient))


def random_diagram(m: int, seed: int | random.Random) -> GaussDiagram:
    """Uniform random pairing of ``1..2m`` with independent random directions."""
    if m < 0:
        raise ValueError("m must be non-negative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    pts = list(range(1, 2 * m + 1))
    rng.shuffle(pts)
    arrows = []
    for i in range(m):
        a, b = pts[2 * i], pts[2 * i + 1]
        arrows.append((a, b) if rng.random() < 0.5 else (b, a))
    return GaussDiagram(tuple(arrows))


def all_diagrams(m: int) -> Iterable[GaussDiagram]:
    """Every Gauss diagram with exactly ``m`` arrows, each once."""
    def pairings(xs):
        if not xs:
            yield []
            return
        a = xs[0]
        for i in range(1, len(xs)):
            rest = xs[1:i] + xs[i + 1:]
            for p in pairings(rest):
                yield [(a, xs[i])] + p

    for p in pairings(list(range(1, 2 * m + 1))):
        for mask in range(1 << m):
            yield GaussDiagram(tuple((a, b) if mask >> i & 1 else (b, a) for i, (a, b) in enumerate(p)))


def simplify(d: GaussDiagram) -> GaussDiagram:
    """Greedily apply H1/H2 deletions until none applies."""
    while True:
        dels = [mv for mv in enumerate_moves(d, include_insertions=False) if mv.direction == "delete"]
        if not dels:
            return d
        d = apply_move(d, dels[0])
