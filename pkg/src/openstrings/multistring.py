"""Colored open n-strings.

Lines are numbered by their left height ``1..n``. Line ``L`` carries color
``colors[L]`` and leaves at right height ``perm[L]``. Endpoints are stored
with global positions (line 1's slots first, then line 2's, ...), which is
also the traversal order used to build the descending diagram.

Lines are traversed in order of color, and the endpoint reached first is the
over-crossing. Indices have length ``n + 1``: a shared ``u`` first, then one
``v`` per color. A crossing shifts by ``u`` and by the ``v`` of the color of
its under strand. The left end generator of the line colored ``c`` is named
``a{c}``.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from typing import Sequence

from . import moves as _moves
from .gauss import DiagramError, GaussDiagram
from .moves import HomotopyMove
from .words import Letter, Word, format_word, invert, parse_word, product, shift, substitute


class ColorMismatch(ValueError):
    def __init__(self, height: int, left: int, right: int):
        super().__init__(f"color mismatch at height {height}: {left} arrives, {right} departs")
        self.height = height


@dataclass(frozen=True)
class ColoredGaussDiagram:
    colors: tuple[int, ...]
    perm: tuple[int, ...]
    lines: tuple[int, ...]
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        n = len(self.colors)
        if len(self.perm) != n or len(self.lines) != n:
            raise DiagramError("colors, perm and lines must have one entry per line")
        if sorted(self.perm) != list(range(1, n + 1)):
            raise DiagramError(f"perm {self.perm} is not a permutation of 1..{n}")
        if sorted(self.colors) != list(range(1, n + 1)):
            raise DiagramError(f"colors {self.colors} must label the {n} lines with 1..{n}")
        if any(k < 0 for k in self.lines):
            raise DiagramError("line lengths must be non-negative")
        total = sum(self.lines)
        ends = sorted(p for a in self.arrows for p in a)
        if ends != list(range(1, total + 1)):
            raise DiagramError("arrow endpoints must use every slot exactly once")
        if any(t == h for t, h in self.arrows):
            raise DiagramError("arrow with tail equal to head")
        object.__setattr__(self, "arrows", _moves.canonical(self.arrows))
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def m(self) -> int:
        return len(self.arrows)

    @classmethod
    def trivial(cls, colors: Sequence[int], perm: Sequence[int] | None = None) -> "ColoredGaussDiagram":
        n = len(colors)
        return cls(tuple(colors), tuple(perm or range(1, n + 1)), (0,) * n, ())

    @classmethod
    def from_gauss(cls, d: GaussDiagram, color: int = 1) -> "ColoredGaussDiagram":
        return cls((color,), (1,), (2 * d.m,), d.arrows)

    def endpoint(self, p: int) -> tuple[int, int]:
        """Global position -> (line, slot), both 1-based."""
        L, slot = _moves.Layout(self.lines).local(p)
        return L + 1, slot

    def global_position(self, line: int, slot: int) -> int:
        if not 1 <= line <= self.n or not 1 <= slot <= self.lines[line - 1]:
            raise DiagramError(f"no slot L{line}.{slot}")
        return sum(self.lines[: line - 1]) + slot

    def __str__(self) -> str:
        return format_colored(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "colors": list(self.colors),
            "perm": list(self.perm),
            "lines": list(self.lines),
            "arrows": [[list(self.endpoint(t)), list(self.endpoint(h))] for t, h in self.arrows],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "ColoredGaussDiagram":
        lines = tuple(doc["lines"])
        starts = list(itertools.accumulate((0,) + lines[:-1]))
        arrows = tuple((starts[t[0] - 1] + t[1], starts[h[0] - 1] + h[1]) for t, h in doc["arrows"])
        return cls(tuple(doc["colors"]), tuple(doc["perm"]), lines, arrows)


_HEADER = re.compile(r"n=(\d+);colors=([\d,]*);perm=([\d,]*);(.*)")
_ARROW = re.compile(r"L(\d+)\.(\d+)>L(\d+)\.(\d+)")


def parse_colored(text: str) -> ColoredGaussDiagram:
    """Parse ``n=2; colors=1,2; perm=2,1; L1.1 > L2.1, L2.2 > L1.2``."""
    m = _HEADER.fullmatch("".join(text.split()))
    if m is None:
        raise DiagramError(f"malformed colored Gauss code header in {text!r}")
    n = int(m.group(1))
    colors = tuple(int(x) for x in m.group(2).split(",") if x)
    perm = tuple(int(x) for x in m.group(3).split(",") if x)
    if len(colors) != n or len(perm) != n:
        raise DiagramError(f"header lists {len(colors)} colors and {len(perm)} perm entries for n={n}")
    refs = []
    body = m.group(4).rstrip(";")
    for i, tok in enumerate(t for t in body.split(",") if t):
        a = _ARROW.fullmatch(tok)
        if a is None:
            raise DiagramError(f"malformed arrow {tok!r} at index {i}")
        lt, st, lh, sh = map(int, a.groups())
        for line in (lt, lh):
            if not 1 <= line <= n:
                raise DiagramError(f"line {line} out of range in {tok!r} at index {i}")
        refs.append(((lt, st), (lh, sh)))
    slots: dict[int, list[int]] = {L: [] for L in range(1, n + 1)}
    for ref in refs:
        for line, slot in ref:
            slots[line].append(slot)
    lines = []
    for L in range(1, n + 1):
        got = sorted(slots[L])
        if got != list(range(1, len(got) + 1)):
            raise DiagramError(f"slots on line {L} must be 1..{len(got)}, got {got}")
        lines.append(len(got))
    starts = list(itertools.accumulate([0] + lines[:-1]))
    arrows = tuple((starts[t[0] - 1] + t[1], starts[h[0] - 1] + h[1]) for t, h in refs)
    return ColoredGaussDiagram(colors, perm, tuple(lines), arrows)


def format_colored(d: ColoredGaussDiagram) -> str:
    head = f"n={d.n}; colors={','.join(map(str, d.colors))}; perm={','.join(map(str, d.perm))};"
    body = ", ".join(
        "L{}.{} > L{}.{}".format(*d.endpoint(t), *d.endpoint(h)) for t, h in d.arrows
    )
    return f"{head} {body}" if body else head


# -- the invariant ------------------------------------------------------------

def crossing_shifts(over_color: int, under_color: int, s: int, dim: int):
    """Index shifts for one crossing: ``(over_out, under_b, under_a)``.

    ``u`` is shared; ``v`` is the one of the under strand's color. For
    ``s = +1`` the under output is ``shift(B, under_b)^-1 * shift(A, under_a) * B``,
    for ``s = -1`` it is ``B * shift(A, under_a) * shift(B, under_b)^-1``.
    """
    over = [0] * dim
    over[under_color] = -s
    a = [0] * dim
    a[0] = -s
    b = list(over)
    b[0] = -s
    return tuple(over), tuple(b), tuple(a)


@dataclass(frozen=True)
class MultiInvariant:
    """One word per line (by left height), plus the permutation and colors."""

    perm: tuple[int, ...]
    colors: tuple[int, ...]
    words: tuple[Word, ...]

    @property
    def n(self) -> int:
        return len(self.perm)

    def word_for_color(self, c: int) -> Word:
        return self.words[self.colors.index(c)]

    def __str__(self) -> str:
        ws = " | ".join(format_word(w) for w in self.words)
        return f"perm={','.join(map(str, self.perm))}; {ws}"

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "colors": list(self.colors),
                "words": [format_word(w) for w in self.words]}

    @classmethod
    def from_json(cls, doc: dict) -> "MultiInvariant":
        dim = len(doc["perm"]) + 1
        return cls(tuple(doc["perm"]), tuple(doc["colors"]),
                   tuple(parse_word(w, dim) for w in doc["words"]))


def generator(color: int, n: int) -> Word:
    return Word.generator(f"a{color}", (0,) * (n + 1))


def traversal_order(d: ColoredGaussDiagram) -> list[int]:
    """Lines (0-based) in the order the descending diagram visits them: by color."""
    return sorted(range(d.n), key=lambda L: d.colors[L])


def phi_multi(d: ColoredGaussDiagram, rule=crossing_shifts) -> MultiInvariant:
    """Sweep the lines in color order; ``rule`` maps a crossing to its index shifts."""
    dim = d.n + 1
    layout = _moves.Layout(d.lines)
    order = traversal_order(d)
    rank = {}
    for L in order:
        for p in range(layout.starts[L] + 1, layout.starts[L] + d.lines[L] + 1):
            rank[p] = len(rank)
    table = {}
    for k, (t, h) in enumerate(d.arrows):
        # the endpoint visited first is the over-crossing
        s = 1 if rank[t] < rank[h] else -1
        over, under = (t, h) if s > 0 else (h, t)
        shifts = rule(d.colors[layout.line_of[over]], d.colors[layout.line_of[under]], s, dim)
        table[over] = (True, k, shifts)
        table[under] = (False, k, (s,) + shifts)
    words: dict[int, Word] = {}
    entering_over: dict[int, Word] = {}
    for L in order:
        current = generator(d.colors[L], d.n)
        start = layout.starts[L]
        for p in range(start + 1, start + d.lines[L] + 1):
            is_over, k, entry = table[p]
            if is_over:
                entering_over[k] = current
                current = shift(current, entry[0])
            else:
                s, _, b_shift, a_shift = entry
                b = entering_over.pop(k)
                if s > 0:
                    current = product((invert(shift(b, b_shift)), shift(current, a_shift), b), dim)
                else:
                    current = product((b, shift(current, a_shift), invert(shift(b, b_shift))), dim)
        words[L] = current
    return MultiInvariant(d.perm, d.colors, tuple(words[L] for L in range(d.n)))


def check_colors(left_perm, left_colors, right_colors) -> None:
    n = len(left_perm)
    if len(right_colors) != n:
        raise ValueError(f"cannot join a {n}-string to a {len(right_colors)}-string")
    arriving = {left_perm[L]: left_colors[L] for L in range(n)}
    for j in range(1, n + 1):
        if arriving[j] != right_colors[j - 1]:
            raise ColorMismatch(j, arriving[j], right_colors[j - 1])


def compose_multi(i1: MultiInvariant, i2: MultiInvariant) -> MultiInvariant:
    """Invariant of ``alpha1 . alpha2`` from the invariants of the factors."""
    check_colors(i1.perm, i1.colors, i2.colors)
    n = i1.n
    images = {f"a{c}": i1.word_for_color(c) for c in i1.colors}
    words = []
    perm = []
    for L in range(n):
        j = i1.perm[L]
        words.append(substitute(i2.words[j - 1], images, n + 1))
        perm.append(i2.perm[j - 1])
    return MultiInvariant(tuple(perm), i1.colors, tuple(words))


def concat_multi(d1: ColoredGaussDiagram, d2: ColoredGaussDiagram) -> ColoredGaussDiagram:
    check_colors(d1.perm, d1.colors, d2.colors)
    n = d1.n
    lay1, lay2 = _moves.Layout(d1.lines), _moves.Layout(d2.lines)
    new_lines = []
    remap1: dict[int, int] = {}
    remap2: dict[int, int] = {}
    g = 0
    for L in range(n):
        for p in range(lay1.starts[L] + 1, lay1.starts[L] + d1.lines[L] + 1):
            g += 1
            remap1[p] = g
        k = d1.perm[L] - 1
        for p in range(lay2.starts[k] + 1, lay2.starts[k] + d2.lines[k] + 1):
            g += 1
            remap2[p] = g
        new_lines.append(d1.lines[L] + d2.lines[k])
    arrows = tuple((remap1[t], remap1[h]) for t, h in d1.arrows) + tuple(
        (remap2[t], remap2[h]) for t, h in d2.arrows
    )
    perm = tuple(d2.perm[d1.perm[L] - 1] for L in range(n))
    return ColoredGaussDiagram(d1.colors, perm, tuple(new_lines), arrows)


def specialize(inv: MultiInvariant) -> Word:
    """Rename ``a1`` with index ``(j, k)`` (``u^j v1^k``) to the single-string letter ``a[j,k]``."""
    if inv.n != 1:
        raise ValueError("only 1-strings specialize")
    return Word(tuple(Letter("a", x.index, x.sign) for x in inv.words[0].letters), 2)


def enumerate_moves(d: ColoredGaussDiagram, include_insertions: bool = True) -> list[HomotopyMove]:
    return _moves.enumerate_moves(d.arrows, d.lines, include_insertions)


def apply_move(d: ColoredGaussDiagram, mv: HomotopyMove) -> ColoredGaussDiagram:
    arrows, lines = _moves.apply_move(d.arrows, d.lines, mv)
    return ColoredGaussDiagram(d.colors, d.perm, lines, arrows)


def inverse_move(d: ColoredGaussDiagram, mv: HomotopyMove) -> HomotopyMove:
    return _moves.inverse_move(d.arrows, d.lines, mv)


def random_colored(n: int, m: int, seed, colors=None, perm=None) -> ColoredGaussDiagram:
    """Random colored diagram: random slot split across lines, pairing and directions."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    total = 2 * m
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    lines = tuple(b - a for a, b in zip([0] + cuts, cuts + [total]))
    pts = list(range(1, total + 1))
    rng.shuffle(pts)
    arrows = []
    for i in range(m):
        a, b = pts[2 * i], pts[2 * i + 1]
        arrows.append((a, b) if rng.random() < 0.5 else (b, a))
    if colors is None:
        colors = list(range(1, n + 1))
        rng.shuffle(colors)
    if perm is None:
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
    return ColoredGaussDiagram(tuple(colors), tuple(perm), lines, tuple(arrows))
