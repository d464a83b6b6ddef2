"""Homotopy moves on Gauss diagrams drawn on one or more ordered lines.

Diagrams are handled here in a raw form: ``arrows`` is a tuple of
``(tail, head)`` global positions and ``lines`` is the tuple of line
lengths. Line ``L`` owns the global positions ``start(L)+1 .. start(L)+lines[L]``.
A gap is ``(line, offset)`` with ``0 <= offset <= lines[line]``; inserted
endpoints land right after the first ``offset`` endpoints of that line.

H1 removes an arrow with adjacent endpoints. H2 removes two arrows spanning
two adjacent position pairs in opposite senses (the bigon move). H3 swaps the
endpoints inside three adjacent pairs joined by a triangle of arrows; only the
local patterns that arise from an actual triangle of three oriented strands
are slides (see ``TRIANGLES``).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

Arrow = tuple[int, int]
Gap = tuple[int, int]


class MoveError(ValueError):
    pass


@dataclass(frozen=True)
class HomotopyMove:
    """One move. ``site`` depends on the kind and direction.

    delete / slide: the arrows involved, as ``(tail, head)`` pairs.
    H1 insert: ``(gap, forward)``; forward arrows point right.
    H2 insert: ``(gap1, gap2, crossed, orient)`` with ``gap1 <= gap2``. The two
    new pairs are ``P1 = (p, p+1)`` and ``P2 = (q, q+1)``; crossed arrows join
    ``p-q`` and ``(p+1)-(q+1)``, nested ones ``p-(q+1)`` and ``(p+1)-q``. With
    ``orient=+1`` the arrow leaving ``p`` points into ``P2``.
    """

    kind: str
    direction: str
    site: tuple

    def __str__(self) -> str:
        if self.direction == "insert":
            return f"{self.kind}-insert {self.site}"
        arrows = ",".join(f"{t}>{h}" for t, h in self.site)
        return f"{self.kind}-{self.direction} {arrows}"


def _triangle_patterns() -> frozenset[tuple[Arrow, ...]]:
    # Three oriented strands bounding a triangle, strand i owning positions
    # 2i+1, 2i+2. s[i][j] = +1 when strand i crosses strand j left to right
    # (arrow i -> j). L[k] = +1 when the triangle lies left of strand k.
    # Triangle geometry forces s_ij * L_i * L_j = sigma for cyclic (i, j), and
    # strand i meets j before k exactly when L_k * s_ik = +1.
    out = set()
    for s01, s12, s02 in itertools.product((1, -1), repeat=3):
        table = {(0, 1): s01, (1, 2): s12, (0, 2): s02}

        def s(i, j):
            return table[(i, j)] if i < j else -table[(j, i)]

        sigma = s(0, 1) * s(1, 2) * s(2, 0)
        for l0 in (1, -1):
            L = [l0, 0, 0]
            L[1] = sigma * s(0, 1) * L[0]
            L[2] = sigma * s(1, 2) * L[1]
            pos = {}
            for i in range(3):
                j, k = [x for x in range(3) if x != i]
                first, second = (j, k) if L[k] * s(i, k) == 1 else (k, j)
                pos[i, first] = 2 * i + 1
                pos[i, second] = 2 * i + 2
            arrows = []
            for i, j in ((0, 1), (0, 2), (1, 2)):
                a, b = pos[i, j], pos[j, i]
                arrows.append((a, b) if s(i, j) == 1 else (b, a))
            out.add(tuple(sorted(arrows, key=min)))
    return frozenset(out)


TRIANGLES = _triangle_patterns()


class Layout:
    """Global numbering of endpoints split into consecutive lines."""

    def __init__(self, lines: Sequence[int]):
        self.lines = tuple(lines)
        self.starts = tuple(itertools.accumulate((0,) + self.lines[:-1]))
        self.line_of: dict[int, int] = {}
        for L, (s, n) in enumerate(zip(self.starts, self.lines)):
            for p in range(s + 1, s + n + 1):
                self.line_of[p] = L

    @property
    def size(self) -> int:
        return sum(self.lines)

    def adjacent(self, p: int) -> bool:
        """Are ``p`` and ``p + 1`` on the same line?"""
        return self.line_of.get(p) is not None and self.line_of.get(p) == self.line_of.get(p + 1)

    def local(self, p: int) -> tuple[int, int]:
        L = self.line_of[p]
        return L, p - self.starts[L]

    def gaps(self) -> Iterator[Gap]:
        for L, n in enumerate(self.lines):
            for off in range(n + 1):
                yield (L, off)


def canonical(arrows) -> tuple[Arrow, ...]:
    return tuple(sorted((tuple(a) for a in arrows), key=min))


def _relabel(points: Sequence[int]) -> dict[int, int]:
    return {p: i + 1 for i, p in enumerate(sorted(points))}


# -- detection ---------------------------------------------------------------

def _h1_deletions(arrows, layout):
    for a in arrows:
        lo = min(a)
        if max(a) == lo + 1 and layout.adjacent(lo):
            yield HomotopyMove("H1", "delete", (a,))


def _pairs_of(points, layout):
    e = sorted(points)
    pairs = [(e[i], e[i + 1]) for i in range(0, len(e), 2)]
    if all(b == a + 1 and layout.adjacent(a) for a, b in pairs):
        return pairs
    return None


def _is_h2(x, y, layout) -> bool:
    pairs = _pairs_of(x + y, layout)
    if pairs is None:
        return False
    p1 = set(pairs[0])
    for a in (x, y):
        if (a[0] in p1) == (a[1] in p1):
            return False
    # opposite senses: exactly one of the arrows has its tail in the first pair
    return (x[0] in p1) != (y[0] in p1)


def _is_h3(trio, layout) -> bool:
    points = [p for a in trio for p in a]
    if _pairs_of(points, layout) is None:
        return False
    rel = _relabel(points)
    return canonical((rel[t], rel[h]) for t, h in trio) in TRIANGLES


def deletions_and_slides(arrows, lines) -> list[HomotopyMove]:
    layout = Layout(lines)
    arrows = canonical(arrows)
    moves = list(_h1_deletions(arrows, layout))
    # only arrows with a neighbour-adjacent endpoint can take part in H2/H3
    paired = {p for p in layout.line_of if layout.adjacent(p)} | {p + 1 for p in layout.line_of if layout.adjacent(p)}
    cand = [a for a in arrows if a[0] in paired and a[1] in paired]
    for x, y in itertools.combinations(cand, 2):
        if _is_h2(x, y, layout):
            moves.append(HomotopyMove("H2", "delete", (x, y)))
    for trio in itertools.combinations(cand, 3):
        if _is_h3(trio, layout):
            moves.append(HomotopyMove("H3", "slide", trio))
    return moves


def insertions(lines) -> Iterator[HomotopyMove]:
    layout = Layout(lines)
    gaps = list(layout.gaps())
    for g in gaps:
        for forward in (True, False):
            yield HomotopyMove("H1", "insert", (g, forward))
    for i, g1 in enumerate(gaps):
        for g2 in gaps[i:]:
            for crossed in (True, False):
                for orient in (1, -1):
                    yield HomotopyMove("H2", "insert", (g1, g2, crossed, orient))


def enumerate_moves(arrows, lines, include_insertions: bool = True) -> list[HomotopyMove]:
    moves = deletions_and_slides(arrows, lines)
    if include_insertions:
        moves.extend(insertions(lines))
    return moves


# -- application --------------------------------------------------------------

def _delete(arrows, lines, doomed: Sequence[Arrow]):
    layout = Layout(lines)
    gone = sorted(p for a in doomed for p in a)
    new_lines = list(lines)
    for p in gone:
        new_lines[layout.line_of[p]] -= 1

    def renum(p):
        return p - sum(1 for g in gone if g < p)

    doomed = set(doomed)
    rest = [(renum(t), renum(h)) for t, h in arrows if (t, h) not in doomed]
    return canonical(rest), tuple(new_lines)


def _insert(arrows, lines, blocks: Sequence[tuple[Gap, int]]):
    """Insert ``count`` fresh endpoints at each gap; return new positions per block.

    Blocks sharing a gap are placed in the order given.
    """
    layout = Layout(lines)
    for (L, off), _ in blocks:
        if not (0 <= L < len(lines) and 0 <= off <= lines[L]):
            raise MoveError(f"gap {(L, off)} does not exist")
    seq: list[list] = []
    for L, n in enumerate(lines):
        row: list = []
        for off in range(n + 1):
            for b, ((bl, boff), count) in enumerate(blocks):
                if (bl, boff) == (L, off):
                    row.extend(("new", b, k) for k in range(count))
            if off < n:
                row.append(("old", layout.starts[L] + off + 1))
        seq.append(row)
    old_map: dict[int, int] = {}
    fresh: dict[int, list[int]] = {b: [] for b in range(len(blocks))}
    g = 0
    for row in seq:
        for tok in row:
            g += 1
            if tok[0] == "old":
                old_map[tok[1]] = g
            else:
                fresh[tok[1]].append(g)
    moved = [(old_map[t], old_map[h]) for t, h in arrows]
    new_lines = tuple(len(r) for r in seq)
    return moved, new_lines, [fresh[b] for b in range(len(blocks))]


def apply_move(arrows, lines, mv: HomotopyMove):
    """Return ``(arrows, lines)`` after ``mv``; raises MoveError if it does not apply."""
    arrows = canonical(arrows)
    lines = tuple(lines)
    layout = Layout(lines)
    present = set(arrows)
    if mv.direction in ("delete", "slide"):
        site = tuple(tuple(a) for a in mv.site)
        if not all(a in present for a in site):
            raise MoveError(f"{mv}: arrows not present in diagram")
        ok = {
            ("H1", "delete"): lambda: len(site) == 1 and any(True for _ in _h1_deletions(site, layout)),
            ("H2", "delete"): lambda: len(site) == 2 and _is_h2(site[0], site[1], layout),
            ("H3", "slide"): lambda: len(site) == 3 and _is_h3(site, layout),
        }.get((mv.kind, mv.direction))
        if ok is None or not ok():
            raise MoveError(f"{mv} is not applicable")
        if mv.direction == "delete":
            return _delete(arrows, lines, site)
        swap = {}
        for a, b in _pairs_of([p for a in site for p in a], layout):
            swap[a], swap[b] = b, a
        out = [(swap.get(t, t), swap.get(h, h)) for t, h in arrows]
        return canonical(out), lines
    if mv.direction != "insert":
        raise MoveError(f"unknown move direction {mv.direction!r}")
    if mv.kind == "H1":
        gap, forward = mv.site
        moved, new_lines, (fresh,) = _insert(arrows, lines, [(tuple(gap), 2)])
        p, q = fresh
        moved.append((p, q) if forward else (q, p))
        return canonical(moved), new_lines
    if mv.kind == "H2":
        g1, g2, crossed, orient = mv.site
        g1, g2 = tuple(g1), tuple(g2)
        if g2 < g1:
            raise MoveError(f"{mv}: gaps out of order")
        if orient not in (1, -1):
            raise MoveError(f"{mv}: orient must be +1 or -1")
        moved, new_lines, (b1, b2) = _insert(arrows, lines, [(g1, 2), (g2, 2)])
        p, p1 = b1
        q, q1 = b2
        x, y = ((p, q), (p1, q1)) if crossed else ((p, q1), (p1, q))
        if orient == 1:
            moved += [x, (y[1], y[0])]
        else:
            moved += [(x[1], x[0]), y]
        return canonical(moved), new_lines
    raise MoveError(f"{mv.kind} has no insert form")


def inverse_move(arrows, lines, mv: HomotopyMove) -> HomotopyMove:
    """The move that undoes ``mv``, expressed on the diagram ``mv`` produces."""
    lines = tuple(lines)
    layout = Layout(lines)
    if mv.direction == "slide":
        swap = {}
        for a, b in _pairs_of([p for a in mv.site for p in a], layout):
            swap[a], swap[b] = b, a
        return HomotopyMove("H3", "slide", canonical((swap[t], swap[h]) for t, h in mv.site))
    if mv.direction == "delete" and mv.kind == "H1":
        (t, h), = mv.site
        L, off = layout.local(min(t, h))
        return HomotopyMove("H1", "insert", ((L, off - 1), t < h))
    if mv.direction == "delete" and mv.kind == "H2":
        x, y = mv.site
        (i, _), (j, _) = _pairs_of(x + y, layout)
        L1, o1 = layout.local(i)
        L2, o2 = layout.local(j)
        o2 -= 1
        if L1 == L2:
            o2 -= 2
        a = x if i in x else y
        other = [p for p in a if p != i][0]
        crossed = other == j
        orient = 1 if a[0] == i else -1
        return HomotopyMove("H2", "insert", ((L1, o1 - 1), (L2, o2), crossed, orient))
    new_arrows, new_lines = apply_move(arrows, lines, mv)
    added = sorted(set(new_arrows) - set(_shift_for_insert(arrows, lines, mv)))
    kind = "H1" if mv.kind == "H1" else "H2"
    return HomotopyMove(kind, "delete", canonical(added))


def _shift_for_insert(arrows, lines, mv):
    if mv.kind == "H1":
        moved, _, _ = _insert(canonical(arrows), tuple(lines), [(tuple(mv.site[0]), 2)])
    else:
        moved, _, _ = _insert(canonical(arrows), tuple(lines), [(tuple(mv.site[0]), 2), (tuple(mv.site[1]), 2)])
    return moved


def plant_triangle(arrows, lines, gaps: Sequence[Gap], pattern: tuple[Arrow, ...]):
    """Insert a slidable triangle with its three pairs at ``gaps``.

    ``pattern`` is one of ``TRIANGLES`` (local positions 1..6); the k-th pair
    goes to the k-th gap in sorted order. Returns ``(arrows, lines, slide)``.
    """
    if pattern not in TRIANGLES:
        raise MoveError(f"{pattern} is not a triangle pattern")
    gaps = sorted(tuple(g) for g in gaps)
    moved, new_lines, blocks = _insert(canonical(arrows), tuple(lines), [(g, 2) for g in gaps])
    where = [p for b in blocks for p in b]
    added = canonical((where[t - 1], where[h - 1]) for t, h in pattern)
    return canonical(list(moved) + list(added)), new_lines, HomotopyMove("H3", "slide", added)
