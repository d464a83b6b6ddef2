"""The free-group invariant of an open string and its abelian shadow.

Resolve every double point of the string so that the strand reached first
passes over (the descending diagram). The group attached to the resulting
long virtual knot is freely generated by the left end generator ``a``, so
the right end generator is a reduced word in the shifted copies ``a[j,k]``
of ``a``; that word is the invariant. Concatenating strings composes the
corresponding endomorphisms.

Crossing rules used by the sweep, with ``B`` the word entering the
over-crossing and ``A`` the word entering the under-crossing::

    positive (tail first):  over out = B[0,-1]
                            under out = B[-1,-1]^-1 * A[-1,0] * B
    negative (head first):  over out = B[0,1]
                            under out = B * A[1,0] * B[1,1]^-1
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .gauss import GaussDiagram, concat, hat, sign
from .laurent import LaurentPolynomial, swap_uv
from .words import Word, abelianize, format_word, invert, product, shift, substitute

U = LaurentPolynomial.var(0)
V = LaurentPolynomial.var(1)
U_INV = LaurentPolynomial.var(0, power=-1)
V_INV = LaurentPolynomial.var(1, power=-1)
ONE = LaurentPolynomial.one()

A0 = Word.generator("a")


@dataclass(frozen=True)
class StringInvariant:
    """The image of the left end generator under the invariant endomorphism."""

    word: Word

    @classmethod
    def identity(cls) -> "StringInvariant":
        return cls(A0)

    def __str__(self) -> str:
        return format_word(self.word)

    def is_identity(self) -> bool:
        return self.word == A0


@dataclass(frozen=True)
class RibbonVerdict:
    """Outcome of a necessary condition for being ribbon.

    ``passed`` is False only when the string certainly is not ribbon; a pass
    proves nothing.
    """

    obstruction: str
    passed: bool
    lhs: object = None
    rhs: object = None
    detail: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {"obstruction": self.obstruction, "passed": self.passed,
                "lhs": str(self.lhs), "rhs": str(self.rhs)}


def _endpoint_table(d: GaussDiagram) -> dict[int, tuple[bool, int, int]]:
    """position -> (is_over, arrow number, sign)."""
    table = {}
    for k, (t, h) in enumerate(d.arrows):
        s = sign((t, h))
        over, under = min(t, h), max(t, h)
        table[over] = (True, k, s)
        table[under] = (False, k, s)
    return table


def phi(d: GaussDiagram) -> StringInvariant:
    """Sweep the string left to right, carrying the word of the current arc."""
    table = _endpoint_table(d)
    current = A0
    entering_over: dict[int, Word] = {}
    for p in range(1, 2 * d.m + 1):
        is_over, k, s = table[p]
        if is_over:
            entering_over[k] = current
            current = shift(current, (0, -s))
        else:
            b = entering_over.pop(k)
            if s > 0:
                current = product((invert(shift(b, (-1, -1))), shift(current, (-1, 0)), b))
            else:
                current = product((b, shift(current, (1, 0)), invert(shift(b, (1, 1)))))
    return StringInvariant(current)


def compose(i1: StringInvariant, i2: StringInvariant) -> StringInvariant:
    """Invariant of the concatenation: substitute shifted copies of ``i1`` into ``i2``."""
    return StringInvariant(substitute(i2.word, {"a": i1.word}))


@dataclass(frozen=True)
class CommuteResult:
    commute: bool
    left_right: StringInvariant
    right_left: StringInvariant

    def __bool__(self) -> bool:
        return self.commute


def commute_check(d1: GaussDiagram, d2: GaussDiagram) -> CommuteResult:
    p1, p2 = phi(d1), phi(d2)
    w12 = compose(p1, p2)
    w21 = compose(p2, p1)
    return CommuteResult(w12 == w21, w12, w21)


# -- the abelian invariant ----------------------------------------------------

def _weights(d: GaussDiagram):
    """Per-position segment weights and per-arrow jump edges."""
    seg: dict[int, LaurentPolynomial] = {}
    jumps: list[tuple[int, int, LaurentPolynomial]] = []
    for t, h in d.arrows:
        over, under = min(t, h), max(t, h)
        if t < h:
            seg[over], seg[under] = V_INV, U_INV
            w = ONE - U_INV * V_INV
        else:
            seg[over], seg[under] = V, U
            w = ONE - U * V
        # jump from the segment left of the over endpoint to the one right of the under endpoint
        jumps.append((over - 1, under, w))
    return seg, jumps


def phi_poly(d: GaussDiagram) -> LaurentPolynomial:
    """Weighted path sum across the Gauss diagram, by dynamic programming over segments."""
    seg, jumps = _weights(d)
    landing: dict[int, list[tuple[int, LaurentPolynomial]]] = {}
    for src, dst, w in jumps:
        landing.setdefault(dst, []).append((src, w))
    P = [ONE]
    for p in range(1, 2 * d.m + 1):
        total = seg[p] * P[p - 1]
        for src, w in landing.get(p, ()):
            total = total + w * P[src]
        P.append(total)
    return P[-1]


def weighted_paths(d: GaussDiagram) -> Iterator[list[LaurentPolynomial]]:
    """Every left-to-right path as its list of weights. Exponential; for inspection only."""
    seg, jumps = _weights(d)
    out_jumps: dict[int, list[tuple[int, LaurentPolynomial]]] = {}
    for src, dst, w in jumps:
        out_jumps.setdefault(src, []).append((dst, w))
    end = 2 * d.m

    def walk(s, acc):
        if s == end:
            yield list(acc)
            return
        yield from walk(s + 1, acc + [seg[s + 1]])
        for dst, w in out_jumps.get(s, ()):
            yield from walk(dst, acc + [w])

    yield from walk(0, [])


def path_products(d: GaussDiagram) -> list[LaurentPolynomial]:
    out = []
    for weights in weighted_paths(d):
        prod = ONE
        for w in weights:
            prod = prod * w
        out.append(prod)
    return out


# -- structure of the word ----------------------------------------------------

class NormalFormError(ValueError):
    """The word is not of the form ``W a[-w,-w] W^-1 shifted by (1,1)``."""


def normal_form(i: StringInvariant) -> tuple[Word, int]:
    """Split the invariant word as ``W * a[-w,-w] * shift(W^-1, (1,1))``; return ``(W, w)``."""
    letters = i.word.letters
    if len(letters) % 2 != 1:
        raise NormalFormError(f"word of even length {len(letters)}: {i}")
    r = len(letters) // 2
    mid = letters[r]
    if mid.sign != 1 or mid.name != "a" or mid.index[0] != mid.index[1]:
        raise NormalFormError(f"middle letter {mid} is not a positive a[-w,-w]")
    head = Word(letters[:r], i.word.dim)
    tail = Word(letters[r + 1:], i.word.dim)
    if tail != shift(invert(head), (1, 1)):
        raise NormalFormError(f"second half of {i} is not the shifted inverse of the first")
    return head, -mid.index[0]


def ribbon_obstruction_abelian(d: GaussDiagram) -> RibbonVerdict:
    p = phi_poly(d)
    q = swap_uv(p)
    return RibbonVerdict("abelian", p == q, p, q,
                         "" if p == q else "phi(u,v) != phi(v,u)")


def ribbon_obstruction_full(d: GaussDiagram) -> RibbonVerdict:
    w = phi(d)
    w_hat = phi(hat(d))
    return RibbonVerdict("full", w == w_hat, w, w_hat,
                         "" if w == w_hat else "Phi(alpha) != Phi(alpha-hat)")


def phi_concat(*diagrams: GaussDiagram) -> StringInvariant:
    out = StringInvariant.identity()
    for d in diagrams:
        out = compose(out, phi(d))
    return out


def concat_all(*diagrams: GaussDiagram) -> GaussDiagram:
    out = GaussDiagram()
    for d in diagrams:
        out = concat(out, d)
    return out



def phi_poly_from_word(d: GaussDiagram) -> LaurentPolynomial:
    """The abelian invariant read off the word; the independent route to :func:`phi_poly`."""
    return abelianize(phi(d).word)
