"""Reduced words in a free group whose generators carry integer index vectors.

A letter is ``(name, index, sign)``. The acting group Z^d translates every
index; ``d`` is 2 for single strings (indices ``(j, k)`` standing for
``u^j v^k``) and ``n + 1`` for colored n-strings.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .laurent import LaurentPolynomial


class Letter(NamedTuple):
    name: str
    index: tuple[int, ...]
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.name, self.index, -self.sign)

    def shifted(self, delta: Sequence[int]) -> "Letter":
        return Letter(self.name, tuple(i + d for i, d in zip(self.index, delta)), self.sign)

    def __str__(self) -> str:
        head = self.name if self.sign > 0 else self.name.upper()
        return f"{head}[{','.join(map(str, self.index))}]"


def _cancels(x: Letter, y: Letter) -> bool:
    return x.sign == -y.sign and x.index == y.index and x.name == y.name


def _reduce(letters: Iterable[Letter], stack: list[Letter] | None = None) -> tuple[Letter, ...]:
    out = [] if stack is None else stack
    for x in letters:
        if out and _cancels(out[-1], x):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A freely reduced word. Construct through :meth:`of` to get reduction."""

    letters: tuple[Letter, ...]
    dim: int = 2

    @classmethod
    def of(cls, letters: Iterable[Letter], dim: int | None = None) -> "Word":
        letters = tuple(letters)
        if dim is None:
            dim = len(letters[0].index) if letters else 2
        for x in letters:
            if len(x.index) != dim:
                raise ValueError(f"letter {x} has index length {len(x.index)}, expected {dim}")
            if x.sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {x.sign}")
        return cls(_reduce(letters), dim)

    @classmethod
    def identity(cls, dim: int = 2) -> "Word":
        return cls((), dim)

    @classmethod
    def generator(cls, name: str = "a", index: Sequence[int] | None = None, dim: int = 2) -> "Word":
        index = tuple(index) if index is not None else (0,) * dim
        return cls((Letter(name, index, 1),), len(index))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def _check_dim(dim: int, other: int) -> None:
    if dim != other:
        raise ValueError(f"index dimension mismatch: {dim} != {other}")


def shift(w: Word, delta: Sequence[int]) -> Word:
    """Apply the Z^d action: add ``delta`` to every letter index."""
    delta = tuple(delta)
    _check_dim(w.dim, len(delta))
    if not any(delta):
        return w
    # translation preserves reducedness
    if len(delta) == 2:
        dj, dk = delta
        new = tuple.__new__
        return Word(tuple(new(Letter, (x[0], (x[1][0] + dj, x[1][1] + dk), x[2])) for x in w.letters), 2)
    return Word(tuple(x.shifted(delta) for x in w.letters), w.dim)


def multiply(w1: Word, w2: Word) -> Word:
    if w1.letters and w2.letters:
        _check_dim(w1.dim, w2.dim)
    dim = w1.dim if w1.letters else w2.dim
    return Word(_reduce(w2.letters, list(w1.letters)), dim)


def product(words: Iterable[Word], dim: int = 2) -> Word:
    stack: list[Letter] = []
    for w in words:
        if w.letters:
            _check_dim(dim, w.dim)
        _reduce(w.letters, stack)
    return Word(tuple(stack), dim)


def invert(w: Word) -> Word:
    return Word(tuple(x.inverse() for x in reversed(w.letters)), w.dim)


def star_word(w: Word) -> Word:
    """Reverse the letter order and negate every index; signs are kept."""
    if w.dim != 2:
        raise ValueError("star_word is only defined for index dimension 2")
    return Word(
        tuple(Letter(x.name, (-x.index[0], -x.index[1]), x.sign) for x in reversed(w.letters)),
        w.dim,
    )


def abelianize(w: Word) -> LaurentPolynomial:
    """Exponent sum of ``w``: each letter contributes ``sign * monomial(index)``."""
    terms: dict[tuple[int, ...], int] = {}
    for x in w.letters:
        terms[x.index] = terms.get(x.index, 0) + x.sign
    return LaurentPolynomial(terms, w.dim)


def substitute(w: Word, images: dict[str, Word], dim: int | None = None) -> Word:
    """Replace each letter ``g_delta^e`` by ``shift(images[g], delta)^e`` and reduce.

    This is the equivariant endomorphism of F determined by where it sends the
    index-zero generators.
    """
    dim = w.dim if dim is None else dim
    stack: list[Letter] = []
    cache: dict[tuple[str, tuple[int, ...], int], tuple[Letter, ...]] = {}
    for x in w.letters:
        key = (x.name, x.index, x.sign)
        piece = cache.get(key)
        if piece is None:
            img = shift(images[x.name], x.index)
            piece = (img if x.sign > 0 else invert(img)).letters
            cache[key] = piece
        _reduce(piece, stack)
    return Word(tuple(stack), dim)


def format_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(str(x) for x in w.letters)


_LETTER = re.compile(r"([A-Za-z])(\d*)\[(-?\d+(?:,-?\d+)*)\]")


def parse_word(text: str, dim: int | None = None) -> Word:
    """Inverse of :func:`format_word`. Lowercase names are positive letters."""
    text = text.strip()
    if text == "1" or not text:
        return Word.identity(2 if dim is None else dim)
    letters = []
    for tok in text.split():
        m = _LETTER.fullmatch(tok)
        if m is None:
            raise ValueError(f"malformed letter {tok!r}")
        head, num, idx = m.groups()
        sign = 1 if head.islower() else -1
        letters.append(Letter(head.lower() + num, tuple(int(i) for i in idx.split(",")), sign))
    return Word.of(letters, dim)
