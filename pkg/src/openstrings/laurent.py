"""Sparse Laurent polynomials with integer coefficients.

Exponent vectors have length 2 for ``u, v`` or ``n + 1`` for ``u, v1..vn``.
Coefficients are Python ints, so nothing overflows.
"""
from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def variable_names(dim: int) -> tuple[str, ...]:
    if dim == 2:
        return ("u", "v")
    return ("u",) + tuple(f"v{i}" for i in range(1, dim))


class LaurentPolynomial:
    __slots__ = ("terms", "dim", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, dim: int = 2):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != dim:
                raise ValueError(f"exponent {e} does not have length {dim}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self.terms: dict[Exponent, int] = {e: c for e, c in clean.items() if c}
        self.dim = dim
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, dim: int = 2) -> "LaurentPolynomial":
        return cls({}, dim)

    @classmethod
    def one(cls, dim: int = 2) -> "LaurentPolynomial":
        return cls({(0,) * dim: 1}, dim)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff: int = 1) -> "LaurentPolynomial":
        exponent = tuple(exponent)
        return cls({exponent: coeff}, len(exponent))

    @classmethod
    def var(cls, i: int, dim: int = 2, power: int = 1) -> "LaurentPolynomial":
        e = [0] * dim
        e[i] = power
        return cls.monomial(e)

    # ring structure
    def _check(self, other: "LaurentPolynomial") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} != {other.dim}")

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({(0,) * self.dim: other}, self.dim)
        if isinstance(other, LaurentPolynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.dim)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.dim)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(out, self.dim)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPolynomial":
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials can be inverted")
            return LaurentPolynomial({tuple(-x for x in e): c}, self.dim) ** (-n)
        out = LaurentPolynomial.one(self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({(0,) * self.dim: other}, self.dim)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({canonical_string(self)!r})"

    def __str__(self) -> str:
        return canonical_string(self)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant(self) -> int:
        """Value when every variable is 1."""
        return sum(self.terms.values())


def add(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p + q


def mul(p: LaurentPolynomial, q: LaurentPolynomial) -> LaurentPolynomial:
    return p * q


def neg(p: LaurentPolynomial) -> LaurentPolynomial:
    return -p


def swap_uv(p: LaurentPolynomial) -> LaurentPolynomial:
    if p.dim != 2:
        raise ValueError("swap_uv needs a two-variable polynomial")
    return LaurentPolynomial({(k, j): c for (j, k), c in p.terms.items()}, 2)


def eval_monomial_map(p: LaurentPolynomial, images: Sequence[LaurentPolynomial]) -> LaurentPolynomial:
    """Substitute variable ``i`` by the signed monomial ``images[i]``."""
    if len(images) != p.dim:
        raise ValueError(f"need {p.dim} images, got {len(images)}")
    target = images[0].dim
    bases = []
    for img in images:
        if img.dim != target:
            raise ValueError("images must share one dimension")
        if not img.is_monomial():
            raise ValueError(f"image {img} is not a monomial")
        (e, c), = img.terms.items()
        if c not in (1, -1):
            raise ValueError(f"image {img} is not a signed monomial")
        bases.append((e, c))
    out: dict[Exponent, int] = {}
    for exps, coeff in p.terms.items():
        e = [0] * target
        sign = 1
        for (base, c), k in zip(bases, exps):
            for i, b in enumerate(base):
                e[i] += b * k
            if c < 0 and k % 2:
                sign = -sign
        key = tuple(e)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentPolynomial(out, target)


def _sort_key(e: Exponent) -> Exponent:
    # last variable first, then backwards to u; ascending, so negative exponents come first
    return tuple(reversed(e))


def _monomial_text(e: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def canonical_string(p: LaurentPolynomial) -> str:
    if not p.terms:
        return "0"
    names = variable_names(p.dim)
    out = []
    for e in sorted(p.terms, key=_sort_key):
        c = p.terms[e]
        mono = _monomial_text(e, names)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")
_FACTOR = re.compile(r"([a-z]\d*)(?:\^(-?\d+))?")


def parse_polynomial(text: str, dim: int = 2) -> LaurentPolynomial:
    """Parse the output of :func:`canonical_string`."""
    names = variable_names(dim)
    lookup = {n: i for i, n in enumerate(names)}
    text = text.strip()
    if text == "0":
        return LaurentPolynomial.zero(dim)
    # exponents may be negative; protect '^-' from the term splitter
    text = text.replace("^-", "^~")
    terms: dict[Exponent, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if m is None or not m.group(2).strip():
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = m.end()
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        e = [0] * dim
        for factor in m.group(2).strip().replace("^~", "^-").split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            f = _FACTOR.fullmatch(factor)
            if f is None or f.group(1) not in lookup:
                raise ValueError(f"unknown factor {factor!r}")
            e[lookup[f.group(1)]] += int(f.group(2) or 1)
        key = tuple(e)
        terms[key] = terms.get(key, 0) + sign * coeff
    return LaurentPolynomial(terms, dim)


def from_terms(items: Iterable[tuple[Sequence[int], int]], dim: int = 2) -> LaurentPolynomial:
    out: dict[Exponent, int] = {}
    for e, c in items:
        e = tuple(e)
        out[e] = out.get(e, 0) + c
    return LaurentPolynomial(out, dim)
