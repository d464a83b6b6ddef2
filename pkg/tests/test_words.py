import pytest
from hypothesis import given
from hypothesis import strategies as st

from openstrings.laurent import parse_polynomial
from openstrings.words import (
    Letter,
    Word,
    abelianize,
    format_word,
    invert,
    multiply,
    parse_word,
    product,
    shift,
    star_word,
    substitute,
)

letters = st.builds(
    Letter,
    st.sampled_from(["a", "b"]),
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)),
    st.sampled_from([1, -1]),
)
words = st.lists(letters, max_size=8).map(lambda xs: Word.of(xs, 2))


def test_free_reduction():
    w = parse_word("a[0,0] a[1,0] A[1,0] b[0,1] B[0,1] A[0,0]")
    assert w == Word.identity()
    assert format_word(w) == "1"


def test_different_index_does_not_cancel():
    w = parse_word("a[0,0] A[0,1]")
    assert len(w) == 2


def test_shift_moves_every_index():
    w = parse_word("a[0,0] A[1,-1]")
    assert format_word(shift(w, (2, 3))) == "a[2,3] A[3,2]"


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        shift(Word.generator("a"), (1, 2, 3))
    with pytest.raises(ValueError):
        Word.of([Letter("a", (0, 0), 1), Letter("a", (0, 0, 0), 1)])


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_word("a[0,0] x")


def test_star_word_reverses_and_negates():
    w = parse_word("A[-1,-2] a[0,1]")
    assert format_word(star_word(w)) == "a[0,-1] A[1,2]"


def test_abelianize_collects_exponents():
    w = parse_word("a[1,0] a[1,0] A[0,1]")
    assert abelianize(w) == parse_polynomial("2*u - v")


@given(words)
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w), 2) == w


@given(words, words, words)
def test_associative(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(words)
def test_inverse(w):
    assert multiply(w, invert(w)) == Word.identity()
    assert multiply(invert(w), w) == Word.identity()


@given(words)
def test_reduced(w):
    for x, y in zip(w.letters, w.letters[1:]):
        assert not (x.name == y.name and x.index == y.index and x.sign == -y.sign)


@given(words, words, st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_shift_is_an_automorphism(x, y, d):
    assert shift(x * y, d) == shift(x, d) * shift(y, d)
    assert shift(invert(x), d) == invert(shift(x, d))


@given(words, words)
def test_abelianize_is_a_homomorphism(x, y):
    assert abelianize(x * y) == abelianize(x) + abelianize(y)


@given(words)
def test_star_word_is_an_involution(w):
    assert star_word(star_word(w)) == w


@given(words, words, words, words)
def test_substitute_is_an_equivariant_endomorphism(x, y, ia, ib):
    images = {"a": ia, "b": ib}
    assert substitute(x * y, images) == substitute(x, images) * substitute(y, images)
    assert substitute(shift(x, (1, -1)), images) == shift(substitute(x, images), (1, -1))


@given(words)
def test_substitute_identity(w):
    assert substitute(w, {"a": Word.generator("a"), "b": Word.generator("b")}) == w


def test_product_matches_repeated_multiply():
    ws = [parse_word("a[0,0] b[1,1]"), parse_word("B[1,1]"), parse_word("A[0,0] a[2,2]")]
    assert product(ws) == ws[0] * ws[1] * ws[2] == parse_word("a[2,2]")


@given(st.lists(letters, max_size=12), st.randoms(use_true_random=False))
def test_reduction_is_confluent(xs, rnd):
    # cancel adjacent inverse pairs in random order until none is left
    original, xs = list(xs), list(xs)
    while True:
        spots = [i for i in range(len(xs) - 1) if xs[i] == xs[i + 1].inverse()]
        if not spots:
            break
        i = rnd.choice(spots)
        del xs[i:i + 2]
    assert Word.of(original, 2).letters == tuple(xs)
