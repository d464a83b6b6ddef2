import pytest
from hypothesis import given
from hypothesis import strategies as st

from openstrings.laurent import (
    LaurentPolynomial,
    canonical_string,
    eval_monomial_map,
    from_terms,
    parse_polynomial,
    swap_uv,
)

U = LaurentPolynomial.var(0)
V = LaurentPolynomial.var(1)

polys = st.dictionaries(
    st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.integers(-4, 4), max_size=6
).map(lambda t: LaurentPolynomial(t, 2))


def test_print_order():
    p = U + V + U * U * V * V - U * U * V - U * V * V
    assert canonical_string(p) == "u + v - u^2*v - u*v^2 + u^2*v^2"


def test_negative_exponents_and_constants():
    p = parse_polynomial("-u^-1*v^-1 + v^-1 + 2 - u")
    assert p == -(U ** -1) * V ** -1 + V ** -1 + 2 - U
    assert canonical_string(p) == "-u^-1*v^-1 + v^-1 + 2 - u"


def test_zero():
    assert canonical_string(U - U) == "0"
    assert parse_polynomial("0") == LaurentPolynomial.zero()


def test_inverse_only_for_unit_monomials():
    with pytest.raises(ValueError):
        (U + V) ** -1
    with pytest.raises(ValueError):
        (2 * U) ** -1


def test_dimension_checks():
    with pytest.raises(ValueError):
        LaurentPolynomial.var(0, 3) + U
    with pytest.raises(ValueError):
        LaurentPolynomial({(1,): 1}, 2)


def test_multi_variable_names():
    p = from_terms([((1, 0, 2), 1), ((0, -1, 0), 3)], 3)
    assert canonical_string(p) == "3*v1^-1 + u*v2^2"
    assert parse_polynomial(canonical_string(p), 3) == p


def test_eval_signed_monomials():
    p = U * V - 2 * V
    img = (LaurentPolynomial.var(0, 1), -LaurentPolynomial.var(0, 1, power=-1))
    assert eval_monomial_map(p, img) == LaurentPolynomial({(0,): -1, (-1,): 2}, 1)


@given(polys)
def test_roundtrip(p):
    assert parse_polynomial(canonical_string(p)) == p


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == LaurentPolynomial.zero()


@given(polys, polys)
def test_swap_is_a_ring_involution(p, q):
    assert swap_uv(swap_uv(p)) == p
    assert swap_uv(p * q) == swap_uv(p) * swap_uv(q)


@given(polys, polys)
def test_evaluation_is_a_homomorphism(p, q):
    img = (U * V, V ** -1)
    assert eval_monomial_map(p * q, img) == eval_monomial_map(p, img) * eval_monomial_map(q, img)
    assert (p * q).constant() == p.constant() * q.constant()
