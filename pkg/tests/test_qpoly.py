import pytest
from hypothesis import given
from hypothesis import strategies as st

from springerbc.errors import BadRange
from springerbc.qpoly import ONE, QPoly, ZERO, geometric_sum, monomial, poly_to_text

poly_st = st.lists(st.integers(-9, 9), max_size=6).map(QPoly)


def test_normalization():
    assert QPoly((1, 0, 0)) == (1,)
    assert QPoly((0, 0)) == ()
    assert not ZERO
    assert ONE


def test_geometric_sum_examples():
    assert geometric_sum(2, 0) == (1, 1)  # q + 1
    assert geometric_sum(3, 1) == (0, 1, 1)  # q^2 + q
    assert geometric_sum(1, 1) == ()
    with pytest.raises(BadRange):
        geometric_sum(0, 1)


def test_arithmetic():
    p = QPoly((1, 2))
    q = QPoly((0, 1))
    assert p + q == (1, 3)
    assert p - p == ()
    assert p * q == (0, 1, 2)
    assert 3 * p == (3, 6)
    assert monomial(3) - monomial(1) == (0, -1, 0, 1)
    assert (monomial(2) - ONE) (2) == 3
    assert QPoly((1, 2, 1))(3) == 16


@given(poly_st, poly_st, st.integers(-4, 4))
def test_mul_evaluation_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(st.integers(0, 8).flatmap(lambda b: st.tuples(st.integers(b, 9), st.just(b))))
def test_geometric_sum_telescopes(ab):
    a, b = ab
    g = geometric_sum(a, b)
    for q in (2, 3, 5):
        assert g(q) * (q - 1) == q**a - q**b


def test_poly_text():
    assert poly_to_text(QPoly((1, 2, 2, 2, 1))) == "q^4 + 2q^3 + 2q^2 + 2q + 1"
    assert poly_to_text(QPoly((1, -1))) == "-q + 1"
    assert poly_to_text(QPoly((1, 0, 0, 0, -1))) == "-q^4 + 1"
    assert poly_to_text(QPoly((1, 1, 1, 1, -2, -2))) == "-2q^5 - 2q^4 + q^3 + q^2 + q + 1"
    assert poly_to_text(ZERO) == "0"
    assert poly_to_text(QPoly((0, 1))) == "q"
    assert poly_to_text(QPoly((1, 2, 1)), descending=False) == "1 + 2q + q^2"
