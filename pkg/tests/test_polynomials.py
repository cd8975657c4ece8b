import pytest
from hypothesis import given
from hypothesis import strategies as st

from skyline.polynomials import SparsePoly, pair_product, poly_from_json


def poly_strategy(nx=3, max_terms=5, max_exp=4):
    exps = st.tuples(*([st.integers(0, max_exp)] * nx))
    return st.dictionaries(exps, st.integers(-9, 9), max_size=max_terms).map(
        lambda terms: SparsePoly(nx, terms)
    )


def test_monomial_and_zero():
    p = SparsePoly.monomial(3, (1, 0, 2))
    assert p.terms == {(1, 0, 2): 3}
    assert SparsePoly.zero(2).is_zero()
    assert SparsePoly.monomial(0, (1, 1)).is_zero()


def test_add_identity_and_cancellation():
    p = SparsePoly.monomial(2, (1, 0))
    assert p + SparsePoly.zero(2) == p
    assert (p - p).is_zero()
    assert (p - p).terms == {}


def test_product_examples():
    x1 = SparsePoly.monomial(1, (1, 0))
    x2 = SparsePoly.monomial(1, (0, 1))
    square = (x1 + x2) * (x1 + x2)
    assert square.terms == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    xy = pair_product(x1, SparsePoly.monomial(1, (1, 0, 0)))
    assert xy.terms == {((1, 0), (1, 0, 0)): 1}
    assert xy.nx == 2 and xy.ny == 3


def test_arity_mismatch():
    with pytest.raises(ValueError):
        SparsePoly.monomial(1, (1, 0)) + SparsePoly.monomial(1, (1, 0, 0))
    with pytest.raises(ValueError):
        SparsePoly(2, {(1, 0, 0): 1})


@given(poly_strategy(), poly_strategy(), poly_strategy())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


def test_truncate_examples():
    x1 = SparsePoly.monomial(1, (1, 0))
    p = x1 + SparsePoly.monomial(1, (2, 0)) + SparsePoly.monomial(5, (0, 0))
    assert p.truncate(0) == SparsePoly.monomial(5, (0, 0))
    assert p.truncate(1) == x1 + SparsePoly.monomial(5, (0, 0))


@given(poly_strategy(max_exp=3), poly_strategy(max_exp=3), st.integers(0, 4))
def test_truncate_product_identity(p, q, d):
    assert (p * q).truncate(d) == (p.truncate(d) * q.truncate(d)).truncate(d)


def test_s_action_examples():
    p = SparsePoly.monomial(1, (3, 1, 0))
    assert p.s_action(1) == SparsePoly.monomial(1, (1, 3, 0))
    sym = SparsePoly.monomial(1, (1, 1, 0))
    assert sym.s_action(1) == sym
    with pytest.raises(ValueError):
        p.s_action(3)


@given(poly_strategy(), st.integers(1, 2))
def test_s_action_involution(p, i):
    assert p.s_action(i).s_action(i) == p


def test_swap_alphabets():
    p = pair_product(SparsePoly.monomial(2, (1, 0)), SparsePoly.monomial(1, (0, 3)))
    q = p.swap_alphabets()
    assert q.terms == {((0, 3), (1, 0)): 2}
    with pytest.raises(ValueError):
        SparsePoly.monomial(1, (1,)).swap_alphabets()


def test_canonical_text():
    p = SparsePoly.monomial(1, (1, 0, 3)) - SparsePoly.monomial(1, (2, 2, 0))
    assert str(p) == "x^(1,0,3) - x^(2,2,0)"
    q = SparsePoly.monomial(2, (1, 0)) + SparsePoly.monomial(-1, (0, 0))
    assert str(q) == "-1 + 2 x^(1,0)"
    assert str(SparsePoly.zero(2)) == "0"
    two = pair_product(SparsePoly.monomial(1, (1,)), SparsePoly.monomial(3, (2,)))
    assert str(two) == "3 x^(1)y^(2)"


def test_exact_big_integers():
    p = SparsePoly.monomial(10**20, (1,))
    q = p * p * 7
    assert q.terms == {(2,): 7 * 10**40}


def test_json_roundtrip():
    p = SparsePoly.monomial(1, (1, 0, 3)) - SparsePoly.monomial(4, (2, 2, 0))
    assert poly_from_json(p.to_json()) == p
    two = pair_product(SparsePoly.monomial(2, (1, 0)), SparsePoly.monomial(1, (2,)))
    assert poly_from_json(two.to_json()) == two
    with pytest.raises(ValueError):
        poly_from_json([])
