import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from arrfree import catalog
from arrfree.arith import Rational
from arrfree.poly import (LinearForm, Polynomial, compare_monomials, decode, encode,
                          euler_derivation, expand_product, monomials_of_degree,
                          partial_derivative)

X, Y, Z, W = (Polynomial.variable(i) for i in range(4))

exps = st.tuples(*[st.integers(0, 3)] * 4)
polys = st.dictionaries(exps, st.integers(-5, 5).map(Rational), max_size=5).map(Polynomial)


def grevlex_reference(a, b):
    """Textbook grevlex: total degree, then the last differing exponent decides (smaller wins)."""
    if sum(a) != sum(b):
        return (sum(a) > sum(b)) - (sum(a) < sum(b))
    for ea, eb in zip(reversed(a), reversed(b)):
        if ea != eb:
            return 1 if ea < eb else -1
    return 0


def test_grevlex_examples():
    assert compare_monomials((1, 0, 0, 1), (0, 1, 1, 0)) == -1
    assert compare_monomials((2, 0, 0, 0), (1, 1, 0, 0)) == 1
    assert compare_monomials((1, 2, 0, 3), (1, 2, 0, 3)) == 0


@given(exps, exps)
def test_grevlex_matches_reference(a, b):
    assert compare_monomials(a, b) == grevlex_reference(a, b)


@given(exps, exps)
def test_key_multiplication_is_addition(a, b):
    prod = tuple(x + y for x, y in zip(a, b))
    assert encode(a) + encode(b) == encode(prod)
    assert decode(encode(a)) == a


def test_monomials_of_degree_count_and_order():
    for d in range(6):
        ms = monomials_of_degree(d)
        assert len(ms) == len(list(itertools.combinations_with_replacement(range(4), d)))
        assert ms == sorted(ms, reverse=True)


def test_expand_product_examples():
    forms = [LinearForm(c) for c in catalog.COORDS]
    assert expand_product(forms) == X * Y * Z * W
    assert expand_product([LinearForm((1, 0, 0, 0))] * 2) == X * X
    Q1 = catalog.get("cs1").defining_polynomial()
    assert Q1.is_homogeneous() and Q1.degree() == 8
    assert Q1.evaluate([1, 1, 1, 1]) == 16


def test_expand_product_order_independent():
    A = catalog.get("csC")
    f = A.defining_polynomial()
    assert expand_product(list(reversed(A.forms))) == f


def test_derivatives():
    assert partial_derivative(X * Y * Z * W, 0) == Y * Z * W
    assert partial_derivative(X * X, 3).is_zero()


def test_euler_relation_on_catalog():
    for name in catalog.FIXED:
        f = catalog.get(name).defining_polynomial()
        assert euler_derivation(f) == f * f.degree()


@settings(max_examples=60)
@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@settings(max_examples=60)
@given(polys, polys, st.integers(0, 3))
def test_derivative_linear_and_leibniz(p, q, i):
    assert (p + q).derivative(i) == p.derivative(i) + q.derivative(i)
    assert (p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i)
