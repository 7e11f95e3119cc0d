import heapq

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrfree import _pykernels, kernels
from arrfree.arith import QuadExt, Rational

ck = pytest.importorskip("arrfree._ckernels")

keys = st.integers(0, 40)
rats = st.integers(-4, 4).map(Rational)
sparse = st.dictionaries(keys, rats.filter(bool), max_size=12)


@given(sparse, sparse, st.integers(0, 5), rats, st.booleans())
def test_backends_agree(p, q, shift, c, track):
    terms = sorted(q.items(), reverse=True)
    p1, p2 = dict(p), dict(p)
    h1 = [] if track else None
    h2 = [] if track else None
    _pykernels.axpy(p1, terms, shift, c, h1)
    ck.axpy(p2, terms, shift, c, h2)
    assert p1 == p2
    assert all(v for v in p1.values())
    if track:
        assert sorted(h1) == sorted(h2)


def test_quadratic_coefficients():
    s = QuadExt(0, 1, 5)
    p = {3: s, 1: Rational(1)}
    ck.axpy(p, [(1, s)], 2, Rational(1), None)
    assert p == {1: Rational(1)}
    heap = []
    ck.axpy(p, [(7, Rational(2))], 0, s, heap)
    assert p[7] == -2 * s and heapq.heappop(heap) == -7


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
