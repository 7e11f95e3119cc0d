import random

import pytest

from arrfree import catalog
from arrfree.analyzer import (NotEssentialError, classify, is_free, is_nearly_free, jacobian,
                              relation_generators, saito_check, second_syzygies, type_of)
from arrfree.arrangement import Arrangement
from arrfree.criteria import PreconditionError
from arrfree.groebner import check_syzygy

from conftest import ITEM3, RIGID, report


def test_type_examples():
    assert type_of((2, 3, 3, 3), 8) == 1
    assert type_of((3, 3, 4, 4, 4, 4, 4), 8) == 3
    assert type_of((1, 1, 1), 4) == 0
    with pytest.raises(PreconditionError):
        type_of((1, 1), 4)


def test_free_examples():
    B = catalog.get("boolean4")
    assert is_free((1, 1, 1), B)
    D = catalog.get("family4(1,0)")
    gens = relation_generators(D)
    assert gens.sorted_degrees() == (2, 2, 3)
    assert is_free(gens.sorted_degrees(), D, gens)
    assert not is_free((2, 3, 3, 3), catalog.get("cs1"))


def test_saito_determinant_is_multiple_of_q():
    for name in ("boolean4", "family4(1,0)"):
        A = catalog.get(name)
        ok, c = saito_check(A, relation_generators(A).vectors)
        assert ok and c != 0


def test_nearly_free_cs1():
    A = catalog.get("cs1")
    gens = relation_generators(A)
    second = second_syzygies(gens)
    assert len(second) == 1
    assert second.vectors[0].component_degrees() == (2, 1, 1, 1)
    assert is_nearly_free(gens.sorted_degrees(), 8, True, second)
    assert not is_nearly_free(gens.sorted_degrees(), 8, False, second)
    assert not is_nearly_free((3, 3, 3, 3, 3), 8, True, None)
    assert not is_nearly_free((1, 1, 1), 4, True, None)


def test_classify_examples(classified):
    r = classified("cs93")
    assert r.exp0 == (3, 3, 4, 4, 4, 4, 4) and r.type == 3
    assert not r.free and not r.nearly_free
    r = classified("csB")
    assert r.exp0 == (4,) * 9 and r.type == 5
    r = classified("family4(1,0)")
    assert r.free and r.type == 0


def test_classify_rejects_non_essential():
    A = Arrangement([(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 0)])
    with pytest.raises(NotEssentialError):
        classify(A)


@pytest.mark.parametrize("name", ITEM3)
def test_catalog_invariants(name):
    r = report(name)
    assert r.free == (r.type == 0)
    if r.nearly_free:
        assert r.type == 1
    if r.free:
        assert r.split.splits and sorted(r.split.exponents) == sorted((1,) + r.exp0)
    if r.criteria["double_line"].verdict.value == "NotFree":
        assert not r.free
    if name in RIGID:
        assert 1 <= r.type <= 5 and not r.free
    gens = jacobian(catalog.get(name).defining_polynomial())
    assert all(check_syzygy(v, gens) for v in r.generators)


@pytest.mark.parametrize("name", ["cs19", "csA", "family4(1,0)"])
def test_order_invariance(name):
    A = catalog.get(name)
    base = report(name).to_json()
    order = list(range(A.k))
    random.Random(11).shuffle(order)
    other = classify(A.permuted(order)).to_json()
    for key in ("poincare", "split", "exp0", "free", "nearly_free", "type", "counts"):
        assert other[key] == base[key], key
    # verdicts are order independent; the reason text names a 1-based member tuple
    assert ({k: v["verdict"] for k, v in other["criteria"].items()}
            == {k: v["verdict"] for k, v in base["criteria"].items()})
    for key in ("lines", "points"):
        assert ({m: len(v) for m, v in other[key]["by_multiplicity"].items()}
                == {m: len(v) for m, v in base[key]["by_multiplicity"].items()})
