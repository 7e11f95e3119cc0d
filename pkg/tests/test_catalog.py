import pytest

from arrfree import catalog
from arrfree.arith import QuadExt, Rational
from arrfree.arrangement import DuplicateHyperplaneError
from arrfree.lattice import build_lattice


def test_names():
    assert catalog.names()[:15] == catalog.FIXED
    assert {"cs1", "cs238", "csA", "csB", "csC", "boolean4"} <= set(catalog.names())


def test_get_cs1():
    A = catalog.get("cs1")
    assert A.k == 8
    assert [f.coefficients for f in A.forms[:4]] == [tuple(map(Rational, c)) for c in catalog.COORDS]


def test_quadratic_entries():
    C = catalog.get("csC")
    assert C.field == 5
    assert any(isinstance(c, QuadExt) and c.b for f in C.forms for c in f.coefficients)
    assert catalog.get("csA").field == -3 and catalog.get("csB").field == -3


def test_boolean4():
    assert [f.coefficients for f in catalog.get("boolean4").forms] == [
        tuple(map(Rational, c)) for c in catalog.COORDS]


def test_unknown_entry():
    with pytest.raises(catalog.UnknownEntryError):
        catalog.get("cs2")
    with pytest.raises(catalog.UnknownEntryError):
        catalog.get("family4(x,1)")


def test_family4():
    D = catalog.get("family4(1,0)")
    assert not D.meta["admissible"] and D.name == "family4(1,0)"
    ok = catalog.family4(1, 2)
    assert ok.meta["admissible"] and ok.k == 8
    bad = catalog.family4(1, 1)
    assert not bad.meta["admissible"]
    with pytest.raises(DuplicateHyperplaneError):
        bad.check_distinct()
    with pytest.raises(ValueError):
        catalog.family4(0, 0)


def test_family266_admissibility():
    assert catalog.family266(1, 1).meta["admissible"]
    catalog.family266(1, 1).check_distinct()
    assert not catalog.family266(1, 0).meta["admissible"]
    assert not catalog.family266(2, -1).meta["admissible"]
    with pytest.raises(ValueError):
        catalog.family266(0, 0)


@pytest.mark.parametrize("params", [(1, 2), (2, 3), (3, 1), (Rational(1, 2), -3)])
def test_family4_generic_lattice_shape(params):
    L = build_lattice(catalog.family4(*params))
    triples = {F.label() for F in L.lines() if F.multiplicity == 3}
    assert triples == {(1, 2, 5), (2, 3, 6), (2, 7, 8)}
    printed = catalog.FAMILY_TABLES["family4"]["lines"]
    assert sorted(F.label() for F in L.lines()) == sorted(printed)


def test_fixture_notes_present():
    assert catalog.fixture("cs1").notes
    assert "A_283" in catalog.fixture("cs238").notes[0]
    assert catalog.FAMILY_TABLES["family4"]["points"] is None
    assert catalog.fixture("family4(1,2)") is None
