import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from arrfree import catalog
from arrfree.arith import QuadExt, Rational
from arrfree.linalg import Matrix, ShapeError, SparseEchelon, determinant, nullspace, rank
from arrfree.poly import Polynomial

small = st.integers(-3, 3).map(Rational)


def matrices(rows=st.integers(1, 5), cols=st.integers(1, 5)):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(small, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]))


def to_sympy(rows):
    return sympy.Matrix([[sympy.Rational(int(c.numerator), int(c.denominator)) for c in r]
                         for r in rows])


def test_rank_examples():
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.from_rows([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0]])) == 3
    assert rank(Matrix.from_rows([[0] * 4] * 3)) == 0


def test_nullspace_examples():
    assert nullspace(Matrix.identity(4)) == []
    assert len(nullspace(Matrix.from_rows([[1, 1, 0, 0]]))) == 3
    normals = catalog.get("cs1").normals()
    assert len(nullspace(Matrix.from_rows([normals[0], normals[1], normals[4]]))) == 2


def test_determinant_examples():
    assert determinant(Matrix.identity(4)) == 1
    diag = [[2, 0, 0, 0], [0, 3, 0, 0], [0, 0, 4, 0], [0, 0, 0, 5]]
    assert determinant(Matrix.from_rows(diag)) == 120
    with pytest.raises(ShapeError):
        determinant(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_polynomial_determinant_boolean():
    # rows: theta_E and the relations (x,-y,0,0), (0,y,-z,0), (0,0,z,-w) of xyzw
    x, y, z, w = (Polynomial.variable(i) for i in range(4))
    zero = Polynomial()
    rows = [[x, y, z, w], [x, -y, zero, zero], [zero, y, -z, zero], [zero, zero, z, -w]]
    det = determinant(Matrix.from_rows(rows))
    # expanding by hand gives -4xyzw
    assert det == x * y * z * w * -4


def test_quadratic_entries():
    s = QuadExt(0, 1, 5)
    M = Matrix.from_rows([[1, s], [s, 5]])
    assert rank(M) == 1
    assert determinant(M) == 0


@settings(max_examples=80)
@given(matrices())
def test_rank_and_nullspace_against_sympy(rows):
    M = Matrix.from_rows(rows)
    S = to_sympy(rows)
    assert rank(M) == S.rank()
    ns = nullspace(M)
    assert len(ns) == len(S.nullspace())
    assert rank(M) + len(ns) == M.cols
    for v in ns:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(matrices(st.just(n), st.just(n)),
                                                      matrices(st.just(n), st.just(n)))))
def test_determinant_multiplicative(ab):
    a, b = ab
    n = len(a)
    prod = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert determinant(Matrix.from_rows(prod)) == determinant(Matrix.from_rows(a)) * determinant(Matrix.from_rows(b))
    assert determinant(Matrix.from_rows(a)) == to_sympy(a).det()


@settings(max_examples=40)
@given(matrices(), st.randoms(use_true_random=False), st.integers(1, 5).map(Rational))
def test_rank_row_operations(rows, rnd, c):
    perm = rows[:]
    rnd.shuffle(perm)
    perm[0] = [c * x for x in perm[0]]
    assert rank(Matrix.from_rows(perm)) == rank(Matrix.from_rows(rows))


@settings(max_examples=40)
@given(matrices())
def test_sparse_echelon_rank(rows):
    E = SparseEchelon()
    for r in rows:
        E.insert({len(r) - j: c for j, c in enumerate(r) if c})
    assert len(E) == rank(Matrix.from_rows(rows))
