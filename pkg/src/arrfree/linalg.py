"""Exact linear algebra over rationals and quadratic fields.

Dense routines (``rank``, ``nullspace``, ``determinant``, ``rref``) work on
:class:`Matrix` and pivot on the first nonzero entry in row-major order.
:class:`SparseEchelon` is an incremental row echelon form on dict-backed
sparse vectors, used when matrices are too large to hold densely.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .arith import Rational, as_rational, scalar_inverse
from .kernels import axpy


class ShapeError(ValueError):
    pass


class Matrix:
    """Row-major matrix of exact scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence):
        entries = [as_rational(x) if type(x) is int else x for x in entries]
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        self.rows, self.cols, self.entries = rows, cols, entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [Rational(int(i == j)) for i in range(n) for j in range(n)])

    def row(self, i: int) -> list:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> "Matrix":
        return Matrix.from_rows([list(c) for c in zip(*self.to_rows())]) if self.rows else Matrix(0, 0, [])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols})"


def rref(M: Matrix) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    A = M.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(M.cols):
        p = next((i for i in range(r, M.rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        inv = scalar_inverse(A[r][c])
        A[r] = [x * inv for x in A[r]]
        for i in range(M.rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == M.rows:
            break
    return A, pivots


def rank(M: Matrix) -> int:
    return len(rref(M)[1])


def nullspace(M: Matrix) -> list[list]:
    """Basis of the right kernel, one vector per free column (in column order)."""
    A, pivots = rref(M)
    free = [c for c in range(M.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Rational(0)] * M.cols
        v[f] = Rational(1)
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][f]
        basis.append(v)
    return basis


def determinant(M: Matrix):
    """Exact determinant.

    Scalar entries use elimination; entries that are not field elements
    (polynomials, say) use the Leibniz expansion, so only small sizes make
    sense there.
    """
    if M.rows != M.cols:
        raise ShapeError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return Rational(1)
    if any(hasattr(x, "key_dict") for x in M.entries):
        return _leibniz(M)
    A = M.to_rows()
    det = Rational(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Rational(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det = det * A[c][c]
        inv = scalar_inverse(A[c][c])
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] * inv
                A[i] = [a - f * b for a, b in zip(A[i], A[c])]
    return det


def _perm_sign(p) -> int:
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _leibniz(M: Matrix):
    n = M.rows
    total = None
    for p in permutations(range(n)):
        term = None
        for i in range(n):
            x = M[i, p[i]]
            term = x if term is None else term * x
        term = term if _perm_sign(p) > 0 else -term
        total = term if total is None else total + term
    return total


class SparseEchelon:
    """Incremental row echelon form over dict vectors ``{column_key: value}``.

    Columns are ordered by their integer keys, largest first.  Each pivot row
    is monic at its largest key.  ``insert`` top-reduces a row against the
    current pivots and keeps it if anything survives; an optional companion
    vector is carried through the same row operations, which is how kernel
    vectors of a map are read off when the row's image part cancels.
    """

    def __init__(self):
        self.pivots: dict[int, tuple[list, list | None]] = {}

    def __len__(self):
        return len(self.pivots)

    def leads(self) -> set[int]:
        return set(self.pivots)

    def reduce(self, v: dict, companion: dict | None = None) -> dict:
        """Top-reduce ``v`` in place; returns it (empty when in the span)."""
        pivots = self.pivots
        while v:
            lead = max(v)
            row = pivots.get(lead)
            if row is None:
                return v
            c = v[lead]
            axpy(v, row[0], 0, c, None)
            if companion is not None and row[1]:
                axpy(companion, row[1], 0, c, None)
        return v

    def insert(self, v: dict, companion: dict | None = None) -> bool:
        """Add ``v`` (consumed) to the row space; False if it was dependent."""
        v = self.reduce(v, companion)
        if not v:
            return False
        lead = max(v)
        inv = scalar_inverse(v[lead])
        items = [(k, c * inv) for k, c in v.items()]
        comp_items = None
        if companion is not None:
            comp_items = [(k, c * inv) for k, c in companion.items()]
        self.pivots[lead] = (items, comp_items)
        return True
