"""Intersection lattice, Moebius function, Poincare polynomial, incidence tables.

Flats are identified with their member sets (all hyperplanes containing
the flat), which for an arrangement determines the subspace.  The lattice
is built rank by rank: a rank ``r+1`` flat is the closure of a rank ``r``
flat together with one more hyperplane.  Nothing here assumes 4 variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .arith import scalar_inverse
from .arrangement import as_arrangement
from .linalg import Matrix, rank as matrix_rank


@dataclass(frozen=True, order=True)
class Flat:
    members: tuple[int, ...]
    rank: int

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    def label(self) -> tuple[int, ...]:
        """1-based member tuple, as printed in incidence tables."""
        return tuple(i + 1 for i in self.members)


class _Span:
    """Row-reduced basis of a span of normals, for closure tests."""

    def __init__(self, vectors):
        self.rows: list[tuple[int, list]] = []
        for v in vectors:
            self.add(v)

    def _reduce(self, v):
        v = list(v)
        for piv, row in self.rows:
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return not any(self._reduce(v))

    def add(self, v) -> bool:
        v = self._reduce(v)
        piv = next((i for i, c in enumerate(v) if c), None)
        if piv is None:
            return False
        inv = scalar_inverse(v[piv])
        v = [c * inv for c in v]
        self.rows = [(p, [a - r[piv] * b for a, b in zip(r, v)]) for p, r in self.rows]
        self.rows.append((piv, v))
        return True

    def __len__(self):
        return len(self.rows)


@dataclass
class Lattice:
    n: int
    k: int
    by_rank: list[list[Flat]]
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {F.members: F for level in self.by_rank for F in level}

    @property
    def rank(self) -> int:
        return len(self.by_rank) - 1

    def flats(self) -> list[Flat]:
        return [F for level in self.by_rank for F in level]

    def flat(self, members) -> Flat:
        return self._index[tuple(sorted(members))]

    def __contains__(self, members) -> bool:
        return tuple(sorted(members)) in self._index

    def lines(self) -> list[Flat]:
        return self.by_rank[2] if self.rank >= 2 else []

    def points(self) -> list[Flat]:
        return self.by_rank[3] if self.rank >= 3 else []

    def below(self, X: Flat) -> list[Flat]:
        """Flats Y < X (strictly containing X as subspaces)."""
        s = set(X.members)
        return [Y for level in self.by_rank[:X.rank] for Y in level if s.issuperset(Y.members)]


def build_lattice(A) -> Lattice:
    A = as_arrangement(A)
    A.check_distinct()
    normals = A.normals()
    k, n = len(normals), len(normals[0])
    if any(len(v) != n for v in normals):
        raise ValueError("normals of different lengths")
    by_rank: list[list[Flat]] = [[Flat((), 0)], [Flat((i,), 1) for i in range(k)]]
    while True:
        r = len(by_rank) - 1
        new: dict[tuple, Flat] = {}
        for F in by_rank[r]:
            span = _Span(normals[i] for i in F.members)
            rest = [j for j in range(k) if j not in F.members]
            covered: set[int] = set()
            for j in rest:
                if j in covered:
                    continue
                ext = _Span([])
                ext.rows = list(span.rows)
                ext.add(normals[j])
                members = tuple(sorted(set(F.members) | {j} | {
                    m for m in rest if m != j and ext.contains(normals[m])}))
                covered.update(members)
                new.setdefault(members, Flat(members, r + 1))
        if not new:
            break
        by_rank.append(sorted(new.values()))
    return Lattice(n=n, k=k, by_rank=by_rank)


def mobius(L: Lattice) -> dict[tuple, int]:
    """Moebius values mu(V, X) keyed by member tuple."""
    mu: dict[tuple, int] = {(): 1}
    for level in L.by_rank[1:]:
        for X in level:
            mu[X.members] = -sum(mu[Y.members] for Y in L.below(X))
    return mu


def poincare(L: Lattice, mu: dict | None = None) -> list[int]:
    """Coefficients c_0..c_r of sum mu(X) (-t)^r(X)."""
    mu = mobius(L) if mu is None else mu
    coeffs = [0] * (L.rank + 1)
    for F in L.flats():
        coeffs[F.rank] += mu[F.members] * (-1) ** F.rank
    return coeffs


@dataclass
class IncidenceTables:
    lines: dict[int, list[tuple[int, ...]]]     # multiplicity -> 1-based member tuples
    points: dict[int, list[tuple[int, ...]]]

    def line_counts(self) -> dict[int, int]:
        return {p: len(v) for p, v in sorted(self.lines.items())}

    def point_counts(self) -> dict[int, int]:
        return {q: len(v) for q, v in sorted(self.points.items())}


def incidence_tables(L: Lattice) -> IncidenceTables:
    if L.rank < 3:
        raise ValueError("incidence tables need a lattice of rank at least 3")

    def group(flats):
        out: dict[int, list] = {}
        for F in flats:
            out.setdefault(F.multiplicity, []).append(F.label())
        return {m: sorted(v) for m, v in sorted(out.items())}

    return IncidenceTables(lines=group(L.lines()), points=group(L.points()))


def arrangement_rank(A) -> int:
    A = as_arrangement(A)
    return matrix_rank(Matrix.from_rows(A.normals()))


def essential(A) -> bool:
    A = as_arrangement(A)
    return arrangement_rank(A) == A.dim


# -- count identities --------------------------------------------------------

def pair_identity(L: Lattice) -> tuple[int, int]:
    """(sum over lines of C(m,2), C(k,2)); the two agree on every lattice."""
    return sum(comb(F.multiplicity, 2) for F in L.lines()), comb(L.k, 2)


def triple_identity(L: Lattice) -> tuple[int, int]:
    """(sum over points of tau + sum over lines of C(m,3), C(k,3)).

    A triple of hyperplanes meets either in a line (when all three contain a
    common line) or in a point.  ``tau(X)`` counts the triples whose
    intersection is exactly the point ``X``.
    """
    lines = L.lines()
    total = sum(comb(F.multiplicity, 3) for F in lines)
    for X in L.points():
        s = set(X.members)
        total += comb(X.multiplicity, 3) - sum(
            comb(F.multiplicity, 3) for F in lines if s.issuperset(F.members))
    return total, comb(L.k, 3)


def literal_counts(L: Lattice) -> dict[str, int]:
    """The naive counts sum_{q>=3} C(q,3) t_q and sum_{p>=2} t_p(1), uncorrected."""
    return {
        "sum_binom_q3_tq": sum(comb(X.multiplicity, 3) for X in L.points() if X.multiplicity >= 3),
        "sum_tp1": sum(1 for F in L.lines() if F.multiplicity >= 2),
    }
