"""Lattice-only freeness obstructions and the Cynk-Szemberg octic conditions."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

from .lattice import Lattice, literal_counts, pair_identity, triple_identity


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SplitResult:
    splits: bool
    exponents: tuple[int, ...] | None = None


def _expand(roots) -> list[int]:
    coeffs = [1]
    for d in roots:
        coeffs = [a + d * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def split_over_integers(coeffs) -> SplitResult:
    """Decide whether c_0 + c_1 t + ... + c_r t^r equals prod (1 + d_i t), d_i >= 1.

    Candidates are the multisets of ``r`` positive integers with sum c_1 and
    product c_r; each one is expanded and compared coefficient by coefficient.
    """
    coeffs = [int(c) for c in coeffs]
    r = len(coeffs) - 1
    if r < 4:
        raise PreconditionError(f"split test needs a degree-4 (essential) polynomial, got degree {r}")
    if coeffs[0] != 1:
        raise PreconditionError("constant coefficient must be 1")
    c1, cr = coeffs[1], coeffs[r]
    if cr <= 0:
        return SplitResult(False)
    for ds in _multisets(r, c1, cr):
        if _expand(ds) == coeffs:
            return SplitResult(True, tuple(ds))
    return SplitResult(False)


def _multisets(r: int, total: int, product: int):
    """Nondecreasing r-tuples of positive integers with the given sum and product."""
    def rec(slots, lo, total, product):
        if slots == 1:
            if total >= lo and total == product:
                yield (total,)
            return
        for d in range(lo, total // slots + 1):
            if product % d:
                continue
            for rest in rec(slots - 1, d, total - d, product // d):
                yield (d,) + rest
    yield from rec(r, 1, total, product)


class Verdict(str, enum.Enum):
    NOT_FREE = "NotFree"
    INCONCLUSIVE = "Inconclusive"
    NOT_APPLICABLE = "NotApplicable"


@dataclass(frozen=True)
class CriterionVerdict:
    verdict: Verdict
    reason: str

    def to_json(self) -> dict:
        return {"verdict": self.verdict.value, "reason": self.reason}


def double_line_criterion(L: Lattice, k: int) -> CriterionVerdict:
    """Only double lines and k > 4 hyperplanes rules out freeness in C^4."""
    if L.rank != L.n or L.n != 4:
        raise PreconditionError("the double-line criterion needs an essential arrangement in C^4")
    if k < 4:
        raise PreconditionError("the double-line criterion needs k >= 4")
    heavy = [F for F in L.lines() if F.multiplicity > 2]
    if heavy:
        return CriterionVerdict(
            Verdict.NOT_APPLICABLE,
            f"{len(heavy)} line(s) of multiplicity > 2, e.g. {heavy[0].label()}")
    if k > 4:
        return CriterionVerdict(Verdict.NOT_FREE,
                                f"only double lines and k = {k} > 4")
    return CriterionVerdict(Verdict.INCONCLUSIVE,
                            "only double lines but k = 4; the criterion says nothing")


@dataclass
class MembershipReport:
    passes: bool
    failures: list = field(default_factory=list)       # (kind, 1-based members, multiplicity)
    literal_eq1: dict = field(default_factory=dict)
    corrected_pair: dict = field(default_factory=dict)
    corrected_triple: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "passes": self.passes,
            "failures": [{"kind": kind, "members": list(m), "multiplicity": mult}
                         for kind, m, mult in self.failures],
        }


LINE_MULTIPLICITIES = (2, 3)
POINT_MULTIPLICITIES = (3, 4, 5)


def cynk_szemberg_check(A, L: Lattice) -> MembershipReport:
    """Eight hyperplanes, lines of multiplicity 2 or 3, points of multiplicity 3 to 5.

    Points of multiplicity 2 cannot occur as rank-3 flats, so the allowed
    point multiplicities are {3, 4, 5}.  The report also carries the naive
    counts (expected 56 and 28) next to the exact pair and triple identities.
    """
    failures = []
    k = len(A)
    if k != 8:
        failures.append(("count", (), k))
    for F in L.lines():
        if F.multiplicity not in LINE_MULTIPLICITIES:
            failures.append(("line", F.label(), F.multiplicity))
    for X in L.points():
        if X.multiplicity not in POINT_MULTIPLICITIES:
            failures.append(("point", X.label(), X.multiplicity))
    lit = literal_counts(L)
    pair_lhs, pair_rhs = pair_identity(L)
    trip_lhs, trip_rhs = triple_identity(L)
    return MembershipReport(
        passes=not failures,
        failures=failures,
        literal_eq1={"sum_binom_q3_tq": lit["sum_binom_q3_tq"], "expected_binom_q3": comb(8, 3),
                     "sum_tp1": lit["sum_tp1"], "expected_tp1": comb(8, 2)},
        corrected_pair={"lhs": pair_lhs, "rhs": pair_rhs, "holds": pair_lhs == pair_rhs},
        corrected_triple={"lhs": trip_lhs, "rhs": trip_rhs, "holds": trip_lhs == trip_rhs},
    )


def proposition_gen_equation(d) -> bool:
    """d1(d1-1) + d2(d2-1) + d3(d3-1) == 0."""
    d1, d2, d3 = d
    if not (0 < d1 <= d2 <= d3):
        raise PreconditionError("expects 0 < d1 <= d2 <= d3")
    return d1 * (d1 - 1) + d2 * (d2 - 1) + d3 * (d3 - 1) == 0


def proposition_gen_scan(limit: int = 50) -> list[tuple[int, int, int]]:
    """All nondecreasing positive triples up to ``limit`` solving the equation."""
    return [d for d in combinations_with_replacement(range(1, limit + 1), 3)
            if proposition_gen_equation(d)]


def terao_polynomial(exponents) -> list[int]:
    """Coefficients of prod (1 + d t)."""
    return _expand(exponents)

