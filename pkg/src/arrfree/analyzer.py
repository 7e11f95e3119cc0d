"""Freeness, near-freeness and type from the relation module AR(f), plus reports.

AR(f) is used directly as D_0(A): a relation (a_1, ..., a_4) among the
partials of f is the derivation sum a_i d/dx_i killing f.  The Euler
derivation only appears in the Saito determinant cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import format_scalar
from .arrangement import Arrangement
from .criteria import (CriterionVerdict, MembershipReport, PreconditionError, SplitResult,
                       cynk_szemberg_check, double_line_criterion, split_over_integers)
from .groebner import GradedGenerators, Ideal, saturation, syzygy_generators
from .lattice import build_lattice, essential, incidence_tables, mobius, poincare
from .linalg import Matrix, determinant
from .poly import NVARS, Polynomial, partial_derivative

SCHEMA_VERSION = 1


class NotEssentialError(PreconditionError):
    pass


class InconsistencyError(RuntimeError):
    """Two independent computations disagree; never expected."""


def type_of(exp0, k: int) -> int:
    """d_1 + d_2 + d_3 - k + 1 over the three smallest degrees."""
    degs = sorted(exp0)
    if len(degs) < 3:
        raise PreconditionError(f"type needs at least 3 degrees, got {len(degs)}")
    if k < 1:
        raise PreconditionError("k must be positive")
    return sum(degs[:3]) - k + 1


def jacobian(f: Polynomial) -> list[Polynomial]:
    return [partial_derivative(f, i) for i in range(NVARS)]


def relation_generators(A: Arrangement, strategy: str = "normal") -> GradedGenerators:
    """Minimal homogeneous generators of AR(f) for f = Q(A)."""
    return syzygy_generators(jacobian(A.defining_polynomial()), strategy=strategy)


def saito_determinant(vectors) -> Polynomial:
    """det of the 4x4 coefficient matrix of theta_E and three derivations."""
    euler = [Polynomial.variable(i) for i in range(NVARS)]
    rows = [euler] + [list(v.components) for v in vectors]
    return determinant(Matrix.from_rows(rows))


def saito_check(A: Arrangement, vectors) -> tuple[bool, object]:
    """Is the Saito determinant a nonzero constant multiple of Q(A)?"""
    Q = A.defining_polynomial()
    det = saito_determinant(vectors)
    if det.is_zero():
        return False, 0
    c = det.leading_term()[1] / Q.leading_term()[1]
    return det == Q * c, c


def is_free(exp0, A: Arrangement, generators: GradedGenerators | None = None) -> bool:
    """Three minimal generators means free; confirmed by the Saito determinant."""
    if not essential(A):
        raise NotEssentialError("freeness test needs an essential arrangement")
    if len(exp0) != 3:
        return False
    if generators is None:
        generators = relation_generators(A)
    ok, _ = saito_check(A, generators.vectors)
    if not ok:
        raise InconsistencyError(f"{A.name}: three generators but the Saito determinant "
                                 "is not a multiple of Q")
    return True


def second_syzygies(generators: GradedGenerators) -> GradedGenerators:
    """Minimal relations among the generators of AR(f), ordered by degree."""
    order = sorted(range(len(generators.vectors)), key=lambda i: generators.degrees[i])
    return syzygy_generators([generators.vectors[i] for i in order])


def nearly_free_degrees_ok(exp0, k: int) -> bool:
    d = sorted(exp0)
    return len(d) == 4 and d[2] == d[3] and d[0] + d[1] + d[2] == k


def is_nearly_free(exp0, k: int, saturated: bool, second: GradedGenerators | None) -> bool:
    """4 generators, d3 = d4, d1 + d2 + d3 = k, saturated J_f, one second syzygy
    with coefficient degrees (d3-d1+1, d3-d2+1, 1, 1)."""
    if not nearly_free_degrees_ok(exp0, k) or not saturated or second is None:
        return False
    if len(second.vectors) != 1:
        return False
    d1, d2, d3, _ = sorted(exp0)
    return second.vectors[0].component_degrees() == (d3 - d1 + 1, d3 - d2 + 1, 1, 1)


@dataclass
class ClassificationReport:
    name: str
    k: int
    field: str
    essential: bool
    poincare: list
    split: SplitResult
    lines: dict
    points: dict
    cynk_szemberg: MembershipReport
    criteria: dict
    exp0: tuple
    free: bool
    nearly_free: bool
    type: int
    hyperplanes: list = field(default_factory=list)
    saturated: bool | None = None
    second_syzygy_degrees: tuple | None = None
    generators: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "name": self.name,
            "k": self.k,
            "field": self.field,
            "hyperplanes": [list(h) for h in self.hyperplanes],
            "essential": self.essential,
            "poincare": list(self.poincare),
            "split": {"splits": self.split.splits,
                      "exponents": list(self.split.exponents) if self.split.exponents else None},
            "lines": {"by_multiplicity": {str(m): [list(t) for t in v]
                                          for m, v in self.lines.items()}},
            "points": {"by_multiplicity": {str(m): [list(t) for t in v]
                                           for m, v in self.points.items()}},
            "counts": {"literal_eq1": self.cynk_szemberg.literal_eq1,
                       "corrected_pair": self.cynk_szemberg.corrected_pair,
                       "corrected_triple": self.cynk_szemberg.corrected_triple},
            "cynk_szemberg": self.cynk_szemberg.to_json(),
            "criteria": {name: v.to_json() for name, v in self.criteria.items()},
            "exp0": list(self.exp0),
            "free": self.free,
            "nearly_free": self.nearly_free,
            "type": self.type,
            "saturated": self.saturated,
            "second_syzygy_degrees": (list(self.second_syzygy_degrees)
                                      if self.second_syzygy_degrees is not None else None),
        }


def classify(A: Arrangement, strategy: str = "normal") -> ClassificationReport:
    """Lattice, Poincare polynomial, criteria, AR(f) generators and verdicts."""
    A.check_distinct()
    if not essential(A):
        raise NotEssentialError(f"{A.name or 'arrangement'} is not essential")
    L = build_lattice(A)
    pi = poincare(L, mobius(L))
    split = split_over_integers(pi)
    tables = incidence_tables(L)
    cs = cynk_szemberg_check(A, L)
    criteria: dict[str, CriterionVerdict] = {"double_line": double_line_criterion(L, A.k)}

    f = A.defining_polynomial()
    J = jacobian(f)
    gens = syzygy_generators(J, strategy=strategy)
    exp0 = gens.sorted_degrees()
    free = is_free(exp0, A, gens)

    saturated = second = None
    if nearly_free_degrees_ok(exp0, A.k):
        saturated = saturation(Ideal(J))[1]
        second = second_syzygies(gens)
    nearly_free = is_nearly_free(exp0, A.k, bool(saturated), second)

    t = type_of(exp0, A.k)
    if free != (t == 0):
        raise InconsistencyError(f"{A.name}: free={free} but type={t}")
    if free and (not split.splits or sorted(split.exponents) != sorted((1,) + exp0)):
        raise InconsistencyError(f"{A.name}: free but the Poincare polynomial does not "
                                 "factor with the exponents (1, exp0)")
    if free and criteria["double_line"].verdict.value == "NotFree":
        raise InconsistencyError(f"{A.name}: double-line criterion contradicts freeness")

    return ClassificationReport(
        name=A.name, k=A.k, field=A.field_descriptor(), essential=True, poincare=pi,
        split=split, lines=tables.lines, points=tables.points, cynk_szemberg=cs,
        criteria=criteria, exp0=exp0, free=free, nearly_free=nearly_free, type=t,
        hyperplanes=[[format_scalar(c) for c in f.coefficients] for f in A.forms],
        saturated=saturated,
        second_syzygy_degrees=(second.vectors[0].component_degrees()
                               if second is not None and len(second.vectors) == 1 else None),
        generators=list(gens.vectors),
    )

