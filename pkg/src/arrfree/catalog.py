"""Built-in arrangements: the fourteen rigid Cynk-Szemberg octics, the Boolean
arrangement, and the one-parameter families No. 4 and No. 266.

Forms are stored exactly as printed (no rescaling), hyperplanes numbered in
print order starting from the coordinate hyperplanes x, y, z, w.  Each fixed
entry may carry an ``expected`` block with values taken from the printed
tables; see :data:`FIXTURES`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .arith import QuadExt, Rational, parse_scalar
from .arrangement import Arrangement

COORDS = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]


def _q(a, b, d):
    return QuadExt(Rational(a), Rational(b), d)


def _sqrt_m3(a, b):
    return _q(a, b, -3)


def _sqrt5(a, b):
    return _q(a, b, 5)


_RIGID_FORMS = {
    "cs1": [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)],
    "cs3": [(1, 1, 0, 0), (0, 1, 1, 0), (0, 1, 0, -1), (1, -1, -1, 1)],
    "cs19": [(1, 1, 0, 0), (0, 1, 1, 0), (1, 0, -1, -1), (1, 1, 1, -1)],
    "cs32": [(1, 1, 0, 0), (0, 1, 1, 0), (1, -1, -1, -1), (1, 1, -1, 1)],
    "cs69": [(1, 1, 0, 0), (1, -1, 1, 0), (1, -1, 0, -1), (1, 1, -1, -1)],
    "cs93": [(1, 1, 0, 0), (1, -1, 1, 0), (0, 1, -1, -1), (1, 0, 1, -1)],
    "cs238": [(1, 1, 1, -1), (1, 1, -1, 1), (1, -1, 1, 1), (-1, 1, 1, 1)],
    "cs239": [(1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1), (0, 1, 1, 1)],
    "cs240": [(1, 1, 1, 0), (1, 1, -1, 1), (1, -1, 1, 1), (1, -1, -1, -1)],
    "cs241": [(1, 1, 1, 1), (1, 1, -1, -1), (0, 1, -1, 1), (1, 0, 1, -1)],
    "cs245": [(1, 1, 1, 0), (0, 1, 1, 1), (1, -1, 0, -1), (1, -1, 1, 1)],
    # (sqrt(-3)-1)x - 2y + (sqrt(-3)-1)z  and  2y + (1-sqrt(-3))z - 2w
    "csA": [(1, 1, 0, 0), (1, 1, 1, -1),
            (_sqrt_m3(-1, 1), -2, _sqrt_m3(-1, 1), 0),
            (0, 2, _sqrt_m3(1, -1), -2)],
    "csB": [(1, 1, 1, 0), (1, 0, 1, -1),
            (_sqrt_m3(-1, 1), _sqrt_m3(1, 1), -2, 2),
            (_sqrt_m3(-1, 1), _sqrt_m3(-1, 1), -2, _sqrt_m3(1, 1))],
    "csC": [(1, 1, 1, 0),
            (0, _sqrt5(-1, 1), -2, 2),
            (2, 2, 0, _sqrt5(-1, 1)),
            (_sqrt5(3, -1), 2, _sqrt5(1, -1), _sqrt5(-1, 1))],
}

_FIELDS = {"csA": -3, "csB": -3, "csC": 5}

RIGID = ["cs1", "cs3", "cs19", "cs32", "cs69", "cs93", "cs238", "cs239", "cs240",
         "cs241", "cs245", "csA", "csB", "csC"]
FIXED = RIGID + ["boolean4"]
FAMILIES = ["family4", "family266"]


def _tuples(text: str) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in m.split(",")) for m in re.findall(r"\(([\d,]+)\)", text)]


def _double_lines(k: int = 8) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


@dataclass
class Fixture:
    """Values printed for one arrangement, with notes on known defects.

    ``lines`` / ``points`` are the printed incidence tables as 1-based member
    tuples (``None`` when the printed table is unusable).  ``notes`` explain
    every place where the print is known to be incomplete or garbled; the
    recomputed lattice is authoritative in those cases.
    """

    poincare: tuple | None = None
    exp0: tuple | None = None
    type: int | None = None
    free: bool | None = None
    nearly_free: bool | None = None
    lines: list | None = None
    points: list | None = None
    notes: list = field(default_factory=list)
    expected_corrected: dict = field(default_factory=dict)


FIXTURES: dict[str, Fixture] = {
    "cs1": Fixture(
        poincare=(1, 8, 24, 31, 14), exp0=(2, 3, 3, 3), type=1, free=False, nearly_free=True,
        lines=_tuples("(1,2,5) (1,3) (1,4,8) (1,6) (1,7) (2,3,6) (2,4) (2,7) (2,8) (3,4,7)"
                      "(3,5) (3,8) (4,5) (4,6) (5,6) (5,7) (5,8) (6,7) (6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5,8) (1,2,5,7) (1,3,4,7,8) (1,4,6,8) (1,6,7) (2,3,4,6,7)"
                       "(2,3,6,8) (2,7,8) (3,4,5,7) (3,5,8) (4,5,6) (5,6,7,8)"),
        notes=["points table has an empty cell; the 13 printed points are complete"],
    ),
    "cs3": Fixture(
        poincare=(1, 8, 25, 35, 17), exp0=(3, 3, 3, 3, 3), type=2, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3,6) (2,4,7) (2,8) (3,4)"
                      "(3,5) (3,7) (3,8) (4,5) (4,6) (4,8) (5,6) (5,7) (5,8) (6,7) (6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5,7) (1,2,5,8) (1,3,4) (1,3,7,8) (1,4,6,8) (1,6,7)"
                       "(2,3,4,6,7) (2,3,6,8) (2,4,7,8) (3,4,5) (3,4,8) (3,5,7) (3,5,8) (4,5,6)"
                       "(4,5,8) (5,6,7,8)"),
    ),
    "cs19": Fixture(
        poincare=(1, 8, 26, 38, 19), exp0=(3, 3, 3, 3), type=2, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3,6) (2,4) (2,7) (2,8) (3,4) (3,5)"
                      "(3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7) (6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5) (1,2,5,7) (1,2,5,8) (1,3,4,7) (1,3,8) (1,4,6,8)"
                       "(1,6,7) (1,7,8) (2,3,4,6) (2,3,6,7,8) (2,4,7) (2,4,8) (3,4,5,8) (3,5,7)"
                       "(4,5,6,7) (4,7,8) (5,6,8) (5,7,8)"),
    ),
    "cs32": Fixture(
        poincare=(1, 8, 26, 39, 20), exp0=(3, 3, 3, 4, 4, 4), type=2, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3,6) (2,4) (2,7) (2,8) (3,4) (3,5)"
                      "(3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7) (6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5) (1,2,5,7) (1,2,5,8) (1,3,4) (1,3,7,8) (1,4,6,7)"
                       "(1,4,8) (1,6,8) (2,3,4,6) (2,3,6,7) (2,3,6,8) (2,4,7,8) (3,4,5,8) (3,4,7)"
                       "(3,5,7) (4,5,6) (4,5,7) (4,6,8) (5,6,7,8)"),
    ),
    "cs69": Fixture(
        poincare=(1, 8, 27, 41, 21), exp0=(3, 3, 3, 4, 4), type=2, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3) (2,4) (2,6) (2,7) (2,8) (3,4)"
                      "(3,5) (3,6) (3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7)"
                      "(6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5,7) (1,2,5,8) (1,3,4) (1,3,7) (1,3,8) (1,4,6,8)"
                       "(1,6,7) (1,7,8) (2,3,4) (2,3,7,8) (2,4,6) (2,4,8) (2,6,7) (2,6,8)"
                       "(3,4,5,8) (3,4,6,7) (3,5,7) (3,6,8) (4,5,6) (4,7,8) (5,6,7,8)"),
    ),
    "cs93": Fixture(
        poincare=(1, 8, 27, 42, 22), exp0=(3, 3, 4, 4, 4, 4, 4), type=3, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3) (2,4) (2,6) (2,7) (2,8) (3,4)"
                      "(3,5) (3,6) (3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7)"
                      "(6,8) (7,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5) (1,2,5,7) (1,2,5,8) (1,3,4,8) (1,3,7) (1,4,6,7)"
                       "(1,6,8) (1,7,8) (2,3,4,7) (2,3,8) (2,4,6,8) (2,6,7) (2,7,8) (3,4,5)"
                       "(3,4,6) (3,5,7) (3,5,8) (3,6,7,8) (4,5,6) (4,5,7,8) (5,6,7) (5,6,8)"),
    ),
    "cs238": Fixture(
        exp0=(3, 3, 4, 4, 4, 4), type=3, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3) (1,2,4) (1,2,5,6) (1,2,7,8) (1,3,4) (1,3,5,7) (1,3,6,8) (1,4,5,8)"
                       "(1,4,6,7) (2,3,4) (2,3,5,8) (2,3,6,7) (2,4,5,7) (2,4,6,8) (3,4,5,6)"
                       "(3,4,7,8) (5,6,7) (5,6,8) (5,7,8) (6,7,8)"),
        notes=["the arrangement is called A_283 once in the text; heading and equation say 238"],
    ),
    "cs239": Fixture(
        exp0=(4,) * 10, type=5, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3,5) (1,2,4,6) (1,2,7,8) (1,3,4,7) (1,3,6,8) (1,4,5,8) (1,5,6) (1,5,7)"
                       "(1,6,7) (2,3,4,8) (2,3,6,7) (2,4,5,7) (2,5,6) (2,5,8) (2,6,8) (3,4,5,6)"
                       "(3,5,7) (3,5,8) (3,7,8) (4,6,7) (4,6,8) (4,7,8) (5,6,7) (5,6,8) (5,7,8)"
                       "(6,7,8)"),
    ),
    "cs240": Fixture(
        exp0=(4,) * 10, type=5, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3,5) (1,2,4) (1,2,6) (1,2,7,8) (1,3,4) (1,3,6,8) (1,3,7) (1,4,5,8)"
                       "(1,4,6,7) (1,5,6) (1,5,7) (2,3,4) (2,3,6,7) (2,3,8) (2,4,5,7) (2,4,6,8)"
                       "(2,5,6) (2,5,8) (3,4,5,6) (3,4,7,8) (3,5,7) (3,5,8) (5,6,7) (5,6,8)"
                       "(5,7,8) (6,7,8)"),
    ),
    "cs241": Fixture(
        exp0=(3, 4, 4, 4, 4, 4, 4), type=4, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3) (1,2,4) (1,2,5,6) (1,2,7,8) (1,3,4,8) (1,3,5,7) (1,3,6) (1,4,5)"
                       "(1,4,6,7) (1,5,8) (1,6,8) (2,3,4,7) (2,3,5) (2,3,6,8) (2,4,5,8) (2,4,6)"
                       "(2,5,7) (2,6,7) (3,4,5,6) (3,5,8) (3,6,7) (3,7,8) (4,5,7) (4,6,8) (4,7,8)"
                       "(5,6,7,8)"),
    ),
    "cs245": Fixture(
        exp0=(4,) * 9, type=5, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3,5) (1,2,4,7) (1,2,6,8) (1,3,4) (1,3,6,7) (1,3,8) (1,4,5,6) (1,4,8)"
                       "(1,5,7) (1,5,8) (1,7,8) (2,3,4,6) (2,3,7) (2,3,8) (2,4,5,8) (2,5,6,7)"
                       "(2,7,8) (3,4,5) (3,4,7,8) (3,5,6) (3,5,7) (3,5,8) (3,6,8) (4,5,7) (4,6,7)"
                       "(4,6,8) (5,6,8) (5,7,8) (6,7,8)"),
    ),
    "csA": Fixture(
        poincare=(1, 8, 27, 42, 22), exp0=(3, 3, 4, 4, 4, 4, 4), type=3, free=False,
        lines=_tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3) (2,4) (2,6) (2,7) (2,8) (3,4)"
                      "(3,5) (3,6) (3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7)"
                      "(6,8) (7,8)"),
        points=_tuples("(1,2,3,5,7) (1,2,4,5) (1,2,5,6) (1,2,5,8) (1,3,4) (1,3,6,8) (1,4,6)"
                       "(1,4,7,8) (1,6,7) (2,3,4,8) (2,3,6) (2,4,6,7) (2,6,8) (2,7,8) (3,4,5,6)"
                       "(3,4,7) (3,5,8) (3,6,7) (3,7,8) (4,5,7) (4,5,8) (4,6,8) (5,6,7,8)"),
    ),
    "csB": Fixture(
        exp0=(4,) * 9, type=5, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3,5) (1,2,4) (1,2,6,7) (1,2,8) (1,3,4,6) (1,3,7,8) (1,4,5) (1,4,7)"
                       "(1,4,8) (1,5,6,8) (1,5,7) (2,3,4) (2,3,6) (2,3,7) (2,3,8) (2,4,5,6)"
                       "(2,4,7,8) (2,5,7) (2,5,8) (2,6,8) (3,4,5,8) (3,4,7) (3,5,6,7) (3,6,8)"
                       "(4,5,7) (4,6,7) (4,6,8) (5,7,8) (6,7,8)"),
    ),
    "csC": Fixture(
        exp0=(4,) * 9, type=5, free=False,
        lines=_double_lines(),
        points=_tuples("(1,2,3,5) (1,2,4,7) (1,2,6,8) (1,3,4) (1,3,6) (1,3,7,8) (1,4,5) (1,4,6)"
                       "(1,4,8) (1,5,6,7) (1,5,8) (2,3,4,6) (2,3,7) (2,3,8) (2,4,5) (2,4,8)"
                       "(2,5,6) (2,5,7,8) (2,6,7) (3,4,5,7) (3,4,8) (3,5,6) (3,5,8) (3,6,7)"
                       "(3,6,8) (4,5,6,8) (4,6,7) (4,7,8) (6,7,8)"),
    ),
    "boolean4": Fixture(exp0=(1, 1, 1), type=0, free=True, lines=_double_lines(4),
                        points=[(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]),
    # degeneration of family No. 4 at (A:B) = (1:0)
    "family4(1,0)": Fixture(
        poincare=(1, 8, 23, 28, 12), exp0=(2, 2, 3), type=0, free=True,
        lines=_tuples("(1,2,5) (1,3) (1,4,7) (1,6) (1,8) (2,3,6) (2,4) (2,7,8) (3,4) (3,5)"
                      "(3,7) (3,8) (4,5,8) (4,6) (5,6) (5,7) (6,7) (6,8)"),
        points=_tuples("(1,2,3,5,6) (1,2,4,5,7,8) (1,3,4,7) (1,3,8) (1,4,6,7) (1,6,8) (2,3,4,6)"
                       "(2,3,6,7,8) (3,4,5,8) (3,5,7) (4,5,6,8) (5,6,7)"),
    ),
}

# Printed tables for generic members of the families (lattice shape only).
FAMILY_TABLES = {
    "family4": {
        "lines": _tuples("(1,2,5) (1,3) (1,4) (1,6) (1,7) (1,8) (2,3,6) (2,4) (2,7,8) (3,4)"
                         "(3,5) (3,7) (3,8) (4,5) (4,6) (4,7) (4,8) (5,6) (5,7) (5,8) (6,7) (6,8)"),
        "points": None,
        "notes": ["the printed points table repeats line-like pairs and triples and "
                  "cannot be a table of rank-3 flats; only the lines table is used"],
    },
    "family266": {
        "lines": _double_lines(),
        "points": _tuples("(1,2,3,7) (1,2,4,6) (1,2,5,8) (1,3,4) (1,3,5,6) (1,3,8) (1,4,5) (1,4,7)"
                          "(1,4,8) (1,5,7) (1,6,7) (1,6,8) (1,7,8) (2,3,4,5) (2,3,6,8) (2,4,7)"
                          "(2,4,8) (2,5,6,7) (2,7,8) (3,4,6) (3,4,7) (3,4,8) (3,5,7) (3,5,8)"
                          "(3,6,7) (3,7,8) (4,5,6) (4,5,7,8) (4,6,7) (4,6,8) (5,6,8) (6,7,8)"),
        "notes": [],
    },
}


class UnknownEntryError(LookupError):
    pass


def _rational_param(x):
    if isinstance(x, str):
        return parse_scalar(x)
    return Rational(x) if isinstance(x, int) else x


def family4(A, B) -> Arrangement:
    """xyzw(x+y)(y+z)(Ax+By+Bz-Aw)(Ax+Ay+Bz-Aw).

    Admissibility ((A:B) not (1:0), (0:1), (1:1)) is recorded in
    ``meta["admissible"]``; the arrangement is built either way, but
    duplicate hyperplanes (at (1:1)) are left for downstream validation.
    """
    A, B = _rational_param(A), _rational_param(B)
    if not A and not B:
        raise ValueError("family4 needs (A, B) != (0, 0)")
    forms = COORDS + [(1, 1, 0, 0), (0, 1, 1, 0), (A, B, B, -A), (A, A, B, -A)]
    admissible = bool(A) and bool(B) and A != B
    return Arrangement(forms, name=f"family4({_fmt(A)},{_fmt(B)})",
                       meta={"admissible": admissible, "family": "family4", "params": (A, B)},
                       validate=False)


def family266(A, B) -> Arrangement:
    """xyzw(y-2z+2w)(2x+y+2w)(Ax+By+Az)(Ax+(A+B)y-Az+Bw)."""
    A, B = _rational_param(A), _rational_param(B)
    if not A and not B:
        raise ValueError("family266 needs (A, B) != (0, 0)")
    forms = COORDS + [(0, 1, -2, 2), (2, 1, 0, 2), (A, B, A, 0), (A, A + B, -A, B)]
    admissible = (bool(A) and bool(B) and bool(A + 4 * B) and bool(A - 2 * B)
                  and bool(A + 2 * B) and bool(A + B))
    return Arrangement(forms, name=f"family266({_fmt(A)},{_fmt(B)})",
                       meta={"admissible": admissible, "family": "family266", "params": (A, B)},
                       validate=False)


def _fmt(x) -> str:
    from .arith import format_scalar
    return format_scalar(x)


_FAMILY_RE = re.compile(r"^(family4|family266)\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)$")


def names() -> list[str]:
    return FIXED + ["family4(A,B)", "family266(A,B)"]


def get(name: str) -> Arrangement:
    """Look up a fixed entry or instantiate ``family4(A,B)`` / ``family266(A,B)``."""
    if name in _RIGID_FORMS:
        forms = COORDS + _RIGID_FORMS[name]
        return Arrangement(forms, name=name, field=_FIELDS.get(name), meta={"rigid": True})
    if name == "boolean4":
        return Arrangement(COORDS, name="boolean4")
    m = _FAMILY_RE.match(name.replace(" ", ""))
    if m:
        fam, a, b = m.groups()
        try:
            A, B = parse_scalar(a), parse_scalar(b)
        except ValueError as exc:
            raise UnknownEntryError(f"bad family parameters in {name!r}: {exc}") from None
        return (family4 if fam == "family4" else family266)(A, B)
    raise UnknownEntryError(f"unknown catalog entry {name!r}")


def fixture(name: str) -> Fixture | None:
    return FIXTURES.get(name)
