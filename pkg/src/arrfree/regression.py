"""Recompute every catalog entry that carries printed values and diff field by field.

Printed values are the expected side and recomputed values the actual side.
Incidence tables are compared as multisets of member tuples.  Fixture notes
and ``expected_corrected`` values travel with each diff so a reader sees the
known defects next to the numbers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import catalog
from .analyzer import classify

# generic family members checked against the printed family lattice tables
FAMILY_SAMPLES = {"family4": "family4(1,2)", "family266": "family266(1,1)"}


@dataclass
class FieldDiff:
    field: str
    expected: object
    actual: object
    corrected: object = None

    def to_json(self) -> dict:
        out = {"field": self.field, "expected": self.expected, "actual": self.actual}
        if self.corrected is not None:
            out["expected_corrected"] = self.corrected
        return out


@dataclass
class EntryResult:
    name: str
    checked: list = field(default_factory=list)
    diffs: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return not self.diffs and self.error is None

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checked": self.checked,
                "diffs": [d.to_json() for d in self.diffs], "notes": self.notes,
                "error": self.error}

    def render(self) -> str:
        head = f"{self.name}: {'ok' if self.ok else 'MISMATCH'} ({', '.join(self.checked)})"
        lines = [head]
        if self.error:
            lines.append(f"  error: {self.error}")
        for d in self.diffs:
            lines.append(f"  {d.field}: expected {d.expected} actual {d.actual}")
            if d.corrected is not None:
                lines.append(f"  {d.field}: expected (corrected) {d.corrected}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)


def _flat_multiset(tables: dict) -> list:
    return sorted(tuple(t) for v in tables.values() for t in v)


def entries() -> list[str]:
    return list(catalog.FIXTURES) + list(FAMILY_SAMPLES.values())


def _expected(name: str) -> tuple[dict, list, dict]:
    fx = catalog.fixture(name)
    if fx is not None:
        exp = {k: getattr(fx, k) for k in ("poincare", "exp0", "type", "free", "nearly_free",
                                           "lines", "points")}
        return exp, list(fx.notes), dict(fx.expected_corrected)
    family = name.split("(")[0]
    if FAMILY_SAMPLES.get(family) == name:
        t = catalog.FAMILY_TABLES[family]
        return {"lines": t["lines"], "points": t["points"]}, list(t["notes"]), {}
    raise catalog.UnknownEntryError(f"{name!r} has no printed values")


def verify_entry(name: str) -> EntryResult:
    expected, notes, corrected = _expected(name)
    result = EntryResult(name, notes=notes)
    try:
        rep = classify(catalog.get(name))
    except Exception as exc:          # reported, never swallowed silently
        result.error = f"{type(exc).__name__}: {exc}"
        return result
    actual = {
        "poincare": tuple(rep.poincare), "exp0": tuple(rep.exp0), "type": rep.type,
        "free": rep.free, "nearly_free": rep.nearly_free,
        "lines": _flat_multiset(rep.lines), "points": _flat_multiset(rep.points),
    }
    for key, exp in expected.items():
        if exp is None:
            continue
        result.checked.append(key)
        act = actual[key]
        if key in ("lines", "points"):
            exp = sorted(tuple(t) for t in exp)
            if exp != act:
                missing = sorted(set(exp) - set(act))
                extra = sorted(set(act) - set(exp))
                result.diffs.append(FieldDiff(key, {"only_printed": missing},
                                              {"only_recomputed": extra}, corrected.get(key)))
        elif (tuple(exp) if isinstance(exp, (tuple, list)) else exp) != act:
            result.diffs.append(FieldDiff(key, exp, act, corrected.get(key)))
    return result


def verify_all(names=None, jobs: int = 1) -> list[EntryResult]:
    """Run :func:`verify_entry` over ``names``; results come back in input order."""
    names = entries() if names is None else list(names)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(verify_entry, names))
    return [verify_entry(n) for n in names]
