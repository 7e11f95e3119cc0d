"""Command line interface.

Sources are either a path to an ``.arr`` file or ``catalog:NAME``.  Exit
codes: 0 ok, 1 regression mismatch, 2 usage or input error, 3 internal
inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources

from . import catalog
from .analyzer import SCHEMA_VERSION, InconsistencyError, classify
from .arrfile import ArrFileError, export_arrangement, load_arrangement
from .criteria import PreconditionError, split_over_integers
from .lattice import build_lattice, incidence_tables, poincare
from .oracle import kernel_scan
from .regression import entries as regression_entries
from .regression import verify_all

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def load_schema() -> dict:
    text = resources.files("arrfree").joinpath("schemas/output.schema.json").read_text("utf-8")
    return json.loads(text)


def schema_for(kind: str) -> dict:
    """Schema for one output kind: report, lattice, poincare, catalog, verify, oracle."""
    schema = load_schema()
    if kind not in schema["$defs"]:
        raise KeyError(kind)
    return {**schema, "$ref": f"#/$defs/{kind}"}


def resolve(source: str):
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        try:
            A = catalog.get(name)
        except catalog.UnknownEntryError as exc:
            raise UsageError(str(exc)) from None
        except ValueError as exc:
            raise UsageError(f"{name}: {exc}") from None
        A.check_distinct()
        return A
    try:
        return load_arrangement(source)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def format_poly(coeffs) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        t = "" if i == 0 else "t" if i == 1 else f"t^{i}"
        parts.append(f"{c}{t}" if c != 1 or not t else t)
    return " + ".join(parts) or "0"


def _by_mult(tables: dict) -> dict:
    return {"by_multiplicity": {str(m): [list(t) for t in v] for m, v in tables.items()}}


def _fmt_members(ts) -> str:
    return " ".join("(" + ",".join(map(str, t)) + ")" for t in ts)


def _yes(flag) -> str:
    return "yes" if flag else "no"


# -- commands -------------------------------------------------------------------

def cmd_lattice(args, out):
    A = resolve(args.source)
    L = build_lattice(A)
    tables = incidence_tables(L)
    if args.json:
        out(dumps({"schema_version": SCHEMA_VERSION, "name": A.name, "k": A.k, "rank": L.rank,
                   "flats_by_rank": [len(level) for level in L.by_rank],
                   "lines": _by_mult(tables.lines), "points": _by_mult(tables.points)}))
        return EXIT_OK
    out(f"{A.name or '<unnamed>'}: k = {A.k}, rank {L.rank}, "
        f"flats by rank {[len(level) for level in L.by_rank]}")
    for m, ts in tables.lines.items():
        out(f"lines of multiplicity {m} ({len(ts)}): {_fmt_members(ts)}")
    for m, ts in tables.points.items():
        out(f"points of multiplicity {m} ({len(ts)}): {_fmt_members(ts)}")
    return EXIT_OK


def cmd_poincare(args, out):
    A = resolve(args.source)
    pi = poincare(build_lattice(A))
    split = split_over_integers(pi) if len(pi) >= 5 else None
    if args.json:
        out(dumps({"schema_version": SCHEMA_VERSION, "name": A.name, "poincare": pi,
                   "split": {"splits": bool(split and split.splits),
                             "exponents": list(split.exponents) if split and split.splits else None}}))
        return EXIT_OK
    out(f"pi({A.name or 'A'}, t) = {format_poly(pi)}")
    if split is not None and split.splits:
        out("splits as " + "".join(f"(1+{d}t)" if d != 1 else "(1+t)" for d in split.exponents))
    elif split is not None:
        out("does not split over the integers")
    return EXIT_OK


def cmd_classify(args, out):
    A = resolve(args.source)
    rep = classify(A, strategy=args.strategy)
    if args.json:
        out(dumps(rep.to_json()))
        return EXIT_OK
    cs = rep.cynk_szemberg
    lit = cs.literal_eq1
    out(f"name: {rep.name or '<unnamed>'}")
    out(f"field: {rep.field}")
    out(f"k: {rep.k}")
    out(f"poincare: {format_poly(rep.poincare)}")
    out("split: " + (f"yes, exponents {tuple(rep.split.exponents)}" if rep.split.splits else "no"))
    out("lines: " + ", ".join(f"{len(v)} of multiplicity {m}" for m, v in rep.lines.items()))
    out("points: " + ", ".join(f"{len(v)} of multiplicity {m}" for m, v in rep.points.items()))
    out(f"Cynk-Szemberg conditions: {'pass' if cs.passes else 'fail'}"
        + "".join(f"; {kind} {tuple(mem)} has multiplicity {mult}"
                  for kind, mem, mult in cs.failures))
    out(f"literal counts: sum C(q,3) t_q = {lit['sum_binom_q3_tq']} (naive {lit['expected_binom_q3']}), "
        f"sum t_p = {lit['sum_tp1']} (naive {lit['expected_tp1']})")
    out(f"pair identity: {cs.corrected_pair['lhs']} = {cs.corrected_pair['rhs']}; "
        f"triple identity: {cs.corrected_triple['lhs']} = {cs.corrected_triple['rhs']}")
    for name, v in rep.criteria.items():
        out(f"{name.replace('_', '-')} criterion: {v.verdict.value} ({v.reason})")
    out(f"exp0: {tuple(rep.exp0)}")
    out(f"type: {rep.type}")
    out(f"free: {_yes(rep.free)}")
    out(f"nearly free: {_yes(rep.nearly_free)}")
    return EXIT_OK


def cmd_catalog(args, out):
    if args.action == "export":
        try:
            A = catalog.get(args.name)
        except (catalog.UnknownEntryError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        out(export_arrangement(A).rstrip("\n"))
        return EXIT_OK
    rows = []
    for name in catalog.names():
        if "(" in name:
            rows.append({"name": name, "field": None, "has_fixture": False})
            continue
        A = catalog.get(name)
        rows.append({"name": name, "field": A.field_descriptor(),
                     "has_fixture": catalog.fixture(name) is not None})
    if args.json:
        out(dumps({"schema_version": SCHEMA_VERSION, "entries": rows}))
    else:
        for r in rows:
            kind = r["field"] or "parametric"
            out(f"{r['name']:<16} {kind:<14} {'fixtures' if r['has_fixture'] else ''}".rstrip())
    return EXIT_OK


def cmd_verify(args, out):
    names = regression_entries()
    if args.filter:
        names = [n for n in names if n == args.filter]
        if not names:
            raise UsageError(f"no fixture-bearing entry named {args.filter!r}")
    results = verify_all(names, jobs=args.jobs)
    ok = all(r.ok for r in results)
    if args.json:
        out(dumps({"schema_version": SCHEMA_VERSION, "ok": ok,
                   "entries": [r.to_json() for r in results]}))
    else:
        for r in results:
            out(r.render())
        bad = [r.name for r in results if not r.ok]
        out(f"{len(results) - len(bad)}/{len(results)} entries match"
            + (f"; mismatches: {', '.join(bad)}" if bad else ""))
    if any(r.error and "InconsistencyError" in r.error for r in results):
        return EXIT_INTERNAL
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle(args, out):
    A = resolve(args.source)
    res = kernel_scan(A.defining_polynomial(), d_max=args.dmax)
    if args.json:
        out(dumps({"schema_version": SCHEMA_VERSION, "name": A.name, "dmax": args.dmax,
                   "degrees": list(res.degrees), "rows": [r.to_json() for r in res.rows]}))
    else:
        out(f"exp0 up to degree {args.dmax}: {tuple(res.degrees)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arrfree",
                                description="Exact classification of hyperplane arrangements in C^4.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("lattice", cmd_lattice, "intersection lattice and incidence tables"),
                               ("poincare", cmd_poincare, "Poincare polynomial and split test")):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("source", help="path to an .arr file or catalog:NAME")
        s.add_argument("--json", action="store_true")
        s.set_defaults(func=fn)

    s = sub.add_parser("classify", help="full classification report")
    s.add_argument("source")
    s.add_argument("--json", action="store_true")
    s.add_argument("--strategy", choices=("normal", "reverse"), default="normal",
                   help="pair selection order inside a degree (result does not depend on it)")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("catalog", help="list or export built-in arrangements")
    s.add_argument("action", choices=("list", "export"))
    s.add_argument("name", nargs="?")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("verify-paper", help="recompute every entry with printed values")
    s.add_argument("--filter", metavar="NAME")
    s.add_argument("--jobs", type=int, default=1, help="worker processes (output order is fixed)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("oracle", help="degree sequence by plain linear algebra")
    s.add_argument("source")
    s.add_argument("--dmax", type=int, default=12)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or (lambda s: print(s))
    err = err or (lambda s: print(s, file=sys.stderr))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "catalog" and args.action == "export" and not args.name:
        err("arrfree catalog export: a NAME is required")
        return EXIT_USAGE
    if getattr(args, "dmax", 0) < 0:
        err("arrfree oracle: --dmax must be non-negative")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except ArrFileError as exc:
        err(exc.format())
        return EXIT_USAGE
    except (UsageError, PreconditionError, ValueError) as exc:
        err(f"arrfree {args.command}: {exc}")
        return EXIT_USAGE
    except (InconsistencyError, ArithmeticError) as exc:
        err(f"arrfree {args.command}: internal inconsistency: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
