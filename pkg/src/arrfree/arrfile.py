"""The ``.arr`` text format for arrangements.

::

    # comment
    field quadratic -3          # or: field rational
    name csA                    # optional
    hyperplane 1 0 0 0
    hyperplane -1:1 2 0 0       # p/q:r/s means p/q + (r/s) sqrt(d)

The ``field`` line must come before any hyperplane.  Errors carry a
1-based line and column and one of the kinds in :data:`ERROR_KINDS`.
"""

from __future__ import annotations

import re

from .arith import ScalarSyntaxError, format_scalar, is_squarefree, parse_scalar
from .arrangement import Arrangement, DuplicateHyperplaneError
from .poly import NVARS

ERROR_KINDS = ("syntax", "field-mismatch", "duplicate-hyperplane", "zero-form", "header", "empty")

_TOKEN = re.compile(r"\S+")


class ArrFileError(ValueError):
    def __init__(self, kind: str, message: str, line: int = 0, column: int = 0, path: str = ""):
        assert kind in ERROR_KINDS
        self.kind, self.line, self.column, self.path = kind, line, column, path
        self.message = message
        super().__init__(self.format())

    def format(self) -> str:
        where = self.path or "<input>"
        if self.line:
            where += f":{self.line}:{self.column}"
        return f"{where}: error[{self.kind}]: {self.message}"


def _tokens(raw: str):
    text = raw.split("#", 1)[0]
    return [(m.group(), m.start() + 1) for m in _TOKEN.finditer(text)]


def parse_arrangement(text: str, path: str = "") -> Arrangement:
    """Parse ``.arr`` text into an :class:`Arrangement` (see module docstring)."""
    field_set = False
    d = None
    name = ""
    forms: list = []
    where: list[tuple[int, int]] = []     # (line, column) of each hyperplane keyword

    def fail(kind, msg, line=0, col=0):
        raise ArrFileError(kind, msg, line, col, path)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw)
        if not toks:
            continue
        word, col = toks[0]
        args = toks[1:]
        if word == "field":
            if field_set:
                fail("header", "field declared twice", lineno, col)
            if forms:
                fail("header", "field must be declared before the hyperplanes", lineno, col)
            if [t for t, _ in args] == ["rational"]:
                d = None
            elif len(args) == 2 and args[0][0] == "quadratic":
                try:
                    d = int(args[1][0])
                except ValueError:
                    fail("syntax", f"bad radicand {args[1][0]!r}", lineno, args[1][1])
                if d in (0, 1) or not is_squarefree(d):
                    fail("header", f"radicand {d} is not a squarefree integer other than 0, 1",
                         lineno, args[1][1])
            else:
                fail("syntax", "expected 'field rational' or 'field quadratic <d>'", lineno, col)
            field_set = True
        elif word == "name":
            if len(args) != 1:
                fail("syntax", "expected 'name <identifier>'", lineno, col)
            name = args[0][0]
        elif word == "hyperplane":
            if not field_set:
                fail("header", "missing 'field' line before the first hyperplane", lineno, col)
            if len(args) != NVARS:
                pos = args[NVARS][1] if len(args) > NVARS else col
                fail("syntax", f"expected {NVARS} coefficients, got {len(args)}", lineno, pos)
            coeffs = []
            for tok, c in args:
                if ":" in tok and d is None:
                    fail("field-mismatch", f"quadratic coefficient {tok!r} in a rational field",
                         lineno, c)
                try:
                    coeffs.append(parse_scalar(tok, d))
                except ScalarSyntaxError as exc:
                    fail("syntax", str(exc), lineno, c)
            if not any(coeffs):
                fail("zero-form", "hyperplane with all coefficients zero", lineno, col)
            forms.append(tuple(coeffs))
            where.append((lineno, col))
        else:
            fail("syntax", f"unknown keyword {word!r}", lineno, col)

    if not forms:
        fail("empty", "no hyperplanes")
    A = Arrangement(forms, name=name, field=d, validate=False)
    try:
        A.check_distinct()
    except DuplicateHyperplaneError as exc:
        i, j = exc.indices
        line, col = where[j]
        fail("duplicate-hyperplane",
             f"hyperplane {j + 1} is proportional to hyperplane {i + 1} (line {where[i][0]})",
             line, col)
    return A


def load_arrangement(path: str) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read(), path=path)


def export_arrangement(A: Arrangement) -> str:
    """Inverse of :func:`parse_arrangement`, coefficient strings bit-exact."""
    out = ["field rational" if A.field is None else f"field quadratic {A.field}"]
    if A.name:
        out.append(f"name {A.name}")
    for f in A.forms:
        out.append("hyperplane " + " ".join(format_scalar(c) for c in f.coefficients))
    return "\n".join(out) + "\n"
