"""Central hyperplane arrangements: an ordered list of linear forms plus metadata."""

from __future__ import annotations

from typing import Iterable, Sequence

from .arith import embed, field_of
from .poly import LinearForm, Polynomial, expand_product


class ArrangementError(ValueError):
    pass


class DuplicateHyperplaneError(ArrangementError):
    def __init__(self, i: int, j: int):
        super().__init__(f"hyperplanes {i + 1} and {j + 1} are proportional")
        self.indices = (i, j)


class Arrangement:
    """Hyperplanes ``ker(alpha_i)`` given by nonzero linear forms over one field.

    ``field`` is ``None`` for Q or the radicand ``d`` of Q(sqrt d).  When a
    radicand is declared every coefficient is stored as a :class:`QuadExt`,
    so reports print them uniformly.  Indices are 0-based internally and
    1-based in anything printed.
    """

    __slots__ = ("forms", "name", "field", "meta")

    def __init__(self, forms: Iterable, name: str = "", field: int | None = None,
                 meta: dict | None = None, validate: bool = True):
        forms = [f if isinstance(f, LinearForm) else LinearForm(f) for f in forms]
        if not forms:
            raise ArrangementError("an arrangement needs at least one hyperplane")
        seen = {field_of(c) for f in forms for c in f.coefficients} - {None}
        if field is None and seen:
            if len(seen) > 1:
                raise ArrangementError("coefficients from different quadratic fields")
            field = seen.pop()
        elif seen - {field}:
            raise ArrangementError(f"coefficient outside the declared field Q(sqrt {field})")
        if field is not None:
            forms = [LinearForm(tuple(embed(c, field) for c in f.coefficients)) for f in forms]
        self.forms = tuple(forms)
        self.name = name
        self.field = field
        self.meta = dict(meta or {})
        if validate:
            self.check_distinct()

    def check_distinct(self) -> None:
        """Raise :class:`DuplicateHyperplaneError` on proportional forms."""
        first: dict = {}
        for j, f in enumerate(self.forms):
            i = first.setdefault(f.normalized, j)
            if i != j:
                raise DuplicateHyperplaneError(i, j)

    def __len__(self):
        return len(self.forms)

    @property
    def k(self) -> int:
        return len(self.forms)

    @property
    def dim(self) -> int:
        return len(self.forms[0].coefficients)

    def normals(self) -> list[tuple]:
        return [f.coefficients for f in self.forms]

    def defining_polynomial(self) -> Polynomial:
        return expand_product(list(self.forms))

    def permuted(self, order: Sequence[int]) -> "Arrangement":
        """Same hyperplanes listed as ``forms[order[0]], forms[order[1]], ...``."""
        return Arrangement([self.forms[i] for i in order], self.name, self.field, self.meta,
                           validate=False)

    def field_descriptor(self) -> str:
        return "rational" if self.field is None else f"quadratic {self.field}"

    def __repr__(self):
        return f"Arrangement({self.name or '?'}, k={self.k}, field={self.field_descriptor()})"


def as_arrangement(obj) -> Arrangement:
    if isinstance(obj, Arrangement):
        return obj
    return Arrangement(obj)
