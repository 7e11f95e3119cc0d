"""Polynomial-level interface to the Groebner engine.

Ideals are lists of :class:`~arrfree.poly.Polynomial`; submodules of S^r are
lists of :class:`ModuleVector`.  Everything here converts to the engine's
term-key dicts, runs :func:`graded_buchberger`, and converts back.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..poly import NVARS, Polynomial
from .engine import (Basis, CSHIFT, Element, _make_monic, graded_buchberger, mono_degree,
                     mono_lcm, reduced_basis, term_comp, term_key, term_mono)


class ModuleVector:
    """Element of S^r, stored as a tuple of polynomials."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Polynomial]):
        self.components = tuple(c if isinstance(c, Polynomial) else Polynomial.constant(c)
                                for c in components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def degree(self, shifts=None) -> int | None:
        """Common degree of the components (plus ``shifts``), None if inhomogeneous or zero."""
        degs = set()
        for i, c in enumerate(self.components):
            for k, _ in c.key_dict.items():
                degs.add(mono_degree(k) + (shifts[i] if shifts else 0))
        return degs.pop() if len(degs) == 1 else None

    def component_degrees(self) -> tuple[int, ...]:
        return tuple(c.degree() for c in self.components)

    def dot(self, polys: Sequence[Polynomial]) -> Polynomial:
        out = Polynomial()
        for a, g in zip(self.components, polys):
            if a:
                out = out + a * g
        return out

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "ModuleVector(" + ", ".join(str(c) for c in self.components) + ")"

    def to_json(self) -> list:
        return [c.to_json() for c in self.components]


# -- conversions ---------------------------------------------------------------

def poly_to_vec(p: Polynomial, comp: int = 0) -> dict:
    low = 255 - comp
    return {(k << CSHIFT) | low: c for k, c in p.key_dict.items()}


def mv_to_vec(v: ModuleVector) -> dict:
    out = {}
    for i, c in enumerate(v.components):
        out.update(poly_to_vec(c, i))
    return out


def vec_to_poly(v: dict) -> Polynomial:
    if any(term_comp(t) for t in v):
        raise ValueError("vector has components beyond the first")
    return Polynomial._from_keys({term_mono(t): c for t, c in v.items()})


def vec_to_mv(v: dict, rank: int) -> ModuleVector:
    parts: list[dict] = [{} for _ in range(rank)]
    for t, c in v.items():
        parts[term_comp(t)][term_mono(t)] = c
    return ModuleVector([Polynomial._from_keys(d) for d in parts])


def _to_vecs(gens) -> tuple[list[dict], int | None]:
    """Engine vectors for a list of polynomials (rank None) or module vectors."""
    gens = list(gens)
    if gens and isinstance(gens[0], ModuleVector):
        return [mv_to_vec(g) for g in gens], len(gens[0])
    return [poly_to_vec(g) for g in gens], None


def _from_vec(v: dict, rank: int | None):
    return vec_to_poly(v) if rank is None else vec_to_mv(v, rank)


def _is_homogeneous(vecs) -> bool:
    return all(len({mono_degree(term_mono(t)) for t in v}) == 1 for v in vecs)


# -- normal forms and bases ------------------------------------------------------

def _basis_of(G) -> Basis:
    vecs, _ = _to_vecs(G)
    B = Basis()
    for v in vecs:
        if not v:
            continue
        items, _ = _make_monic(v, None)
        B.add(Element(items, None, mono_degree(term_mono(items[0][0]))))
    return B


def normal_form(p, G):
    """Remainder of ``p`` on division by ``G`` (polynomials or module vectors).

    Reducers are tried in list order, so the result depends on ``G``'s order
    unless ``G`` is a Groebner basis.
    """
    if not list(G):
        raise ValueError("normal form needs a nonempty divisor list")
    (v,), rank = _to_vecs([p])
    r = _basis_of(G).reduce(dict(v))
    return _from_vec(r, rank)


def buchberger(gens, strategy: str = "normal") -> list:
    """Reduced Groebner basis (grevlex, term-over-position for modules)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("buchberger needs at least one nonzero generator")
    vecs, rank = _to_vecs(gens)
    res = graded_buchberger(vecs, strategy=strategy, homogeneous=_is_homogeneous(vecs))
    return [_from_vec(dict(items), rank) for items in reduced_basis(res.basis)]


def spoly(f, g):
    """S-polynomial (or S-vector) of two elements; None when leads are in different components."""
    (a, b), rank = _to_vecs([f, g])
    la, lb = max(a), max(b)
    if term_comp(la) != term_comp(lb):
        return None
    L = term_key(mono_lcm(term_mono(la), term_mono(lb)), term_comp(la))
    out = {t + L - la: c / a[la] for t, c in a.items()}
    for t, c in b.items():
        k = t + L - lb
        val = out.get(k, 0) - c / b[lb]
        if val:
            out[k] = val
        else:
            out.pop(k, None)
    return _from_vec(out, rank)


def is_groebner_basis(G) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            s = spoly(G[i], G[j])
            if s is None:
                continue
            r = normal_form(s, G)
            if not r.is_zero():
                return False
    return True


# -- syzygies --------------------------------------------------------------------

@dataclass
class GradedGenerators:
    """Homogeneous vectors over ``len(shifts)`` inputs of degrees ``shifts``.

    ``degrees[i]`` is the twist of vector ``i`` minus ``min(shifts)``, which
    for inputs of equal degree is the degree of its coefficients.
    """

    vectors: list
    shifts: tuple
    degrees: list = field(default_factory=list)

    def __post_init__(self):
        if not self.degrees:
            base = min(self.shifts) if self.shifts else 0
            self.degrees = [v.degree(self.shifts) - base for v in self.vectors]

    def sorted_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))

    def __len__(self):
        return len(self.vectors)


def _input_degrees(vecs) -> tuple[int, ...]:
    return tuple(mono_degree(term_mono(next(iter(v)))) for v in vecs)


def raw_syzygies(gens, strategy: str = "normal") -> GradedGenerators:
    """Syzygies read off a tracked Buchberger run (generating, not minimal)."""
    vecs, _ = _to_vecs(gens)
    if not _is_homogeneous(vecs):
        raise ValueError("syzygy computation needs homogeneous generators")
    shifts = _input_degrees(vecs)
    res = graded_buchberger(vecs, track=True, strategy=strategy)
    m = len(vecs)
    vectors = [vec_to_mv(cof, m) for _, cof in sorted(res.syzygies, key=lambda s: s[0])]
    return GradedGenerators(vectors, shifts)


def minimalize(gens) -> GradedGenerators:
    """Minimal subset of a homogeneous generating set, swept by ascending degree.

    Accepts :class:`GradedGenerators` or a plain list of homogeneous
    polynomials / module vectors (treated as unshifted).
    """
    if isinstance(gens, GradedGenerators):
        vectors, shifts = gens.vectors, gens.shifts
    else:
        vectors = list(gens)
        rank = len(vectors[0]) if vectors and isinstance(vectors[0], ModuleVector) else 1
        shifts = (0,) * rank
    vectors = [v for v in vectors if not _is_zero(v)]
    if not vectors:
        return GradedGenerators([], tuple(shifts))
    vecs, rank = _to_vecs(vectors)
    order = sorted(range(len(vecs)), key=lambda i: _shifted_degree(vecs[i], shifts))
    res = graded_buchberger([vecs[i] for i in order], shifts=list(shifts) if rank else None)
    keep = sorted(order[j] for j in res.mingens)
    kept = [vectors[i] for i in sorted(keep, key=lambda i: (_shifted_degree(vecs[i], shifts), i))]
    if rank is None:
        return GradedGenerators([ModuleVector([p]) for p in kept], (0,))
    return GradedGenerators(kept, tuple(shifts))


def _is_zero(v) -> bool:
    return v.is_zero()


def _shifted_degree(v: dict, shifts) -> int:
    t = next(iter(v))
    return mono_degree(term_mono(t)) + (shifts[term_comp(t)] if shifts else 0)


def syzygy_generators(gens, strategy: str = "normal") -> GradedGenerators:
    """Minimal homogeneous generators of the syzygy module of ``gens``."""
    return minimalize(raw_syzygies(gens, strategy=strategy))


def check_syzygy(vec: ModuleVector, gens) -> bool:
    """Does ``vec`` kill ``gens``?  Works for polynomial and vector generators."""
    if gens and isinstance(gens[0], ModuleVector):
        total = {}
        for a, g in zip(vec.components, gens):
            if a.is_zero():
                continue
            for i, gc in enumerate(g.components):
                total.setdefault(i, Polynomial())
                total[i] = total[i] + a * gc
        return all(p.is_zero() for p in total.values())
    return vec.dot(gens).is_zero()


# -- ideals ------------------------------------------------------------------------

class Ideal:
    """Ideal of S given by generators; the reduced Groebner basis is cached."""

    def __init__(self, generators: Sequence[Polynomial]):
        self.generators = [g for g in generators if not g.is_zero()]
        self._gb: list | None = None

    def gb(self) -> list[Polynomial]:
        if self._gb is None:
            self._gb = buchberger(self.generators) if self.generators else []
        return self._gb

    def contains(self, p: Polynomial) -> bool:
        if p.is_zero():
            return True
        if not self.generators:
            return False
        return normal_form(p, self.gb()).is_zero()

    def is_subset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.is_subset(other) and other.is_subset(self)

    def minimal_generators(self) -> list[Polynomial]:
        mg = minimalize(self.generators)
        return [v[0] for v in mg.vectors]

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators)"


def _syzygies_of(polys) -> list[ModuleVector]:
    vecs = [poly_to_vec(p) for p in polys]
    homogeneous = _is_homogeneous(vecs)
    res = graded_buchberger(vecs, track=True, homogeneous=homogeneous)
    m = len(polys)
    return [vec_to_mv(cof, m) for _, cof in res.syzygies]


def ideal_quotient(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g), read off the first components of the syzygies of (g, I)."""
    if g.is_zero():
        raise ValueError("quotient by the zero polynomial")
    if not I.generators:
        return Ideal([])
    syz = _syzygies_of([g] + I.generators)
    gens = [s[0] for s in syz if not s[0].is_zero()]
    return _tidy(Ideal(gens or [Polynomial()]))


def intersect(I: Ideal, K: Ideal) -> Ideal:
    """I cap K via syzygies of (I, K): sum a_j i_j over syzygies (a, b)."""
    if not I.generators or not K.generators:
        return Ideal([])
    m = len(I.generators)
    syz = _syzygies_of(I.generators + K.generators)
    out = []
    for s in syz:
        h = Polynomial()
        for a, gi in zip(s.components[:m], I.generators):
            if not a.is_zero():
                h = h + a * gi
        if not h.is_zero():
            out.append(h)
    return _tidy(Ideal(out))


def _tidy(I: Ideal) -> Ideal:
    """Replace generators by a minimal subset when homogeneous (cheaper downstream)."""
    gens = I.generators
    if gens and all(g.is_homogeneous() for g in gens):
        return Ideal(Ideal(gens).minimal_generators())
    if gens:
        return Ideal(buchberger(gens))
    return I


def saturation(I: Ideal, max_iterations: int = 50) -> tuple[Ideal, bool]:
    """(I : m^infinity, saturated flag) for m = (x, y, z, w).

    Iterates J -> (J : x) cap (J : y) cap (J : z) cap (J : w) until it
    stabilizes; the flag says whether the first step already returned I.
    """
    variables = [Polynomial.variable(i) for i in range(NVARS)]
    J = I
    first = True
    saturated = False
    for _ in range(max_iterations):
        step = None
        for x in variables:
            q = ideal_quotient(J, x)
            step = q if step is None else intersect(step, q)
        if step == J:
            if first:
                saturated = True
            return J, saturated
        first = False
        J = step
    raise RuntimeError("saturation did not stabilize")

