"""Graded Buchberger over free modules S^r with cofactor tracking.

Vectors are plain dicts ``{term_key: coeff}``.  A term key packs a monomial
key (see :mod:`arrfree.poly`) and a component index::

    T = (K << 8) | (255 - component)

so integer order on term keys is term-over-position grevlex (monomial
first, lower component index wins ties), and multiplying a term by a
monomial with key ``m`` is ``T + (m << 8)``.

Inputs must be homogeneous for the (optionally shifted) grading.  Work
proceeds degree by degree with the normal selection strategy, which gives
three things at once: a Groebner basis, the lifted syzygies of the inputs
(cofactors of every S-pair that reduces to zero, plus Koszul relations for
pairs skipped by the product criterion), and the indices of inputs that
survive as minimal generators.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from ..poly import decode, encode
from ..kernels import axpy

CSHIFT = 8
MAX_COMPONENTS = 256
_GUARD = 0x8000_8000_8000_8000

_packed_cache: dict[int, int] = {}


def term_key(mono: int, comp: int) -> int:
    return (mono << CSHIFT) | (255 - comp)


def term_mono(t: int) -> int:
    return t >> CSHIFT


def term_comp(t: int) -> int:
    return 255 - (t & 255)


def packed(mono: int) -> int:
    p = _packed_cache.get(mono)
    if p is None:
        a, b, c, d = decode(mono)
        p = a | (b << 16) | (c << 32) | (d << 48)
        _packed_cache[mono] = p
    return p


def mono_divides(a: int, b: int) -> bool:
    return ((packed(b) | _GUARD) - packed(a)) & _GUARD == _GUARD


def mono_lcm(a: int, b: int) -> int:
    return encode(tuple(max(u, v) for u, v in zip(decode(a), decode(b))))


def mono_degree(m: int) -> int:
    return sum(decode(m))


def vec_degree(v: dict, shifts=None) -> int:
    t = next(iter(v))
    d = mono_degree(term_mono(t))
    if shifts:
        d += shifts[term_comp(t)]
    return d


def is_homogeneous(v: dict, shifts=None) -> bool:
    if not v:
        return True
    degs = {mono_degree(term_mono(t)) + (shifts[term_comp(t)] if shifts else 0) for t in v}
    return len(degs) == 1


def shift_vec(v: dict, mono: int, scale=None) -> dict:
    s = mono << CSHIFT
    if scale is None:
        return {t + s: c for t, c in v.items()}
    return {t + s: c * scale for t, c in v.items()}


def poly_times_vec(poly: dict, v: dict) -> dict:
    """Product of a component-0 vector (a polynomial) with a vector."""
    out: dict = {}
    for tp, cp in poly.items():
        s = (tp >> CSHIFT) << CSHIFT
        for tv, cv in v.items():
            k = tv + s
            val = out.get(k)
            val = cp * cv if val is None else val + cp * cv
            if val:
                out[k] = val
            else:
                del out[k]
    return out


def add_into(acc: dict, v: dict, scale=None) -> dict:
    for t, c in v.items():
        if scale is not None:
            c = c * scale
        val = acc.get(t)
        val = c if val is None else val + c
        if val:
            acc[t] = val
        else:
            acc.pop(t, None)
    return acc


@dataclass(eq=False)
class Element:
    terms: list            # (term key, coeff) pairs, descending; leading coeff 1
    cof: dict | None       # cofactor vector over the inputs
    degree: int
    lead: int = field(init=False)
    mono: int = field(init=False)
    comp: int = field(init=False)

    cof_items: list = field(init=False)

    def __post_init__(self):
        self.cof_items = list(self.cof.items()) if self.cof else []
        self.lead = self.terms[0][0]
        self.mono = term_mono(self.lead)
        self.comp = term_comp(self.lead)

    def as_dict(self) -> dict:
        return dict(self.terms)


class Basis:
    """A growing list of monic elements with reducer lookup by leading term."""

    def __init__(self):
        self.elems: list[Element] = []
        self._by_comp: dict[int, list[Element]] = {}
        self._hits: dict[int, Element] = {}

    def __len__(self):
        return len(self.elems)

    def add(self, e: Element) -> int:
        self.elems.append(e)
        self._by_comp.setdefault(e.comp, []).append(e)
        return len(self.elems) - 1

    def reducer(self, t: int) -> Element | None:
        g = self._hits.get(t)
        if g is not None:
            return g
        cands = self._by_comp.get(255 - (t & 255))
        if not cands:
            return None
        pt = packed(t >> CSHIFT) | _GUARD
        for g in cands:
            if (pt - packed(g.mono)) & _GUARD == _GUARD:
                self._hits[t] = g
                return g
        return None

    def reduce(self, p: dict, cof: dict | None = None, full: bool = True) -> dict:
        """Reduce ``p`` in place; return the remainder (``p`` is consumed).

        ``cof`` is updated alongside so that ``remainder = p_in - sum(...)``
        keeps its cofactor expression.
        """
        heap = [-t for t in p]
        heapq.heapify(heap)
        rem: dict = {}
        while heap:
            t = -heapq.heappop(heap)
            c = p.get(t)
            if c is None:
                continue
            g = self.reducer(t)
            if g is None:
                if not full:
                    heapq.heappush(heap, -t)
                    break
                rem[t] = p.pop(t)
                continue
            shift = t - g.lead
            axpy(p, g.terms, shift, c, heap)
            if cof is not None and g.cof:
                axpy(cof, g.cof_items, shift, c, None)
        if not full:
            # top-reduced but not tail-reduced: whatever is left stays
            rem.update(p)
            p.clear()
        return rem


def _make_monic(v: dict, cof: dict | None):
    items = sorted(v.items(), reverse=True)
    lc = items[0][1]
    if lc == 1:
        return items, cof
    inv = 1 / lc
    items = [(t, c * inv) for t, c in items]
    if cof is not None:
        cof = {t: c * inv for t, c in cof.items()}
    return items, cof


@dataclass
class GBResult:
    basis: Basis
    syzygies: list = field(default_factory=list)   # (degree, cofactor vector)
    mingens: list = field(default_factory=list)    # input indices kept as minimal
    zero_inputs: list = field(default_factory=list)
    pairs_reduced: int = 0
    stopped_at: int | None = None


def graded_buchberger(inputs, *, shifts=None, track=False, max_degree=None,
                      reduce_tail=True, strategy="normal", homogeneous=True):
    """Run homogeneous Buchberger on ``inputs`` (list of term-key dicts).

    ``shifts[c]`` is added to the degree of every term in component ``c``.
    With ``track=True`` each basis element carries its cofactor over the
    inputs and the lifted syzygies are returned; ``max_degree`` truncates
    the computation (basis is then a truncated Groebner basis).
    ``strategy`` changes only the order in which same-degree pairs are
    reduced ("normal": by lcm then indices, "reverse": opposite).

    ``homogeneous=False`` accepts inhomogeneous inputs; the result is still a
    Groebner basis with generating syzygies, but ``mingens`` then carries no
    minimality meaning and ``max_degree`` is not a valid truncation.
    """
    if strategy not in ("normal", "reverse"):
        raise ValueError(f"unknown strategy {strategy!r}")
    for v in inputs:
        if not v:
            raise ValueError("zero input vector")
        if homogeneous and not is_homogeneous(v, shifts):
            raise ValueError("input vectors must be homogeneous")
    ncof = len(inputs)
    if track and ncof > MAX_COMPONENTS:
        raise ValueError("too many inputs to track cofactors")
    rank1 = all(term_comp(t) == 0 for v in inputs for t in v)

    pending: dict[int, list[int]] = {}
    for j, v in enumerate(inputs):
        pending.setdefault(vec_degree(v, shifts), []).append(j)

    B = Basis()
    res = GBResult(basis=B)
    pairs: dict[tuple[int, int], tuple[int, int]] = {}   # (i, j) -> (degree, lcm term)

    def degree_of(mono, comp):
        return mono_degree(mono) + (shifts[comp] if shifts else 0)

    def update(t_idx: int):
        h = B.elems[t_idx]
        lt = h.mono
        new_lcms: dict[int, list[int]] = {}
        for i, g in enumerate(B.elems[:t_idx]):
            if g.comp != h.comp:
                continue
            new_lcms.setdefault(mono_lcm(g.mono, lt), []).append(i)
        # old pairs made redundant by the new leading term
        for key, (deg, lt_ij) in list(pairs.items()):
            i, j = key
            gi, gj = B.elems[i], B.elems[j]
            if gi.comp != h.comp:
                continue
            L = term_mono(lt_ij)
            if mono_divides(lt, L) and mono_lcm(gi.mono, lt) != L and mono_lcm(gj.mono, lt) != L:
                del pairs[key]
        kept: list[int] = []
        for L in sorted(new_lcms):
            if any(mono_divides(K, L) for K in kept):
                continue
            kept.append(L)
            group = new_lcms[L]
            coprime = [i for i in group if L == B.elems[i].mono + lt]
            if rank1 and coprime:
                if track:
                    i = coprime[0]
                    g = B.elems[i]
                    gi = dict(g.terms)
                    koszul = poly_times_vec(dict(h.terms), g.cof)
                    add_into(koszul, poly_times_vec(gi, h.cof), scale=-1)
                    if koszul:
                        res.syzygies.append((degree_of(L, h.comp), koszul))
                continue
            i = min(group)
            pairs[(i, t_idx)] = (degree_of(L, h.comp), term_key(L, h.comp))

    def insert(v: dict, cof):
        items, cof = _make_monic(v, cof)
        e = Element(items, cof, vec_degree(v, shifts))
        idx = B.add(e)
        update(idx)
        return idx

    def spair(i, j):
        gi, gj = B.elems[i], B.elems[j]
        L = pairs[(i, j)][1]
        si, sj = L - gi.lead, L - gj.lead
        p = {t + si: c for t, c in gi.terms}
        cof = None
        if track:
            cof = {t + si: c for t, c in gi.cof.items()}
        axpy(p, gj.terms, sj, 1, None)
        if track:
            axpy(cof, gj.cof_items, sj, 1, None)
        return p, cof

    while pairs or pending:
        D = min([d for d, _ in pairs.values()] + list(pending))
        if max_degree is not None and D > max_degree:
            res.stopped_at = D
            break
        batch = sorted((lt, key) for key, (d, lt) in pairs.items() if d == D)
        if strategy == "reverse":
            batch.reverse()
        for lt, key in batch:
            if key not in pairs:
                continue
            p, cof = spair(*key)
            del pairs[key]
            res.pairs_reduced += 1
            r = B.reduce(p, cof, full=reduce_tail)
            if r:
                insert(r, cof)
            elif track and cof:
                res.syzygies.append((D, cof))
        for j in pending.pop(D, []):
            p = dict(inputs[j])
            cof = {term_key(0, j): 1} if track else None
            r = B.reduce(p, cof, full=reduce_tail)
            if r:
                insert(r, cof)
                res.mingens.append(j)
            else:
                res.zero_inputs.append(j)
                if track and cof:
                    res.syzygies.append((D, cof))
    return res


def reduced_basis(B: Basis) -> list[list[tuple[int, object]]]:
    """Reduced Groebner basis (term lists, monic, descending leads)."""
    elems = sorted(B.elems, key=lambda e: e.lead)
    minimal: list[Element] = []
    for e in elems:
        if not any(g.comp == e.comp and mono_divides(g.mono, e.mono) for g in minimal):
            minimal.append(e)
    out = []
    for e in minimal:
        others = Basis()
        for g in minimal:
            if g is not e:
                others.add(g)
        lead_t, lead_c = e.terms[0]
        tail = dict(e.terms[1:])
        r = others.reduce(tail) if tail else {}
        r[lead_t] = lead_c
        out.append(sorted(r.items(), reverse=True))
    out.sort(key=lambda items: items[0][0], reverse=True)
    return out
