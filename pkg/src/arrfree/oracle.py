"""Degree-by-degree linear algebra oracle for the relation module AR(f).

For each degree d the map

    phi_d : (a_1, ..., a_4) -> sum a_i * df/dx_i,    a_i of degree d,

is a linear map between coefficient spaces.  AR(f)_d is its kernel and the
number of minimal generators in degree d is dim AR(f)_d - dim S_1 AR(f)_{d-1}.
No Groebner basis is involved; everything is plain row reduction.

Computing every kernel by elimination gets expensive by degree 12, so each
degree first tries an exact counting certificate:

* multiplying the known basis of AR(f)_{d-1} by x, y, z, w gives kernel
  vectors; those with distinct leading coordinates are independent, so
  their number ``a`` is a lower bound for dim AR(f)_d;
* the image of phi_d is J_e (e = d + deg f - 1), and multiplying the
  leading monomials of J_{e-1} by the variables gives ``j`` distinct
  leading monomials of elements of J_e, a lower bound for its dimension.

Since dim AR(f)_d + dim J_e equals the number of unknowns n_d, ``a + j == n_d``
pins both dimensions exactly, and then no new generator appears in degree d.
Only when the bounds leave a gap is the kernel found by exact elimination
(on the coordinates that are not leading coordinates of the products).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arith import scalar_inverse
from .linalg import SparseEchelon
from .poly import NVARS, Polynomial, monomials_of_degree, partial_derivative, variable_key

_CS = 8
_VAR_KEYS = [variable_key(i) for i in range(NVARS)]


def _coord(mono: int, i: int) -> int:
    return (mono << _CS) | (255 - i)


def _coord_parts(c: int) -> tuple[int, int]:
    return c >> _CS, 255 - (c & 255)


@dataclass
class DegreeRow:
    degree: int
    unknowns: int
    dim_ar: int
    dim_products: int
    new_generators: int
    method: str           # "count" or "eliminate"

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class ScanResult:
    degrees: tuple
    rows: list = field(default_factory=list)
    basis: dict = field(default_factory=dict)     # degree -> kernel basis (coordinate dicts)


def _shift(v: dict, s: int) -> dict:
    return {c + s: x for c, x in v.items()}


def _eliminate_positions(v: dict, reps: dict) -> dict:
    """Clear every coordinate of ``v`` that is a leading coordinate in ``reps``."""
    while True:
        hits = [c for c in v if c in reps]
        if not hits:
            return v
        c = max(hits)
        r = reps[c]
        a = v[c]
        for k, x in r.items():
            val = v.get(k)
            val = -a * x if val is None else val - a * x
            if val:
                v[k] = val
            else:
                v.pop(k, None)


def kernel_scan(f: Polynomial, d_max: int = 12, keep_basis: bool = False) -> ScanResult:
    """Run the degree scan for ``f`` up to ``d_max`` (see module docstring)."""
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("kernel scan needs a nonzero homogeneous polynomial")
    partials = [partial_derivative(f, i).key_dict for i in range(NVARS)]
    if not any(partials):
        raise ValueError("all partial derivatives vanish")

    prev: list[dict] = []          # monic echelon basis of AR(f)_{d-1}, leads distinct
    image_leads: set[int] = set()  # leading monomials of J_{e-1}
    rows: list[DegreeRow] = []
    degrees: list[int] = []
    bases: dict[int, list[dict]] = {}

    for d in range(d_max + 1):
        monos = monomials_of_degree(d)
        n_d = NVARS * len(monos)

        # kernel vectors from products, one per leading coordinate
        reps: dict[int, dict] = {}
        extra: list[tuple[int, int]] = []       # (index into prev, variable) not chosen
        for idx, v in enumerate(prev):
            lead = max(v)
            for j, vk in enumerate(_VAR_KEYS):
                s = vk << _CS
                if lead + s in reps:
                    extra.append((idx, j))
                else:
                    reps[lead + s] = _shift(v, s)
        new_image = {m + vk for m in image_leads for vk in _VAR_KEYS}

        if len(reps) + len(new_image) == n_d:
            basis = list(reps.values())
            rows.append(DegreeRow(d, n_d, len(reps), len(reps), 0, "count"))
            image_leads = new_image
        else:
            # exact elimination over the remaining coordinates
            image = SparseEchelon()
            kernel = SparseEchelon()
            for m in monos:
                for i in range(NVARS):
                    c = _coord(m, i)
                    if c in reps or not partials[i]:
                        if not partials[i] and c not in reps:
                            kernel.insert({c: 1})
                        continue
                    row = {m + k: x for k, x in partials[i].items()}
                    comp = {c: 1}
                    if not image.insert(row, comp):
                        kernel.insert(comp)
            image_leads = image.leads()
            kernel_vecs = [dict(items) for items, _ in kernel.pivots.values()]
            dim_ar = len(reps) + len(kernel_vecs)
            if not kernel_vecs:
                dim_products = len(reps)
            else:
                span = SparseEchelon()
                for idx, j in extra:
                    w = _eliminate_positions(_shift(prev[idx], _VAR_KEYS[j] << _CS), reps)
                    if w:
                        span.insert(w)
                dim_products = len(reps) + len(span)
            gens = dim_ar - dim_products
            rows.append(DegreeRow(d, n_d, dim_ar, dim_products, gens, "eliminate"))
            degrees.extend([d] * gens)
            basis = list(reps.values()) + kernel_vecs
            if len(image_leads) + len(kernel_vecs) != n_d - len(reps):
                raise ArithmeticError("rank-nullity failed in the kernel scan")
        if keep_basis:
            bases[d] = basis
        prev = [_monic(v) for v in basis]
    return ScanResult(tuple(degrees), rows, bases)


def _monic(v: dict) -> dict:
    lead = max(v)
    c = v[lead]
    if c == 1:
        return v
    inv = scalar_inverse(c)
    return {k: x * inv for k, x in v.items()}


def graded_kernel_scan(f: Polynomial, d_max: int = 12) -> tuple[int, ...]:
    """Sorted degrees of a minimal generating set of AR(f), up to ``d_max``."""
    return kernel_scan(f, d_max).degrees


def coordinates_to_vector(v: dict) -> tuple[Polynomial, ...]:
    """Turn a coordinate dict into the 4 component polynomials (a_1, ..., a_4)."""
    parts: list[dict] = [{} for _ in range(NVARS)]
    for c, x in v.items():
        m, i = _coord_parts(c)
        parts[i][m] = x
    return tuple(Polynomial._from_keys(p) for p in parts)
