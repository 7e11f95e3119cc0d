"""Sparse polynomials in x, y, z, w over an exact scalar field.

A monomial x^a y^b z^c w^e is identified with the integer key::

    K = (a+b+c+e) << 24  -  (e << 16 | c << 8 | b)

Integer order on keys is degree-reverse-lexicographic order with
x > y > z > w, and multiplying monomials adds keys, so the Groebner layer
never touches exponent tuples in its inner loops.  Exponents of y, z, w
must stay below 256.
"""

from __future__ import annotations

from functools import reduce
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .arith import QuadExt, Rational, as_rational, field_of, format_scalar, scalar_inverse

NVARS = 4
VARS = ("x", "y", "z", "w")
_SHIFT = 24
_MASK = (1 << _SHIFT) - 1

_decode_cache: dict[int, tuple[int, int, int, int]] = {}


def encode(exps: Sequence[int]) -> int:
    a, b, c, e = exps
    if min(exps) < 0:
        raise ValueError(f"negative exponent in {tuple(exps)}")
    if max(b, c, e) > 255:
        raise OverflowError("exponent of y, z or w exceeds 255")
    return ((a + b + c + e) << _SHIFT) - ((e << 16) | (c << 8) | b)


def decode(key: int) -> tuple[int, int, int, int]:
    try:
        return _decode_cache[key]
    except KeyError:
        pass
    deg = key >> _SHIFT
    if key & _MASK:
        deg += 1
    rest = (deg << _SHIFT) - key
    b, c, e = rest & 255, (rest >> 8) & 255, rest >> 16
    exps = (deg - b - c - e, b, c, e)
    _decode_cache[key] = exps
    return exps


def key_degree(key: int) -> int:
    return sum(decode(key))


def variable_key(i: int) -> int:
    exps = [0] * NVARS
    exps[i] = 1
    return encode(exps)


def monomials_of_degree(d: int) -> list[int]:
    """All degree-``d`` monomial keys, descending in grevlex."""
    out = []
    for combo in combinations_with_replacement(range(NVARS), d):
        exps = [0] * NVARS
        for v in combo:
            exps[v] += 1
        out.append(encode(exps))
    out.sort(reverse=True)
    return out


def compare_monomials(m1: Sequence[int], m2: Sequence[int], order: str = "grevlex") -> int:
    """Return -1, 0 or 1 as ``m1`` is smaller than, equal to, or larger than ``m2``."""
    if order == "grevlex":
        k1, k2 = encode(m1), encode(m2)
    elif order == "lex":
        k1, k2 = tuple(m1), tuple(m2)
    else:
        raise ValueError(f"unknown monomial order {order!r}")
    return (k1 > k2) - (k1 < k2)


def monomial_str(exps: Sequence[int]) -> str:
    parts = []
    for v, e in zip(VARS, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts) or "1"


class Polynomial:
    """Immutable polynomial; terms are kept sorted, largest monomial first."""

    __slots__ = ("_terms", "_dict")

    def __init__(self, terms=None):
        if terms is None:
            d = {}
        elif isinstance(terms, dict):
            d = {}
            for m, c in terms.items():
                k = m if isinstance(m, int) else encode(m)
                if c:
                    d[k] = d.get(k, 0) + (as_rational(c) if type(c) is int else c)
            d = {k: c for k, c in d.items() if c}
        else:
            raise TypeError("Polynomial expects a dict of monomial -> coefficient")
        self._dict = d
        self._terms = tuple(sorted(d.items(), reverse=True))

    @classmethod
    def _from_keys(cls, d: dict) -> "Polynomial":
        obj = object.__new__(cls)
        obj._dict = d
        obj._terms = tuple(sorted(d.items(), reverse=True))
        return obj

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls._from_keys({0: c} if c else {})

    @classmethod
    def variable(cls, i: int) -> "Polynomial":
        return cls._from_keys({variable_key(i): Rational(1)})

    # -- views -------------------------------------------------------------

    @property
    def key_dict(self) -> dict:
        return self._dict

    def terms(self) -> list[tuple[tuple[int, int, int, int], object]]:
        return [(decode(k), c) for k, c in self._terms]

    def __iter__(self):
        return iter(self.terms())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        k, c = self._terms[0]
        return decode(k), c

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(key_degree(k) for k, _ in self._terms)

    def is_homogeneous(self) -> bool:
        return len({key_degree(k) for k, _ in self._terms}) <= 1

    def field(self):
        """Radicand of the coefficient field, ``None`` for Q."""
        for _, c in self._terms:
            d = field_of(c)
            if d is not None:
                return d
        return None

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        d = dict(self._dict)
        for k, c in other._dict.items():
            v = d.get(k)
            v = c if v is None else v + c
            if v:
                d[k] = v
            else:
                d.pop(k, None)
        return Polynomial._from_keys(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._from_keys({k: -c for k, c in self._dict.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if not other:
                return Polynomial()
            return Polynomial._from_keys({k: c * other for k, c in self._dict.items()})
        d: dict = {}
        for k1, c1 in self._dict.items():
            for k2, c2 in other._dict.items():
                k = k1 + k2
                v = d.get(k)
                d[k] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._from_keys({k: c for k, c in d.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(Rational(1))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if not other:
            return not self._terms
        return self._terms == ((0, other),)

    def __hash__(self):
        return hash(self._terms)

    def derivative(self, var: int) -> "Polynomial":
        d = {}
        for k, c in self._dict.items():
            exps = decode(k)
            e = exps[var]
            if e:
                new = list(exps)
                new[var] = e - 1
                d[encode(new)] = c * e
        return Polynomial._from_keys(d)

    def evaluate(self, point: Sequence):
        total = Rational(0)
        for k, c in self._terms:
            term = c
            for v, e in zip(point, decode(k)):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        lc = self._terms[0][1]
        inv = scalar_inverse(lc)
        return Polynomial._from_keys({k: c * inv for k, c in self._dict.items()})

    # -- formatting --------------------------------------------------------

    def to_json(self) -> list:
        return [[list(decode(k)), format_scalar(c)] for k, c in self._terms]

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms:
            parts.append(f"({format_scalar(c)})*{monomial_str(decode(k))}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


class LinearForm:
    """A nonzero linear form c1*x + c2*y + c3*z + c4*w.

    ``coefficients`` keeps the input as given; ``normalized`` scales the first
    nonzero coefficient to 1 and is only used to detect proportional forms.
    """

    __slots__ = ("coefficients", "normalized")

    def __init__(self, coefficients: Iterable):
        coeffs = tuple(c if isinstance(c, QuadExt) else Rational(c) if isinstance(c, int) else c
                       for c in coefficients)
        if len(coeffs) != NVARS:
            raise ValueError(f"a linear form needs {NVARS} coefficients, got {len(coeffs)}")
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            raise ValueError("zero linear form")
        radicands = {field_of(c) for c in coeffs} - {None}
        if len(radicands) > 1:
            raise ValueError("linear form mixes quadratic fields")
        inv = scalar_inverse(lead)
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "normalized", tuple(_canon(c * inv) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    def field(self):
        for c in self.coefficients:
            if field_of(c) is not None:
                return field_of(c)
        return None

    def to_polynomial(self) -> Polynomial:
        return Polynomial._from_keys(
            {variable_key(i): c for i, c in enumerate(self.coefficients) if c}
        )

    def is_proportional(self, other: "LinearForm") -> bool:
        return self.normalized == other.normalized

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"LinearForm({', '.join(format_scalar(c) for c in self.coefficients)})"

    def __str__(self):
        return str(self.to_polynomial())


def _canon(c):
    # quadratic values with zero irrational part compare equal to rationals,
    # but keys must also hash equal
    if isinstance(c, QuadExt) and not c.b:
        return c.a
    return c


def expand_product(forms: Sequence[LinearForm]) -> Polynomial:
    if not forms:
        raise ValueError("expand_product needs at least one form")
    return reduce(lambda acc, f: acc * f.to_polynomial(), forms[1:], forms[0].to_polynomial())


def partial_derivative(f: Polynomial, var: int) -> Polynomial:
    return f.derivative(var)


def euler_derivation(f: Polynomial) -> Polynomial:
    """x*f_x + y*f_y + z*f_z + w*f_w."""
    out = Polynomial()
    for i in range(NVARS):
        out = out + Polynomial.variable(i) * f.derivative(i)
    return out
