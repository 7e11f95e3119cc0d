"""Exact scalars: rationals and elements of a quadratic field Q(sqrt d).

Rationals are ``gmpy2.mpq`` when gmpy2 is importable and
``fractions.Fraction`` otherwise; both keep numerator and denominator
coprime with a positive denominator.  ``QuadExt`` holds ``a + b*sqrt(d)``
with rational ``a, b`` and a square-free radicand ``d``.

Text grammar (used by ``.arr`` files)::

    p/q          rational
    p/q:r/s      p/q + (r/s)*sqrt(d), d declared once per file
"""

from __future__ import annotations

import re
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def Rational(num, den=1):
        return _mpq(num, den)

    RATIONAL_TYPES: tuple = (type(_mpq(0)), Fraction, int)
except ImportError:  # pragma: no cover - exercised only without gmpy2
    Rational = Fraction
    RATIONAL_TYPES = (Fraction, int)


class FieldMismatchError(ValueError):
    """Operands live in different quadratic fields."""


def is_squarefree(d: int) -> bool:
    if d in (0, 1):
        return False
    n = abs(d)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def as_rational(x):
    if isinstance(x, RATIONAL_TYPES[:-1]):
        return x
    if isinstance(x, int):
        return Rational(x)
    raise TypeError(f"not a rational: {x!r}")


class QuadExt:
    """Element ``a + b*sqrt(d)`` of Q(sqrt d).

    Instances are immutable.  Arithmetic with plain rationals embeds them
    with ``b = 0``; arithmetic between two different radicands raises
    :class:`FieldMismatchError`.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if not is_squarefree(d):
            raise ValueError(f"radicand must be square-free and not 0 or 1, got {d}")
        object.__setattr__(self, "a", as_rational(a))
        object.__setattr__(self, "b", as_rational(b))
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, a, b, d):
        obj = object.__new__(cls)
        object.__setattr__(obj, "a", a)
        object.__setattr__(obj, "b", b)
        object.__setattr__(obj, "d", d)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("QuadExt is immutable")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(sqrt {self.d}) and Q(sqrt {other.d})"
                )
            return other.a, other.b
        if isinstance(other, RATIONAL_TYPES):
            return other, 0
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(self.a + c[0], self.b + c[1], self.d)

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(self.a - c[0], self.b - c[1], self.d)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return QuadExt._raw(c[0] - self.a, c[1] - self.b, self.d)

    def __mul__(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise FieldMismatchError(
                    f"cannot combine elements of Q(sqrt {self.d}) and Q(sqrt {other.d})"
                )
            a, b, c, e = self.a, self.b, other.a, other.b
            return QuadExt._raw(a * c + self.d * b * e, a * e + b * c, self.d)
        if isinstance(other, RATIONAL_TYPES):
            return QuadExt._raw(self.a * other, self.b * other, self.d)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt._raw(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def conjugate(self) -> "QuadExt":
        return QuadExt._raw(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        if isinstance(other, RATIONAL_TYPES):
            if not other:
                raise ZeroDivisionError("division by zero")
            return QuadExt._raw(self.a / other, self.b / other, self.d)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL_TYPES):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt._raw(Rational(1), Rational(0), self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, RATIONAL_TYPES):
            return not self.b and self.a == other
        return NotImplemented

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_scalar(self)


def field_of(x):
    """Radicand of ``x`` or ``None`` for a rational."""
    return x.d if isinstance(x, QuadExt) else None


def normalize(x):
    """Canonical representative: quadratic elements with ``b == 0`` stay tagged.

    Rationals are returned as the rational backend type.
    """
    if isinstance(x, QuadExt):
        return x
    return as_rational(x)


def scalar_add(x, y):
    return normalize(x + y)


def scalar_mul(x, y):
    return normalize(x * y)


def scalar_inverse(x):
    if isinstance(x, QuadExt):
        return x.inverse()
    x = as_rational(x)
    if not x:
        raise ZeroDivisionError("inverse of zero")
    return 1 / x


def embed(x, d):
    """View ``x`` as an element of Q(sqrt d) (``d=None`` keeps it rational)."""
    if d is None:
        if isinstance(x, QuadExt):
            if x.b:
                raise FieldMismatchError(f"{x} is not rational")
            return x.a
        return as_rational(x)
    if isinstance(x, QuadExt):
        if x.d != d:
            raise FieldMismatchError(f"{x} is not in Q(sqrt {d})")
        return x
    return QuadExt(x, 0, d)


# -- text grammar ----------------------------------------------------------

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class ScalarSyntaxError(ValueError):
    pass


def parse_rational(text: str):
    text = text.strip()
    if not _RAT_RE.match(text):
        raise ScalarSyntaxError(f"bad rational {text!r}")
    num, _, den = text.partition("/")
    den_i = int(den) if den else 1
    if den_i == 0:
        raise ScalarSyntaxError(f"zero denominator in {text!r}")
    return Rational(int(num), den_i)


def parse_scalar(text: str, d: int | None = None):
    """Parse ``p/q`` or ``p/q:r/s``; the second form needs a radicand ``d``."""
    text = text.strip()
    if ":" in text:
        if d is None:
            raise ScalarSyntaxError(f"quadratic coefficient {text!r} in a rational field")
        left, right = text.split(":", 1)
        return QuadExt(parse_rational(left), parse_rational(right), d)
    r = parse_rational(text)
    return QuadExt(r, 0, d) if d is not None else r


def format_rational(r) -> str:
    r = as_rational(r)
    num, den = int(r.numerator), int(r.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(x) -> str:
    if isinstance(x, QuadExt):
        return f"{format_rational(x.a)}:{format_rational(x.b)}"
    return format_rational(x)
