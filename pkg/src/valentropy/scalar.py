"""Complex-rational scalars and the two arithmetic contexts (exact, tolerant float)."""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Scalar",
    "parse_scalar",
    "format_scalar",
    "ExactArithmetic",
    "FloatArithmetic",
    "EXACT",
]


class Scalar:
    """An exact complex number ``re + im*i`` with rational parts.

    Instances are treated as immutable; both parts are stored as reduced
    :class:`fractions.Fraction` values, so equality is structural.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            re, im = re.re, re.im
        elif isinstance(re, complex):
            raise TypeError("complex floats are not exact; use FloatArithmetic")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def _new(cls, re: Fraction, im: Fraction) -> "Scalar":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @staticmethod
    def _wrap(other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Rational)):
            return Scalar._new(Fraction(other), Fraction(0))
        return NotImplemented

    def __add__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return Scalar._new(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return Scalar._new(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        if not self.im and not other.im:
            return Scalar._new(self.re * other.re, self.im)
        return Scalar._new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._wrap(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return Scalar._new(-self.re, -self.im)

    def __pos__(self):
        return self

    def inverse(self) -> "Scalar":
        if not self.im:
            if not self.re:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._new(1 / self.re, self.im)
        d = self.abs2()
        return Scalar._new(self.re / d, -self.im / d)

    def conjugate(self) -> "Scalar":
        return Scalar._new(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, always rational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(self.abs2())

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        other = self._wrap(other)
        if other is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"Scalar({format_scalar(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)

    @property
    def is_real(self) -> bool:
        return not self.im


def format_scalar(x: Scalar) -> str:
    """Canonical text form: ``"p/q"`` for rationals, ``"p/q+r/si"`` otherwise."""
    if not x.im:
        return str(x.re)
    if not x.re:
        return f"{x.im}i"
    sign = "-" if x.im < 0 else "+"
    return f"{x.re}{sign}{abs(x.im)}i"


_SPLIT = re.compile(r"(?<=[0-9.i])(?<![eE])([+-])")


def parse_scalar(text) -> Scalar:
    """Parse a scalar from text (``"3"``, ``"-1/2"``, ``"0.25"``, ``"1/2-3/4i"``, ``"i"``).

    Plain ints and Fractions pass through; a JSON float is taken at its
    shortest decimal repr. Raises ValueError on malformed input.
    """
    if isinstance(text, Scalar):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a scalar: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Scalar(text)
    if isinstance(text, float):
        if not math.isfinite(text):
            raise ValueError(f"not a finite scalar: {text!r}")
        return Scalar(Fraction(repr(text)))
    if not isinstance(text, str):
        raise ValueError(f"not a scalar: {text!r}")
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    try:
        if not s.endswith("i"):
            return Scalar(Fraction(s))
        body = s[:-1]
        parts = _SPLIT.split(body)
        # parts is [im] or [re, sign, im] (possibly with a leading sign on re)
        if len(parts) == 1:
            return Scalar(0, _imag_coeff(parts[0]))
        if len(parts) == 3:
            return Scalar(Fraction(parts[0]), _imag_coeff(parts[1] + parts[2]))
    except (ValueError, ZeroDivisionError):
        pass
    raise ValueError(f"malformed scalar: {text!r}")


def _imag_coeff(s: str) -> Fraction:
    if s in ("", "+"):
        return Fraction(1)
    if s == "-":
        return Fraction(-1)
    if s.endswith("*"):
        s = s[:-1]
    return Fraction(s)


class ExactArithmetic:
    """Exact complex-rational arithmetic; zero tests are structural."""

    name = "exact"
    exact = True
    zero = Scalar(0)
    one = Scalar(1)

    def coerce(self, x) -> Scalar:
        return parse_scalar(x)

    def is_zero(self, x) -> bool:
        return not x

    def eq(self, x, y) -> bool:
        return x == y

    def conj(self, x):
        return x.conjugate()

    def abs2(self, x) -> Fraction:
        return x.abs2()

    def real(self, x) -> Fraction:
        return x.re

    def format(self, x) -> str:
        return format_scalar(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactArithmetic)

    def __hash__(self) -> int:
        return hash("exact")

    def __repr__(self) -> str:
        return "EXACT"


EXACT = ExactArithmetic()


class FloatArithmetic:
    """Tolerant complex floating-point arithmetic.

    Two values compare equal when ``|x - y| <= eps * max(1, |x|, |y|)``;
    a single value is zero when ``|x| <= eps``.
    """

    name = "float"
    exact = False
    zero = 0j
    one = 1 + 0j

    def __init__(self, eps: float = 1e-9):
        if not eps > 0:
            raise ValueError("eps must be positive")
        self.eps = float(eps)

    def coerce(self, x) -> complex:
        if isinstance(x, complex):
            return x
        if isinstance(x, (int, float)) and not isinstance(x, bool):
            return complex(x)
        return complex(parse_scalar(x))

    def is_zero(self, x) -> bool:
        return abs(x) <= self.eps

    def eq(self, x, y) -> bool:
        return abs(x - y) <= self.eps * max(1.0, abs(x), abs(y))

    def conj(self, x):
        return x.conjugate()

    def abs2(self, x) -> float:
        return x.real * x.real + x.imag * x.imag

    def real(self, x) -> float:
        return x.real

    def format(self, x) -> str:
        if x.imag == 0:
            return repr(x.real)
        return repr(x)

    def __eq__(self, other) -> bool:
        return isinstance(other, FloatArithmetic) and other.eps == self.eps

    def __hash__(self) -> int:
        return hash(("float", self.eps))

    def __repr__(self) -> str:
        return f"FloatArithmetic(eps={self.eps!r})"
