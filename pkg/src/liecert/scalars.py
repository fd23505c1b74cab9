"""Exact scalars: rationals and Gaussian rationals a + b*i over Q.

Every quantity in this package is a GaussianRational (or a plain Fraction
embedded as one); there is no floating point anywhere.  The canonical
string form used by all file formats is

    R | R+Si | R-Si | Si

where R and S match -?\\d+(/\\d+)?  (examples: "3/4", "-1+2/5i", "1i").
"""

from __future__ import annotations

import re
from fractions import Fraction

QQ = Fraction

_RAT = r"-?\d+(?:/\d+)?"
_VALUE_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-]\d+(?:/\d+)?)i|(?P<only_im>{_RAT})i|(?P<only_re>{_RAT}))$"
)


class GaussianRational:
    """An element of Q(i), stored as exact real and imaginary Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return ONE / self.__pow__(-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        """|z|^2 = re^2 + im^2, a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_value(self)

    def is_rational(self) -> bool:
        return self.im == 0


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(i)")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def qi(re=0, im=0) -> GaussianRational:
    """Shorthand constructor; accepts ints, Fractions or 'p/q' strings."""
    if isinstance(re, str):
        re = Fraction(re)
    if isinstance(im, str):
        im = Fraction(im)
    return GaussianRational(re, im)


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_value(z: GaussianRational) -> str:
    """Canonical interchange string for a Gaussian rational."""
    if z.im == 0:
        return _format_rational(z.re)
    im = _format_rational(z.im)
    if z.re == 0:
        return f"{im}i"
    sign = "+" if z.im > 0 else "-"
    return f"{_format_rational(z.re)}{sign}{_format_rational(abs(z.im))}i"


def parse_value(s: str) -> GaussianRational:
    """Inverse of format_value; rejects anything outside the grammar."""
    m = _VALUE_RE.match(s.strip())
    if m is None:
        raise ValueError(f"not a valid Q(i) value string: {s!r}")
    if m.group("only_re") is not None:
        return GaussianRational(Fraction(m.group("only_re")))
    if m.group("only_im") is not None:
        return GaussianRational(0, Fraction(m.group("only_im")))
    return GaussianRational(Fraction(m.group("re")), Fraction(m.group("im")))
