"""Neutrosophic scalars a + bI with I*I = I, and the {0, 1, I} node states."""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "NeutroValue",
    "TriState",
    "I",
    "ZERO",
    "ONE",
    "nv_add",
    "nv_mul",
    "nv_threshold",
    "nv_compare",
    "nv_min",
    "nv_max",
    "as_neutro",
    "parse_rational",
    "format_rational",
    "parse_scalar",
    "format_scalar",
]

_NUMBER = re.compile(r"[+-]?(?:\d+/\d+|\d+(?:\.\d*)?|\.\d+)")


def parse_rational(text: str) -> Fraction:
    """Parse an integer, a finite decimal or a ``p/q`` ratio exactly."""
    text = text.strip()
    if not _NUMBER.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_rational(q: Rational) -> str:
    """Shortest exact rendering: integer, terminating decimal, else ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    places = max(twos, fives)
    scaled = abs(q.numerator) * (10 ** places // q.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class NeutroValue:
    """``real + indet*I``.  Ordering is lexicographic on (real, indet).

    Compares and hashes equal to the plain number when the I part is zero.
    """

    real: Fraction = Fraction(0)
    indet: Fraction = Fraction(0)

    def __post_init__(self):
        if type(self.real) is not Fraction:
            object.__setattr__(self, "real", Fraction(self.real))
        if type(self.indet) is not Fraction:
            object.__setattr__(self, "indet", Fraction(self.indet))

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.real == other.real and self.indet == other.indet

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self.real, self.indet) < (other.real, other.indet)

    def __hash__(self):
        if self.indet == 0:
            return hash(self.real)
        return hash((self.real, self.indet))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return NeutroValue(self.real + other.real, self.indet + other.indet)

    __radd__ = __add__

    def __neg__(self):
        return NeutroValue(-self.real, -self.indet)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.real, self.indet, other.real, other.indet
        # I*I = I folds the bd term into the indeterminate part
        return NeutroValue(a * c, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, NeutroValue):
            if k.indet:
                raise ZeroDivisionError("division by a value with an I component")
            k = k.real
        return NeutroValue(self.real / k, self.indet / k)

    @property
    def is_real(self) -> bool:
        return self.indet == 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"NeutroValue({format_scalar(self)!r})"


def _coerce(x):
    if isinstance(x, NeutroValue):
        return x
    if isinstance(x, (int, Fraction)):
        return NeutroValue(x)
    return NotImplemented


def as_neutro(x) -> NeutroValue:
    """Lift an int, Fraction, TriState or scalar string to a NeutroValue."""
    if isinstance(x, TriState):
        return x.value_of()
    if isinstance(x, str):
        return parse_scalar(x)
    v = _coerce(x)
    if v is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a neutrosophic scalar")
    return v


ZERO = NeutroValue(0, 0)
ONE = NeutroValue(1, 0)
I = NeutroValue(0, 1)


class TriState(enum.Enum):
    OFF = "0"
    ON = "1"
    INDET = "I"

    def value_of(self) -> NeutroValue:
        return _TRI_VALUES[self]

    @classmethod
    def parse(cls, text) -> "TriState":
        text = str(text).strip()
        for member in cls:
            if member.value == text:
                return member
        raise ValueError(f"node state must be 0, 1 or I, got {text!r}")

    def __str__(self):
        return self.value


_TRI_VALUES = {TriState.OFF: ZERO, TriState.ON: ONE, TriState.INDET: I}


def nv_add(x: NeutroValue, y: NeutroValue) -> NeutroValue:
    return as_neutro(x) + as_neutro(y)


def nv_mul(x: NeutroValue, y: NeutroValue) -> NeutroValue:
    return as_neutro(x) * as_neutro(y)


def nv_threshold(x: NeutroValue) -> TriState:
    """Real part decides; a pure positive I term gives INDET.

    Negative real with any indeterminacy is OFF, so -1+I -> 0 while 2+I -> 1.
    """
    x = as_neutro(x)
    if x.real > 0:
        return TriState.ON
    if x.real < 0:
        return TriState.OFF
    if x.indet > 0:
        return TriState.INDET
    return TriState.OFF


def nv_compare(x: NeutroValue, y: NeutroValue) -> int:
    """-1, 0 or 1.  Lexicographic: real part first, then the I coefficient."""
    x, y = as_neutro(x), as_neutro(y)
    kx, ky = (x.real, x.indet), (y.real, y.indet)
    return (kx > ky) - (kx < ky)


def nv_min(x, y):
    return x if nv_compare(x, y) <= 0 else y


def nv_max(x, y):
    return x if nv_compare(x, y) >= 0 else y


def parse_scalar(text) -> NeutroValue:
    """Parse ``-1``, ``0.7``, ``I``, ``-1+I``, ``0.3+0.2I``, ``2I``, ``1/3-I``."""
    if isinstance(text, bool):
        raise ValueError("booleans are not scalars")
    if isinstance(text, int):
        return NeutroValue(text)
    if isinstance(text, float):
        # JSON numbers arrive as floats; repr gives the shortest literal
        return NeutroValue(parse_rational(repr(text)))
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("I"):
        return NeutroValue(parse_rational(s))
    body = s[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split > 0:
        real_part, coef_part = body[:split], body[split:]
        real = parse_rational(real_part)
    else:
        real, coef_part = Fraction(0), body
    if coef_part in ("", "+"):
        coef = Fraction(1)
    elif coef_part == "-":
        coef = Fraction(-1)
    else:
        coef = parse_rational(coef_part)
    return NeutroValue(real, coef)


def format_scalar(x) -> str:
    x = as_neutro(x)
    if x.indet == 0:
        return format_rational(x.real)
    if x.indet == 1:
        term = "I"
    elif x.indet == -1:
        term = "-I"
    else:
        term = format_rational(x.indet) + "I"
    if x.real == 0:
        return term
    if not term.startswith("-"):
        term = "+" + term
    return format_rational(x.real) + term
