"""Exact-rational polynomials in up to three variables x, y, z."""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .neutro import format_rational, parse_rational

VARS = ("x", "y", "z")
_TERM = re.compile(
    r"(?P<sign>[+-])?(?P<coef>\d+/\d+|\d+(?:\.\d+)?|\.\d+)?\*?(?P<vars>(?:[xyz](?:\^\d+)?)*)"
)


class Polynomial:
    """Immutable map from exponent triples (x, y, z) to nonzero Fractions."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono) + (0,) * (3 - len(mono))
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent")
            c = Fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self._terms = dict(sorted(clean.items(), key=_order_key))

    # constructors
    @classmethod
    def const(cls, c):
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name="x"):
        mono = [0, 0, 0]
        mono[VARS.index(name)] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def from_coeffs(cls, coeffs, var="x"):
        """Univariate from ascending coefficients [c0, c1, ...]."""
        k = VARS.index(var)
        terms = {}
        for power, c in enumerate(coeffs):
            mono = [0, 0, 0]
            mono[k] = power
            terms[tuple(mono)] = c
        return cls(terms)

    @classmethod
    def parse(cls, text) -> "Polynomial":
        s = str(text).replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        pos, terms = 0, {}
        while pos < len(s):
            m = _TERM.match(s, pos)
            if not m or m.end() == pos or (not m.group("coef") and not m.group("vars")):
                raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
            if pos > 0 and not m.group("sign"):
                raise ValueError(f"missing operator before {s[pos:]!r}")
            coef = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
            if m.group("sign") == "-":
                coef = -coef
            mono = [0, 0, 0]
            for v, e in re.findall(r"([xyz])(?:\^(\d+))?", m.group("vars")):
                mono[VARS.index(v)] += int(e) if e else 1
            mono = tuple(mono)
            terms[mono] = terms.get(mono, 0) + coef
            pos = m.end()
        return cls(terms)

    # inspection
    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def variables(self):
        return tuple(v for k, v in enumerate(VARS) if any(m[k] for m in self._terms))

    def is_univariate(self, var="x"):
        k = VARS.index(var)
        return all(e == 0 for m in self._terms for j, e in enumerate(m) if j != k)

    def degree(self, var=None):
        if not self._terms:
            return -1
        if var is None:
            return max(sum(m) for m in self._terms)
        k = VARS.index(var)
        return max(m[k] for m in self._terms)

    def coeff(self, mono):
        mono = tuple(mono) + (0,) * (3 - len(mono))
        return self._terms.get(mono, Fraction(0))

    def coeffs(self, var="x"):
        """Ascending coefficient list of a univariate polynomial."""
        if not self.is_univariate(var):
            raise ValueError(f"not univariate in {var}")
        k = VARS.index(var)
        out = [Fraction(0)] * (self.degree(var) + 1)
        for m, c in self._terms.items():
            out[m[k]] = c
        return out

    def leading(self, var="x"):
        return self.coeffs(var)[-1] if self._terms else Fraction(0)

    def evaluate(self, x=1, y=1, z=1):
        point = (Fraction(x), Fraction(y), Fraction(z))
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for v, e in zip(point, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def substitute_zero(self, var):
        """Drop every term containing ``var`` (set it to zero)."""
        k = VARS.index(var)
        return Polynomial({m: c for m, c in self._terms.items() if m[k] == 0})

    # arithmetic
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __truediv__(self, k):
        k = Fraction(k)
        return Polynomial({m: c / k for m, c in self._terms.items()})

    def divmod(self, divisor, var="x"):
        """Univariate long division: returns (quotient, remainder)."""
        num, den = self.coeffs(var), divisor.coeffs(var)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
        rem = list(num)
        for shift in range(len(num) - len(den), -1, -1):
            q = rem[shift + len(den) - 1] / den[-1]
            quot[shift] = q
            for j, d in enumerate(den):
                rem[shift + j] -= q * d
        return Polynomial.from_coeffs(quot, var), Polynomial.from_coeffs(rem, var)

    def content(self):
        """Positive rational c with self / c having coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        nums = [c.numerator for c in self._terms.values()]
        dens = [c.denominator for c in self._terms.values()]
        return Fraction(math.gcd(*nums), math.lcm(*dens))

    def primitive(self):
        """Integer-coefficient primitive part with a positive leading term."""
        if not self._terms:
            return self
        p = self / self.content()
        if next(iter(p._terms.values())) < 0:
            p = -p
        return p

    def monomial_content(self):
        """Largest monomial dividing every term, as an exponent triple."""
        if not self._terms:
            return (0, 0, 0)
        return tuple(min(m[k] for m in self._terms) for k in range(3))

    def strip_monomial(self):
        low = self.monomial_content()
        return Polynomial({tuple(a - b for a, b in zip(m, low)): c for m, c in self._terms.items()})

    def is_proportional(self, other):
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self._terms) != set(other._terms):
            return False
        ratios = {self._terms[m] / other._terms[m] for m in self._terms}
        return len(ratios) == 1

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._terms.items():
            body = "".join(
                v + (f"^{e}" if e > 1 else "") for v, e in zip(VARS, m) if e
            )
            mag = abs(c)
            coef = format_rational(mag)
            if body and mag == 1:
                coef = ""
            sign = "-" if c < 0 else "+"
            parts.append((sign, coef + body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += sign + text
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


def _order_key(item):
    m = item[0]
    # higher total degree first, then x-heavy before y-heavy before z-heavy
    return (-sum(m), tuple(-e for e in m))


def _lift(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.const(x)
    return NotImplemented


def poly_gcd(p, q, var="x"):
    """Euclidean algorithm; result is primitive with positive leading coefficient."""
    a, b = p, q
    while not b.is_zero():
        _, r = a.divmod(b, var)
        a, b = b, r
    return a.primitive()
