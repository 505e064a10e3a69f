"""Mental-arithmetic procedures, each written the way it is worked by hand.

Every function takes an optional ``steps`` list; when given, human-readable
lines describing the working are appended to it.  Conventional answers for
comparison live in :func:`long_division_period` and plain ``*``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .neutro import format_rational
from .polynomial import Polynomial


class SutraError(ValueError):
    """Precondition of a procedure is not met."""


class Outcome(enum.Enum):
    NOT_APPLICABLE = "NOT_APPLICABLE"
    NOT_FACTORABLE = "NOT_FACTORABLE"

    def __str__(self):
        return self.value


NOT_APPLICABLE = Outcome.NOT_APPLICABLE
NOT_FACTORABLE = Outcome.NOT_FACTORABLE


def _note(steps, line):
    if steps is not None:
        steps.append(line)


def _natural(n, what="operand"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise SutraError(f"{what} must be a non-negative integer, got {n!r}")
    return n


@dataclass(frozen=True)
class RepeatingDecimal:
    """One full period of a purely recurring decimal fraction."""

    digits: str

    @property
    def period(self) -> int:
        return len(self.digits)

    def __str__(self):
        return f"0.({self.digits})"


def long_division_period(d: int) -> RepeatingDecimal:
    """Repetend of 1/d by schoolbook long division (d coprime to 10)."""
    if d < 1 or math.gcd(d, 10) != 1:
        raise SutraError("denominator must be coprime to 10")
    digits, r = [], 1
    while True:
        r *= 10
        digits.append(str(r // d))
        r %= d
        if r == 1 or d == 1:
            break
    return RepeatingDecimal("".join(digits) if d > 1 else "0")


# recurring decimals

def ekadhika_multiplier(d: int) -> int:
    """One more than the digits before the final 9."""
    if _natural(d, "denominator") % 10 != 9:
        raise SutraError(f"denominator {d} does not end in 9")
    return d // 10 + 1


def ekadhika_expand(d: int, method="multiply", steps=None) -> RepeatingDecimal:
    """Period of 1/d for d ending in 9, using the one-more-than multiplier.

    ``multiply`` builds digits from the right: start at 1, multiply by the
    multiplier, keep the units digit and carry the rest.  ``divide`` builds
    them from the left: divide by the multiplier, prefixing each remainder
    to the next quotient digit.
    """
    m = ekadhika_multiplier(d)
    _note(steps, f"multiplier = {d // 10} + 1 = {m}")
    guard = 10 * d + 10
    if method == "multiply":
        digits, digit, carry = [1], 1, 0
        while True:
            v = digit * m + carry
            digit, carry = v % 10, v // 10
            if (digit, carry) == (1, 0):
                break
            digits.append(digit)
            _note(steps, f"{v}: write {digit}, carry {carry}")
            if len(digits) > guard:
                raise RuntimeError("ekadhika multiplication did not close")
        text = "".join(str(k) for k in reversed(digits))
    elif method == "divide":
        out, dividend = [], 1
        while True:
            q, r = divmod(dividend, m)
            out.append(q)
            _note(steps, f"{dividend} / {m} = {q} remainder {r}")
            dividend = 10 * r + q
            if dividend == 1:
                break
            if len(out) > guard:
                raise RuntimeError("ekadhika division did not close")
        text = "".join(str(k) for k in out)
    else:
        raise SutraError("method must be 'multiply' or 'divide'")
    return RepeatingDecimal(text)


# the multiplier c with c * (last digit of d) ending in 9
_SESANYA = {1: 9, 3: 3, 7: 7, 9: 1}


def sesanya_expand(d: int, steps=None) -> RepeatingDecimal:
    """Period of 1/d from the successive remainders of 10^k mod d.

    Each digit is the last digit of remainder * c, where c * d ends in 9.
    For d ending in 3 or 7 that c is the last digit of d itself.
    """
    _natural(d, "denominator")
    if d < 1 or math.gcd(d, 10) != 1:
        raise SutraError(f"denominator {d} shares a factor with 10")
    if d == 1:
        return RepeatingDecimal("0")
    c = _SESANYA[d % 10]
    digits, r = [], 1
    while True:
        r = r * 10 % d
        digit = r * c % 10
        digits.append(str(digit))
        _note(steps, f"remainder {r} x {c} = {r * c} -> {digit}")
        if r == 1:
            break
    return RepeatingDecimal("".join(digits))


# multiplication

_POWERS = {10 ** k for k in range(1, 40)}


def _power_of_ten(base):
    if base not in _POWERS and (base < 10 or 10 ** (len(str(base)) - 1) != base):
        raise SutraError(f"base must be a power of ten, got {base}")
    return base


def default_base(*operands):
    top, base = max(operands), 10
    while base <= top:
        base *= 10
    return base


def nikhilam_multiply(x: int, y: int, base=None, steps=None) -> int:
    """All from 9 and the last from 10: work with deficiencies from the base."""
    _natural(x), _natural(y)
    base = _power_of_ten(base if base is not None else default_base(x, y))
    dx, dy = base - x, base - y
    left = x - dy
    right = dx * dy
    if steps is not None:
        steps.append(f"deficiencies from {base}: {dx}, {dy}")
        steps.append(f"left = {x} - {dy} = {left}, right = {dx} x {dy} = {right}")
        if not 0 <= right < base:
            steps.append(f"right part {right} spills past {base}; carry into the left part")
    return left * base + right


def nikhilam_square(x: int, base=None, steps=None) -> int:
    _natural(x)
    base = _power_of_ten(base if base is not None else default_base(x))
    d = base - x
    _note(steps, f"deficiency {d}: left = {x} - {d} = {x - d}, right = {d}^2 = {d * d}")
    return (x - d) * base + d * d


def square_ending_5(x: int, steps=None) -> int:
    if _natural(x) % 10 != 5:
        raise SutraError(f"{x} does not end in 5")
    t = x // 10
    _note(steps, f"{t} x {t + 1} = {t * (t + 1)}, then append 25")
    return t * (t + 1) * 100 + 25


def ekanyuna_multiply(x: int, nines: int, steps=None) -> int:
    """Multiply by 9, 99, 999, ...: left = x - (excess + 1), right = complement."""
    _natural(x)
    text = str(_natural(nines, "multiplier"))
    if set(text) != {"9"}:
        raise SutraError(f"multiplier {nines} is not all nines")
    base = 10 ** len(text)
    excess, right_part = divmod(x, base)
    left = x - (excess + 1)
    right = base - right_part
    _note(steps, f"{excess} : {right_part}  ->  left {x} - {excess + 1} = {left}, right {base} - {right_part} = {right}")
    return left * base + right


def _digits(n):
    out = [n % 10]
    n //= 10
    while n:
        n, d = divmod(n, 10)
        out.append(d)
    return out


def urdhva_multiply(x: int, y: int, steps=None) -> int:
    """Vertically and crosswise: column sums of digit products, then carries."""
    a, b = _digits(_natural(x)), _digits(_natural(y))
    cols = [0] * (len(a) + len(b) - 1)
    for i, da in enumerate(a):
        if da:
            for j, db in enumerate(b):
                cols[i + j] += da * db
    if steps is not None:
        steps.append("cross products by column: " + " : ".join(str(c) for c in reversed(cols)))
    result, carry, scale = 0, 0, 1
    for c in cols:
        carry, digit = divmod(c + carry, 10)
        result += digit * scale
        scale *= 10
    return result + carry * scale


def first_by_first_last_by_last(x: int, y: int, steps=None):
    """Two-digit shortcut when leading digits sum to 10 and last digits agree."""
    for v in (x, y):
        if not 10 <= _natural(v) <= 99:
            raise SutraError(f"{v} is not a two-digit number")
    f1, l1 = divmod(x, 10)
    f2, l2 = divmod(y, 10)
    if f1 + f2 != 10 or l1 != l2:
        _note(steps, f"{f1} + {f2} = {f1 + f2}, last digits {l1}, {l2}: rule does not apply")
        return NOT_APPLICABLE
    left, right = f1 * f2 + l1, l1 * l1
    _note(steps, f"{f1} x {f2} + {l1} = {left} / {l1}^2 = {right:02d}")
    return left * 100 + right


# polynomial procedures

def _as_poly(p):
    return p if isinstance(p, Polynomial) else Polynomial.parse(p)


def paravartya_divide(dividend, divisor, steps=None):
    """Transpose and apply: synthetic division by a monic x - c."""
    dividend, divisor = _as_poly(dividend), _as_poly(divisor)
    if not divisor.is_univariate("x") or divisor.degree("x") != 1:
        raise SutraError("divisor must be linear in x")
    if divisor.leading("x") != 1:
        raise SutraError("divisor must be monic")
    if not dividend.is_univariate("x"):
        raise SutraError("dividend must be a polynomial in x alone")
    c = -divisor.coeffs("x")[0]
    _note(steps, f"transpose: {divisor} -> multiply by {format_rational(c)}")
    coeffs = dividend.coeffs("x")[::-1]
    row = [coeffs[0]]
    for a in coeffs[1:]:
        row.append(a + c * row[-1])
    _note(steps, "running totals: " + ", ".join(format_rational(v) for v in row))
    quotient = Polynomial.from_coeffs(row[:-1][::-1]) if len(row) > 1 else Polynomial()
    return quotient, row[-1]


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _linear(a, b):
    return Polynomial({(1, 0, 0): a, (0, 0, 0): b})


def _mono(var):
    return {"x": (1, 0, 0), "y": (0, 1, 0), "z": (0, 0, 1)}[var]


def _split_middle(a, b, c):
    """Parts p + q = b with a:p = q:c, i.e. p*q = a*c; None if irrational."""
    s = _rational_sqrt(b * b - 4 * a * c)
    if s is None:
        return None
    return (b + s) / 2, (b - s) / 2


def anurupyena_factor(a, b, c, steps=None):
    """Factor ax^2 + bx + c by splitting the middle coefficient proportionately."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise SutraError("leading coefficient is zero; not a quadratic")
    target = Polynomial.from_coeffs([c, b, a])
    if c == 0:
        _note(steps, "no constant term: x is a factor")
        return _linear(1, 0), _linear(a, b)
    parts = _split_middle(a, b, c)
    if parts is None:
        _note(steps, f"{format_rational(b)} cannot be split into rational parts with product {format_rational(a * c)}")
        return NOT_FACTORABLE
    p, q = parts
    ratio = p / a
    first = _linear(ratio.denominator, ratio.numerator)
    second = _linear(a / ratio.denominator, c / ratio.numerator)
    _note(steps, f"split {format_rational(b)} = {format_rational(p)} + {format_rational(q)}; "
                 f"{format_rational(a)} : {format_rational(p)} = {format_rational(q)} : {format_rational(c)}")
    _note(steps, f"first factor {first}; second by first-by-first, last-by-last: {second}")
    if first * second != target:
        raise AssertionError("proportional split failed to re-expand")
    return first, second


def lopana_hcf(p1, p2, steps=None):
    """HCF by alternately destroying the highest and the lowest powers.

    Each reduction keeps the common factor: subtracting multiples kills the
    top power, adding multiples kills the constant, and numeric or power-of-x
    content is struck out before the next round.
    """
    p1, p2 = _as_poly(p1), _as_poly(p2)
    if p1.is_zero() or p2.is_zero():
        raise SutraError("HCF of a zero polynomial is undefined")
    if not (p1.is_univariate("x") and p2.is_univariate("x")):
        raise SutraError("both polynomials must be in x alone")
    # a shared power of x belongs to the answer; strip it up front
    shared = min(p1.monomial_content()[0], p2.monomial_content()[0])
    xpow = Polynomial({(shared, 0, 0): 1})
    f, g = p1.strip_monomial().primitive(), p2.strip_monomial().primitive()
    kill_top = True
    while True:
        if f.degree("x") < g.degree("x"):
            f, g = g, f
        if g.degree("x") == 0:
            _note(steps, "no common factor beyond a constant")
            return xpow
        if f.is_proportional(g):
            _note(steps, f"common factor {g.primitive()}")
            return (xpow * g).primitive()
        fc, gc = f.coeffs("x"), g.coeffs("x")
        if kill_top:
            shift = Polynomial({(len(fc) - len(gc), 0, 0): 1})
            reduced = f * gc[-1] - g * shift * fc[-1]
            label = "highest"
        else:
            reduced = f * gc[0] - g * fc[0]
            label = "lowest"
        _note(steps, f"destroy {label} power: {reduced}")
        kill_top = not kill_top
        if reduced.is_zero():
            _note(steps, f"common factor {g.primitive()}")
            return (xpow * g).primitive()
        f = reduced.strip_monomial().primitive()
        _note(steps, f"strip common factors: {f}")


def _root_pair(a, b, c):
    """(s1, s2) with a u^2 + b uv + c v^2 = a(u + s1 v)(u + s2 v), or None."""
    parts = _split_middle(a, b, c)
    if parts is None:
        return None
    return parts[0] / a, parts[1] / a


def lopana_factor3(q, steps=None):
    """Factor a homogeneous quadratic in x, y, z into two linear forms.

    Set z = 0 and factor in (x, y); set y = 0 and factor in (x, z); then fill
    the gaps by matching the two factorings on their x terms.
    """
    q = _as_poly(q)
    if q.is_zero() or any(sum(m) != 2 for m in q.terms):
        raise SutraError("expected a homogeneous quadratic in x, y, z")
    names = ("x", "y", "z")
    lead = next((v for v in names if q.coeff(tuple(2 if w == v else 0 for w in names))), None)
    if lead is None:
        raise SutraError("the elimination method needs a squared term")
    others = [v for v in names if v != lead]

    def co(*vs):
        mono = [0, 0, 0]
        for v in vs:
            mono[names.index(v)] += 1
        return q.coeff(tuple(mono))

    a = co(lead, lead)
    pairs = []
    for v in others:
        split = _root_pair(a, co(lead, v), co(v, v))
        if split is None:
            _note(steps, f"setting the other variable to zero leaves an irreducible form in {lead}, {v}")
            return NOT_FACTORABLE
        pairs.append(split)
        _note(steps, f"{others[1] if v == others[0] else others[0]} = 0: "
                     f"{a}({lead} + {format_rational(split[0])}{v})({lead} + {format_rational(split[1])}{v})")
    (s1, s2), (t1, t2) = pairs
    for w1, w2 in ((t1, t2), (t2, t1)):
        f1 = Polynomial({_mono(lead): 1, _mono(others[0]): s1, _mono(others[1]): w1})
        f2 = Polynomial({_mono(lead): 1, _mono(others[0]): s2, _mono(others[1]): w2})
        if f1 * f2 * a == q:
            first = f1.primitive()
            second = f2 * (a / first.coeff(_mono(lead)))
            if first * second != q:
                raise AssertionError("factor scaling went wrong")
            _note(steps, f"fill the gaps: ({first})({second})")
            return first, second
    _note(steps, "the partial factorings do not merge")
    return NOT_FACTORABLE


def sopantya_solve(c, d, steps=None) -> Fraction:
    """Root of 1/(AB) + 1/(AC) = 1/(AD) + 1/(BC) for A, B, C, D in progression.

    With A = x + c and common difference d: L + 2P = 0 where L = x + c + 3d
    and P = x + c + 2d, so 3x + 3c + 7d = 0.
    """
    c, d = Fraction(c), Fraction(d)
    if d == 0:
        raise SutraError("common difference is zero; the four terms coincide")
    root = -(3 * c + 7 * d) / 3
    _note(steps, f"L + 2P = (x + {format_rational(c + 3 * d)}) + 2(x + {format_rational(c + 2 * d)}) "
                 f"= 3x + {format_rational(3 * c + 7 * d)} = 0")
    A = root + c
    terms = (A, A + d, A + 2 * d, A + 3 * d)
    if any(t == 0 for t in terms):
        raise SutraError("root falls on a pole of the equation")
    A, B, C, D = terms
    if 1 / (A * B) + 1 / (A * C) != 1 / (A * D) + 1 / (B * C):
        raise AssertionError("root does not satisfy the equation")
    return root


def coefficient_sum(p) -> Fraction:
    """S_c: the sum of the coefficients, i.e. the value at x = y = z = 1."""
    return _as_poly(p).evaluate(1, 1, 1)


def gunita_check(factors, product, steps=None) -> bool:
    """Product of the factors' S_c equals the product's S_c, and the expansion matches."""
    factors = [_as_poly(f) for f in factors]
    product = _as_poly(product)
    sc = [coefficient_sum(f) for f in factors]
    lhs = math.prod(sc, start=Fraction(1))
    rhs = coefficient_sum(product)
    _note(steps, " x ".join(format_rational(s) for s in sc) + f" = {format_rational(lhs)}; "
                 f"S_c of product = {format_rational(rhs)}")
    expanded = Polynomial.const(1)
    for f in factors:
        expanded = expanded * f
    return lhs == rhs and expanded == product


def gunita_fill_middle(known_factor, product, steps=None) -> Polynomial:
    """Quotient of a cubic by a known linear factor, middle term from S_c."""
    known, product = _as_poly(known_factor), _as_poly(product)
    if not (known.is_univariate("x") and product.is_univariate("x")):
        raise SutraError("polynomials must be in x alone")
    if known.degree("x") != 1 or product.degree("x") != 3:
        raise SutraError("expected a linear factor of a cubic")
    kc, pc = known.coeffs("x"), product.coeffs("x")
    if coefficient_sum(known) == 0:
        raise SutraError("S_c of the known factor is zero; cannot divide")
    if kc[0] == 0:
        raise SutraError("known factor has no constant term")
    first, last = pc[3] / kc[1], pc[0] / kc[0]
    quotient_sc = coefficient_sum(product) / coefficient_sum(known)
    middle = quotient_sc - first - last
    _note(steps, f"first {format_rational(first)}, last {format_rational(last)}, "
                 f"S_c of quotient {format_rational(quotient_sc)}, middle {format_rational(middle)}")
    quotient = Polynomial.from_coeffs([last, middle, first])
    if known * quotient != product:
        raise SutraError(f"{known} is not a factor of {product}")
    return quotient
