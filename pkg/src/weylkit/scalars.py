"""Exact scalar arithmetic over Q and over Q(q).

A :class:`Scalar` is either a rational number (mode ``"Q"``) or a rational
function in a formal parameter ``q`` with integer coefficients (mode
``"Qq"``).  Both are stored as a pair of dense integer-coefficient
polynomials ``num/den`` (little-endian coefficient tuples; mode Q simply
restricts both to degree 0).  Every scalar is kept in a canonical form:

* ``den`` is nonzero and has positive leading coefficient,
* ``gcd(num, den) = 1`` as polynomials,
* the integer content of ``num`` and ``den`` together is 1.

Because the representation is canonical, equality is structural and
``is_zero`` is exact.  The parameter ``q`` is never evaluated at a number,
which is how the toolkit models "q is not a root of unity": a nonzero
polynomial in a transcendental element is a unit of Q(q).
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd

from .errors import ModeMismatch

Poly = tuple  # little-endian integer coefficients; () is the zero polynomial


def _pnorm(coeffs) -> Poly:
    """Strip trailing zero coefficients."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return _pnorm(
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
    )


def _pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def _psub(a: Poly, b: Poly) -> Poly:
    return _padd(a, _pneg(b))


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pnorm(out)


def _pcontent(a: Poly) -> int:
    c = 0
    for x in a:
        c = gcd(c, abs(x))
    return c


def _pdiv_exact(a: Poly, b: Poly) -> Poly:
    """Divide a by b in Z[q], raising ValueError if the division is not exact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        top = rem[k + len(b) - 1]
        if top % lead != 0:
            raise ValueError("inexact polynomial division")
        f = top // lead
        out[k] = f
        if f:
            for j, y in enumerate(b):
                rem[k + j] -= f * y
    if any(rem):
        raise ValueError("inexact polynomial division")
    return _pnorm(out)


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[q] with positive leading coefficient."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]
    while fb:
        # long division of fa by fb over Q
        rem = fa[:]
        for k in range(len(rem) - len(fb), -1, -1):
            f = rem[k + len(fb) - 1] / fb[-1]
            if f:
                for j, y in enumerate(fb):
                    rem[k + j] -= f * y
        while rem and rem[-1] == 0:
            rem.pop()
        fa, fb = fb, rem
    if not fa:
        return ()
    # clear denominators, make primitive, positive lead
    mult = 1
    for x in fa:
        mult = mult * x.denominator // gcd(mult, x.denominator)
    ints = [int(x * mult) for x in fa]
    c = 0
    for x in ints:
        c = gcd(c, abs(x))
    ints = [x // c for x in ints]
    if ints[-1] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def _pstr(a: Poly) -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        elif k == 1:
            term = "q" if abs(c) == 1 else "%d*q" % abs(c)
        else:
            term = "q^%d" % k if abs(c) == 1 else "%d*q^%d" % (abs(c), k)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+" if c > 0 else "-") + term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)\s*(?:(?P<coeff>\d+)\s*\*?\s*)?(?:(?P<q>q)(?:\^(?P<exp>-?\d+))?)?"
)


def _pparse(text: str) -> Poly:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse polynomial %r at %r" % (text, text[pos:]))
        sign = -1 if m.group("sign") == "-" else 1
        coeff = m.group("coeff")
        has_q = m.group("q") is not None
        if coeff is None and not has_q:
            raise ValueError("cannot parse polynomial %r" % text)
        c = sign * (int(coeff) if coeff is not None else 1)
        k = int(m.group("exp")) if m.group("exp") else (1 if has_q else 0)
        if k < 0:
            raise ValueError("negative q exponent in polynomial %r" % text)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    deg = max(coeffs) if coeffs else 0
    return _pnorm(coeffs.get(k, 0) for k in range(deg + 1))


class Scalar:
    """An exact element of Q (mode ``"Q"``) or Q(q) (mode ``"Qq"``)."""

    __slots__ = ("mode", "num", "den")

    def __init__(self, mode: str, num, den=(1,), _canonical: bool = False):
        if mode not in ("Q", "Qq"):
            raise ValueError("mode must be 'Q' or 'Qq'")
        self.mode = mode
        if _canonical:
            self.num = num
            self.den = den
            return
        num = _pnorm(num)
        den = _pnorm(den)
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if mode == "Q" and (len(num) > 1 or len(den) > 1):
            raise ModeMismatch("mode-Q scalar with q-dependent value")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num, den)
        if len(g) > 1 or g[0] != 1:
            num = _pdiv_exact(num, g)
            den = _pdiv_exact(den, g)
        c = gcd(_pcontent(num), _pcontent(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num = num
        self.den = den

    # ---- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int, mode: str = "Q") -> "Scalar":
        return cls(mode, (n,) if n else ())

    @classmethod
    def from_fraction(cls, f: Fraction, mode: str = "Q") -> "Scalar":
        f = Fraction(f)
        return cls(mode, (f.numerator,) if f.numerator else (), (f.denominator,))

    @classmethod
    def q_power(cls, k: int = 1) -> "Scalar":
        """The monomial q**k in Q(q); k may be negative."""
        if k >= 0:
            return cls("Qq", (0,) * k + (1,))
        return cls("Qq", (1,), (0,) * (-k) + (1,))

    @classmethod
    def zero(cls, mode: str) -> "Scalar":
        return cls(mode, ())

    @classmethod
    def one(cls, mode: str) -> "Scalar":
        return cls(mode, (1,))

    @classmethod
    def parse(cls, text: str, mode: str) -> "Scalar":
        """Parse "p(q)" or "(p(q))/(s(q))" (round-trips with str)."""
        text = text.strip()
        depth = 0
        split = -1
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0:
                split = i
                break
        if split >= 0:
            return cls(mode, _pparse(text[:split]), _pparse(text[split + 1 :]))
        return cls(mode, _pparse(text))

    # ---- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == (1,) and self.den == (1,)

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; only well-defined for q-free scalars."""
        if len(self.num) > 1 or len(self.den) > 1:
            raise ModeMismatch("scalar depends on q")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def q_monomial_exponent(self):
        """If the scalar is c*q**k for a rational c, return k, else None."""
        nz_num = [i for i, x in enumerate(self.num) if x]
        nz_den = [i for i, x in enumerate(self.den) if x]
        if len(nz_num) == 1 and len(nz_den) == 1:
            return nz_num[0] - nz_den[0]
        return None

    # ---- arithmetic ----------------------------------------------------

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError("expected a Scalar")
        if self.mode != other.mode:
            raise ModeMismatch("%s vs %s" % (self.mode, other.mode))

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(
            self.mode,
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(
            self.mode,
            _psub(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return Scalar(self.mode, _pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(self.mode, _pmul(self.num, other.den), _pmul(self.den, other.num))

    def __neg__(self) -> "Scalar":
        return Scalar(self.mode, _pneg(self.num), self.den, _canonical=True)

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return Scalar(self.mode, self.den, self.num)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = Scalar.one(self.mode)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.mode == other.mode
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.mode, self.num, self.den))

    def __str__(self) -> str:
        if self.den == (1,):
            return _pstr(self.num)
        num = _pstr(self.num)
        den = _pstr(self.den)
        if len(self.num) <= 1 and len(self.den) <= 1:
            return "%s/%s" % (num, den)
        return "(%s)/(%s)" % (num, den)

    def __repr__(self) -> str:
        return "Scalar(%r, %s)" % (self.mode, self)


def scalar_arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    """Functional form of the four field operations."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError("unknown op %r" % op)


def scalar_is_zero(a: Scalar) -> bool:
    return a.is_zero()
