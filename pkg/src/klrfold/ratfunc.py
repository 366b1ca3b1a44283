"""The field Q(q) as reduced fractions of integer-coefficient polynomials.

Used for Gram-matrix work on the free twisted bialgebra, where exact
rational-function arithmetic is required and no root of unity appears.
"""

from fractions import Fraction
from math import gcd


def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a):
    return [-c for c in a]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return _trim(out)


def _content(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g or 1


def _primitive(a):
    g = _content(a)
    if a and a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _pdivmod_frac(a, b):
    """Polynomial divmod over Q; returns (quotient, remainder) as Fractions."""
    a = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    while len(a) >= len(b) and _trim(list(a)):
        a = _trim(a)
        if len(a) < len(b):
            break
        k = len(a) - len(b)
        f = a[-1] / lb
        q[k] = f
        for j, d in enumerate(b):
            a[k + j] -= f * Fraction(d)
        a = a[:-1]
    return q, _trim(a)


def _pgcd(a, b):
    a, b = _primitive(list(a)), _primitive(list(b))
    while b:
        _, r = _pdivmod_frac(a, b)
        if not r:
            a, b = b, []
        else:
            den = 1
            for c in r:
                den = den * c.denominator // gcd(den, c.denominator)
            rint = _primitive([int(c * den) for c in r])
            a, b = b, rint
    return _primitive(a)


class QRat:
    """Reduced fraction num/den of integer polynomials in q, den with
    positive leading coefficient and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,), _reduced=False):
        num = _trim(list(num))
        den = _trim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if not num:
                den = [1]
            else:
                g = _pgcd(num, den)
                if len(g) > 1 or g[0] != 1:
                    num, _ = _pdivmod_frac(num, g)
                    den, _ = _pdivmod_frac(den, g)
                    num = [int(c) for c in num]
                    den = [int(c) for c in den]
                cn, cd = _content(num), _content(den)
                cg = gcd(cn, cd)
                num = [c // cg for c in num]
                den = [c // cg for c in den]
                if den[-1] < 0:
                    num, den = _pneg(num), _pneg(den)
        self.num = tuple(num)
        self.den = tuple(den)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(value):
        if isinstance(value, QRat):
            return value
        if isinstance(value, Fraction):
            return QRat([value.numerator], [value.denominator])
        return QRat([value], [1])

    @staticmethod
    def q(exp=1):
        if exp >= 0:
            return QRat([0] * exp + [1], [1], _reduced=True)
        return QRat([1], [0] * (-exp) + [1], _reduced=True)

    @staticmethod
    def zero():
        return QRat([], [1], _reduced=True)

    @staticmethod
    def one():
        return QRat([1], [1], _reduced=True)

    # -- field structure -----------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return QRat(_pneg(list(self.num)), list(self.den), _reduced=True)

    def __add__(self, other):
        other = QRat.of(other)
        num = _padd(_pmul(list(self.num), list(other.den)),
                    _pmul(list(other.num), list(self.den)))
        return QRat(num, _pmul(list(self.den), list(other.den)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-QRat.of(other))

    def __mul__(self, other):
        other = QRat.of(other)
        return QRat(_pmul(list(self.num), list(other.num)),
                    _pmul(list(self.den), list(other.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = QRat.of(other)
        if not other:
            raise ZeroDivisionError
        return QRat(_pmul(list(self.num), list(other.den)),
                    _pmul(list(self.den), list(other.num)))

    def inv(self):
        return QRat.one() / self

    def bar(self):
        """q -> q^-1."""
        n, d = list(self.num), list(self.den)
        k = max(len(n), len(d)) - 1
        rn = list(reversed(n)) + [0] * 0
        rd = list(reversed(d))
        # num(1/q)/den(1/q) = q^(deg den - deg num) * rev(num)/rev(den)
        shift = (len(d) - 1) - (len(n) - 1)
        out = QRat(rn, rd)
        return out * QRat.q(shift) if shift else out

    def at_q1(self):
        num = sum(self.num)
        den = sum(self.den)
        if den == 0:
            raise ZeroDivisionError("pole at q = 1")
        return Fraction(num, den)

    @staticmethod
    def from_laurent(p):
        """Convert a Laurent value with rational integer coefficients."""
        if not p.c:
            return QRat.zero()
        lo = min(p.c)
        coeffs = [0] * (max(p.c) - lo + 1)
        for e, v in p.c.items():
            r = v.rational_value()
            if r.denominator != 1:
                coeffs[e - lo] = r  # kept exact below via Fraction clearing
            else:
                coeffs[e - lo] = r.numerator
        if any(isinstance(c, Fraction) for c in coeffs):
            den = 1
            for c in coeffs:
                if isinstance(c, Fraction):
                    den = den * c.denominator // gcd(den, c.denominator)
            coeffs = [int(Fraction(c) * den) for c in coeffs]
        else:
            den = 1
        out = QRat(coeffs, [den])
        return out * QRat.q(lo) if lo else out

    def __repr__(self):
        def fmt(p):
            if not p:
                return "0"
            bits = []
            for e in range(len(p) - 1, -1, -1):
                c = p[e]
                if not c:
                    continue
                if e == 0:
                    bits.append("%d" % c)
                else:
                    q = "q" if e == 1 else "q^%d" % e
                    bits.append(q if c == 1 else "-" + q if c == -1 else "%d*%s" % (c, q))
            return " + ".join(bits).replace("+ -", "- ")

        if self.den == (1,):
            return fmt(self.num)
        return "(%s)/(%s)" % (fmt(self.num), fmt(self.den))
