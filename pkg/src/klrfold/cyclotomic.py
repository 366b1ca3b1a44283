"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Elements are stored in the power basis of Z[zeta_n] modulo the n-th
cyclotomic polynomial, as an integer coordinate vector of length phi(n)
over a common positive denominator.  Working modulo the cyclotomic
polynomial (rather than x^n - 1) keeps the ring an integral domain and
makes conjugation and norms canonical.

For n = 1 this degenerates to plain rational arithmetic.
"""

from fractions import Fraction
from math import gcd


def _poly_divmod(num, den):
    # exact division of integer polynomials, den monic; raises if not exact
    num = list(num)
    q = [0] * (max(len(num) - len(den) + 1, 0))
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        q[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


def cyclotomic_polynomial(n):
    """Coefficient list (low to high, monic) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod(poly, cyclotomic_polynomial(d))
    return poly


class _CycCtx:
    __slots__ = ("n", "phi", "red", "zpow", "conj_rows")

    def __init__(self, n):
        self.n = n
        cp = cyclotomic_polynomial(n)
        self.phi = len(cp) - 1
        phi = self.phi
        # x^k mod Phi_n for k = 0 .. 2*phi-2 (enough for products)
        red = []
        for k in range(max(2 * phi - 1, n)):
            if k < phi:
                row = [0] * phi
                row[k] = 1
            else:
                # x^k = x * x^(k-1), reduce the overflow coordinate
                prev = red[k - 1]
                row = [0] + prev[:-1]
                top = prev[-1]
                if top:
                    for j in range(phi):
                        row[j] -= top * cp[j]
            red.append(row)
        self.red = red
        self.zpow = [tuple(red[k % n]) if (k % n) < len(red) else None
                     for k in range(n)]
        # conjugation zeta -> zeta^(n-1): basis vector x^k -> x^((n-k) mod n)
        self.conj_rows = [tuple(red[(n - k) % n]) for k in range(phi)]


_CTXS = {}


def _ctx(n):
    try:
        return _CTXS[n]
    except KeyError:
        c = _CTXS[n] = _CycCtx(n)
        return c


def _normalize(num, den):
    if den < 0:
        num = tuple(-a for a in num)
        den = -den
    g = den
    for a in num:
        g = gcd(g, a)
        if g == 1:
            break
    if g > 1:
        num = tuple(a // g for a in num)
        den //= g
    return num, den


class Cyc:
    """An element of Q(zeta_n) in the power basis mod the cyclotomic polynomial."""

    __slots__ = ("n", "num", "den", "_hash")

    def __init__(self, n, num, den=1, _normalized=False):
        self.n = n
        if _normalized:
            self.num = num
            self.den = den
        else:
            self.num, self.den = _normalize(tuple(num), den)
        self._hash = None

    # -- constructors ----------------------------------------------------

    @staticmethod
    def of(n, value):
        """Embed an int or Fraction into Q(zeta_n)."""
        ctx = _ctx(n)
        if isinstance(value, Fraction):
            num = [0] * ctx.phi
            num[0] = value.numerator
            return Cyc(n, tuple(num), value.denominator)
        num = [0] * ctx.phi
        num[0] = value
        return Cyc(n, tuple(num), 1, _normalized=True)

    @staticmethod
    def zeta(n, k=1):
        """zeta_n^k."""
        ctx = _ctx(n)
        return Cyc(n, ctx.zpow[k % n], 1)

    @staticmethod
    def zero(n):
        return _zero(n)

    @staticmethod
    def one(n):
        return _one(n)

    # -- ring structure ---------------------------------------------------

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.num, self.den))
        return self._hash

    def __neg__(self):
        return Cyc(self.n, tuple(-a for a in self.num), self.den, _normalized=True)

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mixed cyclotomic orders")
        da, db = self.den, other.den
        if da == db:
            return Cyc(self.n, tuple(a + b for a, b in zip(self.num, other.num)), da)
        return Cyc(self.n, tuple(a * db + b * da for a, b in zip(self.num, other.num)),
                   da * db)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        n = self.n
        if isinstance(other, int):
            return Cyc(n, tuple(a * other for a in self.num), self.den)
        if n != other.n:
            raise ValueError("mixed cyclotomic orders")
        a, b = self.num, other.num
        phi = len(a)
        conv = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        red = _ctx(n).red
        out = conv[:phi]
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = red[k]
                for j in range(phi):
                    out[j] += c * row[j]
        return Cyc(n, tuple(out), self.den * other.den)

    __rmul__ = __mul__

    def conj(self):
        """Galois conjugation zeta_n -> zeta_n^(-1)."""
        ctx = _ctx(self.n)
        phi = ctx.phi
        out = [0] * phi
        for k, c in enumerate(self.num):
            if c:
                row = ctx.conj_rows[k]
                for j in range(phi):
                    out[j] += c * row[j]
        return Cyc(self.n, tuple(out), self.den)

    def inv(self):
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        n, phi = self.n, _ctx(self.n).phi
        # solve (self) * x = 1 over Q via the multiplication matrix
        cols = []
        for k in range(phi):
            e = [0] * phi
            e[k] = 1
            basis = Cyc(n, tuple(e), 1, _normalized=True)
            cols.append((self * basis).as_fractions())
        # Gaussian elimination on the phi x phi system
        mat = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(phi)]
        for col in range(phi):
            piv = next(r for r in range(col, phi) if mat[r][col])
            mat[col], mat[piv] = mat[piv], mat[col]
            rhs[col], rhs[piv] = rhs[piv], rhs[col]
            inv_p = 1 / mat[col][col]
            mat[col] = [m * inv_p for m in mat[col]]
            rhs[col] *= inv_p
            for r in range(phi):
                if r != col and mat[r][col]:
                    f = mat[r][col]
                    mat[r] = [m - f * c for m, c in zip(mat[r], mat[col])]
                    rhs[r] -= f * rhs[col]
        return Cyc.from_fractions(n, rhs)

    def __truediv__(self, other):
        return self * other.inv()

    # -- queries ----------------------------------------------------------

    def as_fractions(self):
        return [Fraction(a, self.den) for a in self.num]

    @staticmethod
    def from_fractions(n, fracs):
        den = 1
        for f in fracs:
            den = den * f.denominator // gcd(den, f.denominator)
        num = tuple(int(f * den) for f in fracs)
        return Cyc(n, num, den)

    def is_integral(self):
        return self.den == 1

    def is_rational(self):
        return not any(self.num[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not a rational element")
        return Fraction(self.num[0], self.den)

    def is_unit(self):
        """True if invertible inside the ring Z[zeta_n]."""
        if not self.is_integral() or not self:
            return False
        inv = self.inv()
        return inv.is_integral()

    def __repr__(self):
        if self.is_rational():
            v = self.rational_value()
            return str(v)
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            frac = Fraction(c, self.den)
            if k == 0:
                terms.append(str(frac))
            else:
                z = "z" if k == 1 else "z^%d" % k
                terms.append(z if frac == 1 else "-" + z if frac == -1
                             else "%s*%s" % (frac, z))
        return " + ".join(terms).replace("+ -", "- ")


_ZEROS, _ONES = {}, {}


def _zero(n):
    try:
        return _ZEROS[n]
    except KeyError:
        z = _ZEROS[n] = Cyc(n, (0,) * _ctx(n).phi, 1, _normalized=True)
        return z


def _one(n):
    try:
        return _ONES[n]
    except KeyError:
        num = [0] * _ctx(n).phi
        num[0] = 1
        o = _ONES[n] = Cyc(n, tuple(num), 1, _normalized=True)
        return o


def euler_phi(n):
    return _ctx(n).phi
