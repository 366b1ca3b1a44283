"""Sparse Laurent polynomials in q over Z[zeta_n], and balanced q-combinatorics.

A Laurent value is a map exponent -> Cyc with no stored zeros.  The bar
involution sends q to q^-1 and zeta_n to zeta_n^-1.
"""

from fractions import Fraction

from .cyclotomic import Cyc


class Laurent:
    __slots__ = ("n", "c", "_hash")

    def __init__(self, n, coeffs=None, _clean=False):
        self.n = n
        if coeffs is None:
            self.c = {}
        elif _clean:
            self.c = coeffs
        else:
            self.c = {e: v for e, v in coeffs.items() if v}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(n):
        return Laurent(n, {}, _clean=True)

    @staticmethod
    def one(n):
        return Laurent(n, {0: Cyc.one(n)}, _clean=True)

    @staticmethod
    def q(n, exp=1, coeff=None):
        c = coeff if coeff is not None else Cyc.one(n)
        return Laurent(n, {exp: c})

    @staticmethod
    def of(n, value, exp=0):
        if isinstance(value, Cyc):
            return Laurent(n, {exp: value})
        return Laurent(n, {exp: Cyc.of(n, value)})

    # -- ring structure ----------------------------------------------------

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.n == other.n and self.c == other.c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.c.items())))
        return self._hash

    def __neg__(self):
        return Laurent(self.n, {e: -v for e, v in self.c.items()}, _clean=True)

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            w = out.get(e)
            if w is None:
                out[e] = v
            else:
                w = w + v
                if w:
                    out[e] = w
                else:
                    del out[e]
        return Laurent(self.n, out, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Cyc)):
            v = Cyc.of(self.n, other) if isinstance(other, int) else other
            if not v:
                return Laurent.zero(self.n)
            return Laurent(self.n, {e: c * v for e, c in self.c.items()})
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                p = v1 * v2
                w = out.get(e)
                if w is None:
                    out[e] = p
                else:
                    out[e] = w + p
        return Laurent(self.n, {e: v for e, v in out.items() if v}, _clean=True)

    __rmul__ = __mul__

    def shift(self, d):
        """Multiply by q^d."""
        if not d:
            return self
        return Laurent(self.n, {e + d: v for e, v in self.c.items()}, _clean=True)

    # -- involutions and queries --------------------------------------------

    def bar(self):
        """q -> q^-1, zeta_n -> zeta_n^-1, applied coefficientwise."""
        return Laurent(self.n, {-e: v.conj() for e, v in self.c.items()}, _clean=True)

    def conj_zeta(self):
        return Laurent(self.n, {e: v.conj() for e, v in self.c.items()}, _clean=True)

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def coeff(self, e):
        return self.c.get(e, Cyc.zero(self.n))

    def at_q1(self):
        """Specialize q -> 1."""
        tot = Cyc.zero(self.n)
        for v in self.c.values():
            tot = tot + v
        return tot

    def is_integral(self):
        return all(v.is_integral() for v in self.c.values())

    def is_rational_coeffs(self):
        return all(v.is_rational() for v in self.c.values())

    def divide_exact(self, other):
        """Exact division by a nonzero Laurent; ArithmeticError if inexact."""
        if not other:
            raise ZeroDivisionError
        if not self:
            return Laurent.zero(self.n)
        rem = dict(self.c)
        top = other.max_exp()
        lead = other.c[top]
        lead_inv = lead.inv()
        out = {}
        while rem:
            e = max(rem)
            q_exp = e - top
            q_coeff = rem[e] * lead_inv
            out[q_exp] = q_coeff
            for e2, v2 in other.c.items():
                t = e2 + q_exp
                w = rem.get(t, Cyc.zero(self.n)) - q_coeff * v2
                if w:
                    rem[t] = w
                else:
                    rem.pop(t, None)
            if rem and max(rem) >= e:
                raise ArithmeticError("inexact Laurent division")
        return Laurent(self.n, out)

    def __repr__(self):
        if not self.c:
            return "0"
        bits = []
        for e in sorted(self.c, reverse=True):
            v = self.c[e]
            if e == 0:
                bits.append("(%r)" % v)
            elif e == 1:
                bits.append("(%r)q" % v)
            else:
                bits.append("(%r)q^%d" % (v, e))
        return " + ".join(bits)


# -- balanced q-integers, factorials, binomials ------------------------------

def q_int(n_order, k, d=1):
    """Balanced [k]_{q^d} = q^{d(k-1)} + q^{d(k-3)} + ... + q^{-d(k-1)}."""
    if k < 0:
        raise ValueError("negative quantum integer")
    one = Cyc.one(n_order)
    return Laurent(n_order, {d * (k - 1 - 2 * t): one for t in range(k)})


def q_factorial(n_order, k, d=1):
    out = Laurent.one(n_order)
    for t in range(1, k + 1):
        out = out * q_int(n_order, t, d)
    return out


def qbinom(m, p, d=1, n_order=1):
    """Balanced Gaussian binomial [m choose p] in the variable q^d.

    Requires p <= m; the result is bar-invariant.
    """
    if p < 0 or p > m:
        raise ValueError("qbinom requires 0 <= p <= m")
    num = Laurent.one(n_order)
    for t in range(p):
        num = num * q_int(n_order, m - t, d)
    return num.divide_exact(q_factorial(n_order, p, d))
