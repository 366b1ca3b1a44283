"""Truncated Laurent series over Z[zeta_n]: the codomain of the K-group pairings.

Every value carries its truncation degree; mixed-precision arithmetic
truncates to the smaller precision.
"""

from .cyclotomic import Cyc
from .laurent import Laurent


class NotInvertibleError(ArithmeticError):
    pass


class Series:
    __slots__ = ("n", "prec", "c")

    def __init__(self, n, coeffs, prec):
        self.n = n
        self.prec = prec
        self.c = {e: v for e, v in coeffs.items() if v and e <= prec}

    @staticmethod
    def from_laurent(p, prec):
        return Series(p.n, dict(p.c), prec)

    @staticmethod
    def zero(n, prec):
        return Series(n, {}, prec)

    @staticmethod
    def one(n, prec):
        return Series(n, {0: Cyc.one(n)}, prec)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.n == other.n and self.prec == other.prec and self.c == other.c

    def agrees_with(self, other, through=None):
        """Equality of coefficients through min precision (or `through`)."""
        lim = min(self.prec, other.prec)
        if through is not None:
            lim = min(lim, through)
        lo = [e for e in self.c if e <= lim]
        ro = [e for e in other.c if e <= lim]
        return ({e: self.c[e] for e in lo} == {e: other.c[e] for e in ro})

    def __neg__(self):
        return Series(self.n, {e: -v for e, v in self.c.items()}, self.prec)

    def __add__(self, other):
        prec = min(self.prec, other.prec)
        out = {e: v for e, v in self.c.items() if e <= prec}
        for e, v in other.c.items():
            if e <= prec:
                w = out.get(e)
                out[e] = v if w is None else w + v
        return Series(self.n, out, prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Cyc)):
            v = Cyc.of(self.n, other) if isinstance(other, int) else other
            return Series(self.n, {e: c * v for e, c in self.c.items()}, self.prec)
        if isinstance(other, Laurent):
            other = Series.from_laurent(other, self.prec + max(0, -(other.min_exp() or 0)))
        prec = min(self.prec, other.prec)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                if e <= prec:
                    p = v1 * v2
                    w = out.get(e)
                    out[e] = p if w is None else w + p
        return Series(self.n, out, prec)

    __rmul__ = __mul__

    def bar(self):
        # Only sensible for values that are secretly Laurent polynomials
        return Series(self.n, {-e: v.conj() for e, v in self.c.items()}, self.prec)

    def conj_zeta(self):
        return Series(self.n, {e: v.conj() for e, v in self.c.items()}, self.prec)

    def as_laurent(self):
        return Laurent(self.n, dict(self.c))

    def to_json(self):
        return {str(e): repr(v) for e, v in sorted(self.c.items())}

    def __repr__(self):
        body = repr(self.as_laurent()) if self.c else "0"
        return "%s + O(q^%d)" % (body, self.prec + 1)


def series_inverse(p, prec):
    """Inverse of a Laurent polynomial as a Series through degree `prec`.

    The lowest coefficient of p must be a unit of Z[zeta_n] (or at least
    invertible in Q(zeta_n) with integral inverse series steps handled
    exactly); otherwise NotInvertibleError is raised.
    """
    if not p:
        raise NotInvertibleError("inverse of zero")
    v = p.min_exp()
    lead = p.c[v]
    if not lead.is_integral() or not lead.is_unit():
        raise NotInvertibleError("lowest coefficient %r is not a unit" % (lead,))
    lead_inv = lead.inv()
    # s has lowest exponent -v; solve coefficientwise from s*p = 1:
    # s_e * lead = delta_{e+v,0} - sum_{f != v} s_{e+v-f} * p_f
    out = {}
    zero = Cyc.zero(p.n)
    one = Cyc.one(p.n)
    for e in range(-v, prec + 1):
        t = e + v
        acc = one if t == 0 else zero
        for f, pv in p.c.items():
            if f == v:
                continue
            prev = out.get(t - f)
            if prev is not None:
                acc = acc - prev * pv
        coeff = acc * lead_inv
        if coeff:
            out[e] = coeff
    return Series(p.n, out, prec)


def divide_series(num, den_laurent, prec=None):
    """num / den as a Series (den a Laurent with unit lowest coefficient)."""
    if prec is None:
        prec = num.prec
    if isinstance(num, Laurent):
        num = Series.from_laurent(num, prec)
    lo = min((e for e in num.c), default=0)
    inv = series_inverse(den_laurent, prec - min(0, lo))
    return num * inv
