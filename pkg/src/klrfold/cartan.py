"""Cartan data, admissible diagram automorphisms, folding, and weight
combinatorics.

A Cartan datum is an index set I with a symmetric bilinear form i.j on ZI
such that i.i is a positive even integer and 2(i.j)/(i.i) is a nonpositive
integer for i != j.  An admissible automorphism permutes I preserving the
form, with i.j = 0 for distinct i, j in one orbit.  Folding restricts the
form to the orbit lattice ZJ, embedding j as the sum of its orbit.

Weights over I (or J) are tuples of nonnegative multiplicities aligned
with the index order.
"""

import json
from fractions import Fraction
from itertools import permutations
from math import lcm


class UnsupportedTypeError(ValueError):
    """Raised for operations restricted to finite type."""


class SizeError(ValueError):
    """Raised when an enumeration exceeds its configured cap."""


class CartanDatum:
    def __init__(self, labels, dot):
        self.labels = tuple(str(x) for x in labels)
        self.index = {x: i for i, x in enumerate(self.labels)}
        self.dot_matrix = tuple(tuple(row) for row in dot)

    def dot(self, i, j):
        return self.dot_matrix[self.index[i]][self.index[j]]

    def d(self, i):
        return self.dot(i, i) // 2

    def cartan(self, i, j):
        return Fraction(self.dot(i, j), self.d(i))

    def axiom_failures(self):
        out = []
        n = len(self.labels)
        for a in range(n):
            for b in range(n):
                if self.dot_matrix[a][b] != self.dot_matrix[b][a]:
                    out.append("dot matrix not symmetric at (%s, %s)"
                               % (self.labels[a], self.labels[b]))
        for i in self.labels:
            v = self.dot(i, i)
            if v <= 0 or v % 2:
                out.append("%s . %s = %d is not a positive even integer" % (i, i, v))
        for i in self.labels:
            for j in self.labels:
                if i == j:
                    continue
                c = Fraction(2 * self.dot(i, j), self.dot(i, i))
                if c > 0 or c.denominator != 1:
                    out.append("2(%s.%s)/(%s.%s) = %s not a nonpositive integer"
                               % (i, j, i, i, c))
        return out

    def __repr__(self):
        return "CartanDatum(%s)" % (", ".join(self.labels))


class DiagramAut:
    def __init__(self, datum, images):
        """images: list of labels, the image of datum.labels[k] is images[k]."""
        self.datum = datum
        self.image = {i: str(img) for i, img in zip(datum.labels, images)}
        self.order = self._order()

    def _order(self):
        n = 1
        for cyc in self.cycles():
            n = lcm(n, len(cyc))
        return n

    def __call__(self, label):
        return self.image[label]

    def inverse(self, label):
        for k, v in self.image.items():
            if v == label:
                return k
        raise KeyError(label)

    def cycles(self):
        seen, out = set(), []
        for i in self.datum.labels:
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.image[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.image[j]
            out.append(tuple(cyc))
        return out

    def orbits_sorted(self):
        """Orbits as sorted label tuples, ordered lexicographically."""
        return sorted(tuple(sorted(c)) for c in self.cycles())


def validate(datum, aut):
    """Structured validation of the datum axioms, automorphism compatibility,
    and orbit orthogonality.  Returns a list of failure strings."""
    failures = list(datum.axiom_failures())
    labels = set(datum.labels)
    if set(aut.image.values()) != labels or set(aut.image) != labels:
        failures.append("automorphism is not a permutation of I")
        return failures
    for i in datum.labels:
        for j in datum.labels:
            if datum.dot(i, j) != datum.dot(aut(i), aut(j)):
                failures.append("form not preserved at (%s, %s)" % (i, j))
    for orb in aut.orbits_sorted():
        for a in range(len(orb)):
            for b in range(a + 1, len(orb)):
                if datum.dot(orb[a], orb[b]) != 0:
                    failures.append("%s . %s = %d nonzero within the orbit %s"
                                    % (orb[a], orb[b],
                                       datum.dot(orb[a], orb[b]), orb))
    return failures


class FoldedDatum:
    """The induced Cartan datum on the orbit set J, with j embedded in ZI
    as the sum of the orbit."""

    def __init__(self, datum, aut):
        fails = validate(datum, aut)
        if fails:
            raise ValueError("invalid folding input: " + "; ".join(fails))
        self.datum = datum
        self.aut = aut
        self.order = aut.order
        self.orbits = aut.orbits_sorted()
        self.names = tuple("".join(o) if len(o) > 1 else o[0] for o in self.orbits)
        dot = []
        for oa in self.orbits:
            row = []
            for ob in self.orbits:
                row.append(sum(datum.dot(i, j) for i in oa for j in ob))
            dot.append(tuple(row))
        self.dot_matrix = tuple(dot)

    def rank(self):
        return len(self.orbits)

    def dot(self, a, b):
        return self.dot_matrix[a][b]

    def d(self, a):
        return self.dot_matrix[a][a] // 2

    def cartan_matrix(self):
        return tuple(tuple(self.dot(a, b) // self.d(a) for b in range(self.rank()))
                     for a in range(self.rank()))

    def as_cartan_datum(self):
        return CartanDatum(self.names, self.dot_matrix)

    # -- weights -----------------------------------------------------------

    def lift(self, wt):
        """NJ weight -> its a-stable lift in NI (tuple over datum.labels)."""
        out = [0] * len(self.datum.labels)
        for a, mult in enumerate(wt):
            for i in self.orbits[a]:
                out[self.datum.index[i]] += mult
        return tuple(out)

    def weight_of_seq(self, seq):
        out = [0] * len(self.datum.labels)
        for i in seq:
            out[self.datum.index[i]] += 1
        return tuple(out)

    def orbit_of(self, label):
        for a, orb in enumerate(self.orbits):
            if label in orb:
                return a
        raise KeyError(label)

    def j_weight_of_lift(self, wtI):
        """Inverse of lift for a-stable NI weights."""
        out = []
        for orb in self.orbits:
            vals = {wtI[self.datum.index[i]] for i in orb}
            if len(vals) != 1:
                raise ValueError("weight is not a-stable")
            out.append(vals.pop())
        return tuple(out)

    def pairing_alpha_check(self, a, b):
        """<alpha_a^vee, alpha_b> = 2 (a.b)/(a.a) on the folded datum."""
        return 2 * self.dot(a, b) // self.dot(a, a)

    def __repr__(self):
        rows = ", ".join("%s.%s=%d" % (self.names[a], self.names[b], self.dot(a, b))
                         for a in range(self.rank()) for b in range(self.rank())
                         if a <= b)
        return "FoldedDatum(J=%s; %s)" % (list(self.names), rows)


# -- sequences ----------------------------------------------------------------

def seq_enumerate(datum, wtI, limit=12):
    """All sequences with content wtI, lexicographically ordered."""
    total = sum(wtI)
    if total > limit:
        raise SizeError("weight height %d exceeds cap %d" % (total, limit))
    letters = []
    for i, mult in zip(datum.labels, wtI):
        letters.extend([i] * mult)
    return sorted(set(permutations(letters)))


def seq_count(wtI):
    from math import factorial
    total = factorial(sum(wtI))
    for m in wtI:
        total //= factorial(m)
    return total


# -- root systems (finite type) -----------------------------------------------

def is_finite_type(folded):
    """Positive definiteness of the symmetrized form via principal minors."""
    r = folded.rank()
    mat = [[Fraction(folded.dot(a, b)) for b in range(r)] for a in range(r)]
    for k in range(1, r + 1):
        sub = [row[:k] for row in mat[:k]]
        if _det(sub) <= 0:
            return False
    return True


def _det(mat):
    mat = [row[:] for row in mat]
    n = len(mat)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if mat[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for r in range(c + 1, n):
            if mat[r][c]:
                f = mat[r][c] * inv
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
    return det


def positive_roots(folded, height_bound=30):
    """All positive roots of the folded datum (finite type only), as
    (weight tuple over J, multiplicity 1), sorted by height then lex."""
    if not is_finite_type(folded):
        raise UnsupportedTypeError("root enumeration requires finite type")
    r = folded.rank()
    simples = [tuple(1 if b == a else 0 for b in range(r)) for a in range(r)]

    def dot_w(x, y):
        return sum(x[a] * folded.dot(a, b) * y[b] for a in range(r) for b in range(r))

    def reflect(x, a):
        coeff = 2 * dot_w(x, simples[a]) // folded.dot(a, a)
        return tuple(x[b] - coeff * simples[a][b] for b in range(r))

    roots = set(simples)
    frontier = set(simples)
    while frontier:
        new = set()
        for x in frontier:
            for a in range(r):
                y = reflect(x, a)
                if all(v >= 0 for v in y) and any(y) and y not in roots:
                    if sum(y) <= height_bound:
                        new.add(y)
        roots |= new
        frontier = new
    return [(x, 1) for x in sorted(roots, key=lambda x: (sum(x), x))]


def graded_dim_f(folded, wtJ, _cache={}):
    """Number of ways to write wtJ as a multiset of positive roots
    (the coefficient of t^wtJ in prod (1 - t^alpha)^-1)."""
    key = (folded.dot_matrix, wtJ)
    if key in _cache:
        return _cache[key]
    roots = [x for x, _ in positive_roots(folded, height_bound=sum(wtJ) + 1)]

    def count(wt, idx):
        if not any(wt):
            return 1
        if idx == len(roots):
            return 0
        root = roots[idx]
        total = 0
        t = 0
        cur = wt
        while all(v >= 0 for v in cur):
            total += count(cur, idx + 1)
            cur = tuple(a - b for a, b in zip(cur, root))
            t += 1
        return total

    val = count(wtJ, 0)
    _cache[key] = val
    return val


# -- JSON input ---------------------------------------------------------------

def load_datum(path_or_dict):
    """Load {"I": [...], "dot": [[...]], "aut": [...]} into (datum, aut)."""
    if isinstance(path_or_dict, dict):
        data = path_or_dict
    else:
        with open(path_or_dict) as fh:
            data = json.load(fh)
    datum = CartanDatum(data["I"], data["dot"])
    aut = DiagramAut(datum, data["aut"])
    return datum, aut


def fold(datum, aut):
    return FoldedDatum(datum, aut)
