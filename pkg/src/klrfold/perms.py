"""Symmetric-group utilities: one-line permutations, canonical reduced words,
and parabolic coset decompositions.

Permutations are tuples w of length m with w[p] = image of position p
(0-based).  Words are tuples of 0-based adjacent-transposition letters k,
and a word (k1, ..., kr) denotes the composite s_{k1} o ... o s_{kr}
(rightmost letter applied first to positions).

The canonical reduced word of w is the "staircase" word obtained from the
coset decomposition w = u o c_p with u fixing the last position and
c_p the cycle with word (m-2, m-3, ..., p), p = w^-1(m-1).  These words
concatenate well under right multiplication, which the rewriting engine
relies on.
"""

from functools import lru_cache


def identity(m):
    return tuple(range(m))


def compose(w, v):
    """w o v (apply v first)."""
    return tuple(w[v[p]] for p in range(len(w)))


def inverse(w):
    out = [0] * len(w)
    for p, q in enumerate(w):
        out[q] = p
    return tuple(out)


def length(w):
    m = len(w)
    return sum(1 for p in range(m) for q in range(p + 1, m) if w[p] > w[q])


def apply_sk(w, k):
    """w o s_k: swap entries at positions k, k+1."""
    out = list(w)
    out[k], out[k + 1] = out[k + 1], out[k]
    return tuple(out)


def act_on_seq(w, seq):
    """The sequence w.seq with (w.seq)[w(p)] = seq[p]."""
    out = [None] * len(seq)
    for p, letter in enumerate(seq):
        out[w[p]] = letter
    return tuple(out)


def perm_of_word(word, m):
    """s_{k1} o ... o s_{kr} for word = (k1, ..., kr)."""
    w = identity(m)
    for k in word:
        w = apply_sk(w, k)
    return w


@lru_cache(maxsize=None)
def canword(w):
    """Canonical (staircase) reduced word of w."""
    m = len(w)
    if m <= 1:
        return ()
    p = w.index(m - 1)
    if p == m - 1:
        return canword(w[:-1])
    # u = w o c_p^{-1} fixes m-1; tail word is (m-2, m-3, ..., p)
    cinv = list(range(m))
    for t in range(p, m - 1):
        cinv[t] = t + 1
    cinv[m - 1] = p
    u = compose(w, tuple(cinv))
    assert u[m - 1] == m - 1
    return canword(u[:-1]) + tuple(range(m - 2, p - 1, -1))


def top_cycle_start(w):
    """p such that the staircase tail of w is (m-2, ..., p); p = m-1 if empty."""
    return w.index(len(w) - 1)


def block_decompose(w, split):
    """Decompose w = c o (v1 x v2) for the split (k, m-k).

    c is the minimal-length left-coset representative (increasing on each
    block) and v1, v2 are the block permutations.
    """
    k = split
    m = len(w)
    left = sorted(range(k), key=lambda p: w[p])
    right = sorted(range(k, m), key=lambda p: w[p])
    v1 = [0] * k
    for rank, p in enumerate(left):
        v1[p] = rank
    v2 = [0] * (m - k)
    for rank, p in enumerate(right):
        v2[p - k] = rank
    v = tuple(v1) + tuple(q + k for q in v2)
    c = compose(w, inverse(v))
    return c, tuple(v1), tuple(v2)


def min_coset_reps(k, m):
    """All minimal-length representatives for S_k x S_{m-k} left cosets
    (block shuffles), in lexicographic order of the one-line notation."""
    from itertools import combinations
    reps = []
    for left_slots in combinations(range(m), k):
        w = [None] * m
        for i, s in enumerate(left_slots):
            w[s] = i
        rest = [p for p in range(m) if w[p] is None]
        for i, p in enumerate(rest):
            w[p] = k + i
        # w maps position p to slot: we want c with c(0..k-1) = left_slots asc
        c = [None] * m
        for i, s in enumerate(left_slots):
            c[i] = s
        for i, p in enumerate([s for s in range(m) if s not in left_slots]):
            c[k + i] = p
        reps.append(tuple(c))
    reps.sort()
    return reps


def crossing_pairs(w):
    """Inversion pairs (p, q), p < q, w(p) > w(q)."""
    m = len(w)
    return [(p, q) for p in range(m) for q in range(p + 1, m) if w[p] > w[q]]
