"""Integer kernels over letter codes (a=0, A=1, b=2, B=3).

All functions take int8 code arrays and the two rank tables produced by
:func:`geolab.chart.rank_tables`. They compile with numba unless
``GEOLAB_NUMBA=0``.

Counting crossing classes
-------------------------
Lifts of a closed curve that cross the fundamental domain correspond to the
axes through the identity vertex of the Cayley tree of F(a, b). Two crossing
axes share a finite segment of that tree, and translating by the vertices of
the segment moves the pair through every representative it has among those
lifts. Fixing the end of the segment on the backward side of the first lift
picks exactly one representative per ordered pair class, so the number of
classes of unordered pairs is half the number of (pair, role) combinations at
that end.
"""

import numpy as np

from ._jit import jit, prange


@jit
def compare_periodic(u, v, first, after):
    """Order of u^inf and v^inf: returns (sign, first differing index)."""
    p = u.shape[0]
    q = v.shape[0]
    n = p + q
    for k in range(n):
        x = u[k % p]
        y = v[k % q]
        if x != y:
            if k == 0:
                rx = first[x]
                ry = first[y]
            else:
                prev = u[(k - 1) % p]
                rx = after[prev, x]
                ry = after[prev, y]
            if rx < ry:
                return -1, k
            return 1, k
    return 0, n


@jit
def lift_endpoints(w):
    """Row 2i: forward period of lift i (rotation at i); row 2i+1: its inverse."""
    L = w.shape[0]
    out = np.empty((2 * L, L), dtype=np.int8)
    for i in range(L):
        for t in range(L):
            out[2 * i, t] = w[(i + t) % L]
        for t in range(L):
            out[2 * i + 1, t] = w[(i - 1 - t) % L] ^ 1
    return out


@jit
def endpoint_tables(w, first, after):
    """Pairwise order signs, common prefix lengths and ranks of the 2L endpoints.

    ``ok`` is False when two endpoints coincide (non-primitive input).
    """
    E = lift_endpoints(w)
    n = E.shape[0]
    sign = np.zeros((n, n), dtype=np.int8)
    cp = np.zeros((n, n), dtype=np.int64)
    rank = np.zeros(n, dtype=np.int64)
    ok = True
    for x in range(n):
        for y in range(x + 1, n):
            s, k = compare_periodic(E[x], E[y], first, after)
            if s == 0:
                ok = False
            sign[x, y] = s
            sign[y, x] = -s
            cp[x, y] = k
            cp[y, x] = k
    for x in range(n):
        r = 0
        for y in range(n):
            if sign[y, x] < 0:
                r += 1
        rank[x] = r
    return sign, cp, rank, ok


@jit
def _crosses(rank, i, j):
    a = rank[2 * i]
    b = rank[2 * i + 1]
    lo = min(a, b)
    hi = max(a, b)
    c = rank[2 * j]
    d = rank[2 * j + 1]
    return ((lo < c) and (c < hi)) != ((lo < d) and (d < hi))


@jit
def linked_matrix(w, first, after):
    """Boolean L x L matrix of crossing lifts; returns (matrix, ok)."""
    L = w.shape[0]
    sign, cp, rank, ok = endpoint_tables(w, first, after)
    m = np.zeros((L, L), dtype=np.bool_)
    for i in range(L):
        for j in range(i + 1, L):
            if _crosses(rank, i, j):
                m[i, j] = True
                m[j, i] = True
    return m, ok


@jit
def backward_extent(cp, i, j):
    """Length of the shared tree segment beyond the identity, behind lift i."""
    fi = 2 * i
    bi = 2 * i + 1
    fj = 2 * j
    bj = 2 * j + 1
    if cp[fi, fj] > 0 or cp[bi, bj] > 0:
        return cp[bi, bj]
    return cp[bi, fj]


@jit
def forward_extent(cp, i, j):
    fi = 2 * i
    bi = 2 * i + 1
    fj = 2 * j
    bj = 2 * j + 1
    if cp[fi, fj] > 0 or cp[bi, bj] > 0:
        return cp[fi, fj]
    return cp[fi, bj]


@jit
def self_intersection_codes(w, first, after):
    """Self-intersection number of a primitive cyclically reduced word.

    Returns -1 if two lift endpoints coincide or the class count is not integral.
    """
    L = w.shape[0]
    sign, cp, rank, ok = endpoint_tables(w, first, after)
    if not ok:
        return -1
    twice = 0
    for i in range(L):
        for j in range(i + 1, L):
            if _crosses(rank, i, j):
                if backward_extent(cp, i, j) == 0:
                    twice += 1
                if backward_extent(cp, j, i) == 0:
                    twice += 1
    if twice % 2:
        return -1
    return twice // 2


@jit
def linked_count_codes(w, first, after):
    L = w.shape[0]
    sign, cp, rank, ok = endpoint_tables(w, first, after)
    if not ok:
        return -1
    c = 0
    for i in range(L):
        for j in range(i + 1, L):
            if _crosses(rank, i, j):
                c += 1
    return c


@jit(parallel=True)
def batch_self_intersection(words, first, after):
    n = words.shape[0]
    out = np.empty(n, dtype=np.int64)
    for r in prange(n):
        out[r] = self_intersection_codes(words[r], first, after)
    return out


@jit
def _canonical_status(w):
    """(canonical, primitive) for a cyclically reduced code word.

    canonical: w is the least of all rotations of w and of its inverse.
    """
    L = w.shape[0]
    primitive = True
    for r in range(1, L):
        for t in range(L):
            x = w[(r + t) % L]
            y = w[t]
            if x != y:
                if x < y:
                    return False, primitive
                break
        else:
            primitive = False
    for r in range(L):
        # rotation r of the inverse word: inv[t] = w[L-1-t] ^ 1
        for t in range(L):
            x = w[(L - 1 - ((r + t) % L))] ^ 1
            y = w[t]
            if x != y:
                if x < y:
                    return False, primitive
                break
    return True, primitive


@jit
def canonical_words(L):
    """All canonical primitive classes of length L, in lexicographic code order."""
    if L == 1:
        out = np.zeros((2, 1), dtype=np.int8)
        out[1, 0] = 2
        return out
    cap = 1
    for _ in range(L - 1):
        cap *= 3
    out = np.empty((cap, L), dtype=np.int8)
    w = np.zeros(L, dtype=np.int8)
    choice = np.zeros(L, dtype=np.int64)
    count = 0
    # w[0] = a; choice[t] picks the (choice[t])-th letter != inverse(w[t-1])
    t = 1
    choice[1] = -1
    while t >= 1:
        choice[t] += 1
        if choice[t] > 2:
            t -= 1
            continue
        banned = w[t - 1] ^ 1
        c = choice[t]
        if c >= banned:
            c += 1
        w[t] = c
        if t == L - 1:
            if w[L - 1] != 1:
                canon, prim = _canonical_status(w)
                if canon and prim:
                    out[count, :] = w
                    count += 1
        else:
            t += 1
            choice[t] = -1
    return out[:count].copy()


@jit
def free_reduce_codes(s):
    out = np.empty(s.shape[0], dtype=np.int8)
    n = 0
    for k in range(s.shape[0]):
        x = s[k]
        if n > 0 and out[n - 1] == (x ^ 1):
            n -= 1
        else:
            out[n] = x
            n += 1
    return out[:n].copy()
