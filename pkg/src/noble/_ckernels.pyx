# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``noble._purekernels``.

Subsets are ``uint64`` masks, so semigroups of order at most 64 only.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free


cdef struct Tab:
    int n
    int* table
    int* inv
    uint64_t* up
    uint64_t full


cdef int _load(Tab* T, table, inv, up, int n) except -1:
    cdef int i, j
    T.n = n
    T.table = <int*>malloc(n * n * sizeof(int))
    T.inv = <int*>malloc(n * sizeof(int))
    T.up = <uint64_t*>malloc(n * sizeof(uint64_t))
    if T.table == NULL or T.inv == NULL or T.up == NULL:
        _release(T)
        raise MemoryError()
    for i in range(n):
        row = table[i]
        for j in range(n):
            T.table[i * n + j] = row[j]
        T.inv[i] = inv[i]
        T.up[i] = <uint64_t>up[i]
    T.full = (<uint64_t>1 << n) - 1 if n < 64 else ~(<uint64_t>0)
    return 0


cdef void _release(Tab* T):
    free(T.table)
    free(T.inv)
    free(T.up)
    T.table = NULL
    T.inv = NULL
    T.up = NULL


cdef inline int _low(uint64_t m) nogil:
    return __builtin_ctzll(m)


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef uint64_t _closure(Tab* T, uint64_t seed) nogil:
    cdef uint64_t F = 0, new, quot, m, ma, mb
    cdef int n = T.n, a, b, x, c, y
    m = seed
    while m:
        F |= T.up[_low(m)]
        m &= m - 1
    while True:
        if F == T.full:
            return 0
        quot = 0
        ma = F
        while ma:
            a = _low(ma)
            ma &= ma - 1
            mb = F
            while mb:
                b = _low(mb)
                mb &= mb - 1
                quot |= (<uint64_t>1) << T.table[a * n + T.inv[b]]
        new = F
        while quot:
            x = _low(quot)
            quot &= quot - 1
            mb = F
            while mb:
                c = _low(mb)
                mb &= mb - 1
                y = T.table[x * n + c]
                if not (new >> y) & 1:
                    new |= T.up[y]
        if new == F:
            return F
        F = new


def filter_closure(table, inv, up, seed, full):
    """Least up-closed, triple-closed superset of ``seed``; 0 if improper."""
    cdef Tab T
    _load(&T, table, inv, up, len(table))
    try:
        return int(_closure(&T, <uint64_t>seed))
    finally:
        _release(&T)


def enumerate_filters(table, inv, up, int n, seeds=None):
    """Masks of all filters containing some seed element, ascending."""
    cdef Tab T
    cdef uint64_t F, G, rest, bit
    cdef int s
    _load(&T, table, inv, up, n)
    try:
        found = set()
        frontier = []
        for s in (range(n) if seeds is None else seeds):
            F = T.up[s]
            if F != T.full and F not in found:
                found.add(F)
                frontier.append(F)
        while frontier:
            nxt = []
            for f in frontier:
                F = f
                rest = T.full & ~F
                while rest:
                    s = _low(rest)
                    rest &= rest - 1
                    bit = (<uint64_t>1) << s
                    if (F | bit) in found:
                        continue
                    G = _closure(&T, F | bit)
                    if G and G not in found:
                        found.add(G)
                        nxt.append(G)
            frontier = nxt
        return sorted(int(x) for x in found)
    finally:
        _release(&T)


# -- transitive action search -------------------------------------------------

DEF UNSET = -2
DEF NONE = -1

cdef struct Search:
    int G
    int D
    int k
    int* act          # act[g * D + p]
    int* gen_inv
    int nrel
    int* rel_off      # relation r: left word at rel_off[2r], right at rel_off[2r+1]
    int* rel_len
    int* rel_sym


cdef inline int _trace(Search* S, int off, int length, int p) nogil:
    cdef int i, q
    for i in range(length):
        q = S.act[S.rel_sym[off + i] * S.D + p]
        if q < 0:
            return q
        p = q
    return p


cdef bint _consistent(Search* S) nogil:
    cdef int r, p, a, b
    for r in range(S.nrel):
        for p in range(S.k):
            a = _trace(S, S.rel_off[2 * r], S.rel_len[2 * r], p)
            if a == UNSET:
                continue
            b = _trace(S, S.rel_off[2 * r + 1], S.rel_len[2 * r + 1], p)
            if b == UNSET:
                continue
            if a != b:
                return False
    return True


cdef class _Searcher:
    cdef Search S
    cdef list words
    cdef list found
    cdef bint first_only

    def __cinit__(self, gen_inv, relations, words, int max_degree, bint first_only):
        cdef int G = len(gen_inv), i, r, pos, total
        self.S.G = G
        self.S.D = max_degree
        self.S.k = 1
        self.words = [tuple(w) for w in words]
        self.found = []
        self.first_only = first_only
        self.S.act = <int*>malloc(max(G * max_degree, 1) * sizeof(int))
        self.S.gen_inv = <int*>malloc(max(G, 1) * sizeof(int))
        self.S.nrel = len(relations)
        total = sum(len(l) + len(r) for l, r in relations)
        self.S.rel_off = <int*>malloc(max(2 * self.S.nrel, 1) * sizeof(int))
        self.S.rel_len = <int*>malloc(max(2 * self.S.nrel, 1) * sizeof(int))
        self.S.rel_sym = <int*>malloc(max(total, 1) * sizeof(int))
        if (self.S.act == NULL or self.S.gen_inv == NULL or self.S.rel_off == NULL
                or self.S.rel_len == NULL or self.S.rel_sym == NULL):
            raise MemoryError()
        for i in range(G * max_degree):
            self.S.act[i] = UNSET
        for i in range(G):
            self.S.gen_inv[i] = gen_inv[i]
        pos = 0
        for r, (left, right) in enumerate(relations):
            for side, word in enumerate((left, right)):
                self.S.rel_off[2 * r + side] = pos
                self.S.rel_len[2 * r + side] = len(word)
                for i in word:
                    self.S.rel_sym[pos] = i
                    pos += 1

    def __dealloc__(self):
        free(self.S.act)
        free(self.S.gen_inv)
        free(self.S.rel_off)
        free(self.S.rel_len)
        free(self.S.rel_sym)

    cdef int _word_image(self, tuple w, int p):
        cdef int q
        for g in w:
            q = self.S.act[<int>g * self.S.D + p]
            if q < 0:
                return q
            p = q
        return p

    cdef object _leaf(self):
        cdef int k = self.S.k, p
        seen = set()
        images = []
        for w in self.words:
            img = tuple(self._word_image(w, p) for p in range(k))
            if img in seen:
                return None
            seen.add(img)
            images.append(img)
        return k, images

    cdef bint _step(self, int p, int g):
        cdef Search* S = &self.S
        cdef int gi, k, q, prev, nopt, i
        cdef bint new
        cdef int options[66]
        while True:
            if g == S.G:
                p += 1
                g = 0
            if p >= S.k:
                res = self._leaf()
                if res is not None:
                    self.found.append(res)
                    return self.first_only
                return False
            if S.act[g * S.D + p] == UNSET:
                break
            g += 1
        gi = S.gen_inv[g]
        k = S.k
        nopt = 0
        for q in range(k):
            if S.act[gi * S.D + q] == UNSET:
                options[nopt] = q
                nopt += 1
        if k < S.D:
            options[nopt] = k
            nopt += 1
        options[nopt] = NONE
        nopt += 1
        for i in range(nopt):
            q = options[i]
            if q == NONE:
                S.act[g * S.D + p] = NONE
                if _consistent(S) and self._step(p, g + 1):
                    return True
                S.act[g * S.D + p] = UNSET
                continue
            new = q == k
            if new:
                S.k += 1
            S.act[g * S.D + p] = q
            prev = S.act[gi * S.D + q]
            S.act[gi * S.D + q] = p
            if _consistent(S) and self._step(p, g + 1):
                return True
            S.act[gi * S.D + q] = prev
            S.act[g * S.D + p] = UNSET
            if new:
                S.k -= 1
        return False


def transitive_search(gen_inv, relations, words, int max_degree, bint first_only=True):
    """Enumerate transitive actions on <= max_degree points (see the pure version)."""
    if max_degree > 64:
        raise ValueError("max_degree above 64")
    if max_degree < 1:
        return []
    s = _Searcher(gen_inv, relations, words, max_degree, first_only)
    s._step(0, 0)
    return s.found
