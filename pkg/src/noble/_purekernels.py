"""Pure-Python kernels.

These mirror the compiled module ``_ckernels`` function for function and
are used when it is not built (or when ``NOBLE_PURE=1``).  Element subsets
are int bit masks; tables are sequences of rows.
"""


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def filter_closure(table, inv, up, seed, full):
    """Least up-closed, triple-closed superset of ``seed``; 0 if improper."""
    F = 0
    for s in _bits(seed):
        F |= up[s]
    while True:
        if F == full:
            return 0
        members = _bits(F)
        quot = 0
        for a in members:
            row = table[a]
            for b in members:
                quot |= 1 << row[inv[b]]
        new = F
        for x in _bits(quot):
            row = table[x]
            for c in members:
                y = row[c]
                if not new >> y & 1:
                    new |= up[y]
        if new == F:
            return F
        F = new


def enumerate_filters(table, inv, up, n, seeds=None):
    """Masks of all filters containing some seed element, ascending.

    Starts from principal filters and adds one element at a time; every
    filter is reached because the closures of growing prefixes of its
    members form a chain of filters ending in it.  ``seeds=None`` means
    every element.
    """
    full = (1 << n) - 1
    found = set()
    frontier = []
    for s in (range(n) if seeds is None else seeds):
        F = up[s]
        if F != full and F not in found:
            found.add(F)
            frontier.append(F)
    while frontier:
        nxt = []
        for F in frontier:
            rest = full & ~F
            for s in _bits(rest):
                if found and (F | 1 << s) in found:
                    continue
                G = filter_closure(table, inv, up, F | 1 << s, full)
                if G and G not in found:
                    found.add(G)
                    nxt.append(G)
        frontier = nxt
    return sorted(found)


def transitive_search(gen_inv, relations, words, max_degree, first_only=True):
    """Enumerate transitive actions of an inverse semigroup on <= max_degree points.

    Generators act on points ``0..k-1`` by partial injections filled in
    breadth-first order from point 0, new points being numbered as they
    appear, so each action is produced once up to relabelling.

    ``gen_inv[g]`` is the generator symbol of the inverse of ``g``.
    ``relations`` is a list of pairs of words (tuples of generator
    symbols) whose images must agree.  ``words[s]`` is a word for element
    ``s``; at a complete action the element images must be pairwise
    distinct.

    Returns a list of ``(k, images)`` where ``images[s]`` is a tuple of
    length ``k`` with -1 for undefined points.
    """
    G = len(gen_inv)
    D = max_degree
    UNSET, NONE = -2, -1
    act = [[UNSET] * D for _ in range(G)]
    found = []
    npoints = [1]

    def trace(word, p):
        for g in word:
            q = act[g][p]
            if q == UNSET:
                return UNSET
            if q == NONE:
                return NONE
            p = q
        return p

    def consistent():
        k = npoints[0]
        for left, right in relations:
            for p in range(k):
                a = trace(left, p)
                if a == UNSET:
                    continue
                b = trace(right, p)
                if b == UNSET:
                    continue
                if a != b:
                    return False
        return True

    def leaf():
        k = npoints[0]
        seen = set()
        images = []
        for w in words:
            img = tuple(trace(w, p) for p in range(k))
            if img in seen:
                return None
            seen.add(img)
            images.append(img)
        return k, images

    def step(p, g):
        # advance to the next undecided (point, generator) slot
        while True:
            if g == G:
                p, g = p + 1, 0
            if p >= npoints[0]:
                res = leaf()
                if res is not None:
                    found.append(res)
                    return first_only
                return False
            if act[g][p] == UNSET:
                break
            g += 1
        gi = gen_inv[g]
        k = npoints[0]
        options = [q for q in range(k) if act[gi][q] == UNSET]
        if k < D:
            options.append(k)
        options.append(NONE)
        for q in options:
            if q == NONE:
                act[g][p] = NONE
                if consistent() and step(p, g + 1):
                    return True
                act[g][p] = UNSET
                continue
            new = q == k
            if new:
                npoints[0] += 1
            act[g][p] = q
            prev = act[gi][q]
            act[gi][q] = p
            if consistent() and step(p, g + 1):
                return True
            act[gi][q] = prev
            act[g][p] = UNSET
            if new:
                npoints[0] -= 1
        return False

    step(0, 0)
    return found
