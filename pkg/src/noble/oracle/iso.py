"""Isomorphism testing by backtracking over generator images."""

from __future__ import annotations

from typing import Iterator, Optional

from ..algebra import SemigroupTable, green_relations
from .search import presentation


def _monogenic(S: SemigroupTable, s: int) -> tuple[int, int]:
    """Index and period of the cyclic subsemigroup generated by ``s``."""
    seen = {}
    x, k = s, 1
    while x not in seen:
        seen[x] = k
        x = S.table[x][s]
        k += 1
    first = seen[x]
    return first, k - first


def profiles(S: SemigroupTable) -> tuple:
    """Per-element isomorphism invariants."""
    cached = S.__dict__.get("_profiles")
    if cached is not None:
        return cached
    g = green_relations(S)
    dsize = {s: len(b) for b in g.D for s in b}
    lsize = {s: len(b) for b in g.L for s in b}
    tb = S.table
    out = []
    for s in range(S.n):
        commuting = sum(tb[s][t] == tb[t][s] for t in range(S.n))
        out.append((
            S.is_idempotent(s),
            bin(S.up[s]).count("1"),
            bin(S.down[s]).count("1"),
            dsize[s],
            lsize[s],
            commuting,
            _monogenic(S, s),
        ))
    out = tuple(out)
    S.__dict__["_profiles"] = out
    return out


def invariant(S: SemigroupTable) -> tuple:
    """A hashable isomorphism invariant of the whole table."""
    return (S.n, tuple(sorted(profiles(S))))


def isomorphisms(S: SemigroupTable, T: SemigroupTable) -> Iterator[tuple[int, ...]]:
    """Yield every isomorphism ``S -> T`` as a tuple ``phi[s]``."""
    if S.n != T.n or invariant(S) != invariant(T):
        return
    n = S.n
    ps, pt = profiles(S), profiles(T)
    symbols, gen_inv, words, relations = presentation(S)
    order = []
    for i, h in enumerate(symbols):
        if gen_inv[i] not in order:
            order.append(i)
    assigned = [None] * len(symbols)

    def evaluate(word):
        x = assigned[word[0]]
        for i in word[1:]:
            x = T.table[x][assigned[i]]
        return x

    def partial_ok(done):
        ready = [s for s in range(n) if all(i in done for i in words[s])]
        img = {}
        used = set()
        for s in ready:
            t = evaluate(words[s])
            if pt[t] != ps[s] or t in used:
                return False
            used.add(t)
            img[s] = t
        for left, right in relations:
            if all(i in done for i in left) and all(i in done for i in right):
                if evaluate(left) != evaluate(right):
                    return False
        return True

    def rec(k, done):
        if k == len(order):
            phi = tuple(evaluate(words[s]) for s in range(n))
            if len(set(phi)) != n:
                return
            tb, tt = S.table, T.table
            if all(phi[tb[s][t]] == tt[phi[s]][phi[t]] for s in range(n) for t in range(n)):
                yield phi
            return
        i = order[k]
        h = symbols[i]
        for t in range(n):
            if pt[t] != ps[h]:
                continue
            assigned[i] = t
            assigned[gen_inv[i]] = T.inv[t]
            now = done | {i, gen_inv[i]}
            if partial_ok(now):
                yield from rec(k + 1, now)
        assigned[i] = None
        assigned[gen_inv[i]] = None

    yield from rec(0, frozenset())


def are_isomorphic(S: SemigroupTable, T: SemigroupTable) -> Optional[tuple[int, ...]]:
    """An isomorphism ``S -> T`` as an element bijection, or ``None``."""
    return next(isomorphisms(S, T), None)


def automorphisms(S: SemigroupTable) -> list[tuple[int, ...]]:
    return list(isomorphisms(S, S))
