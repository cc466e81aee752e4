"""Brute-force search for transitive embeddings into ``I_A``.

Nothing here uses filters.  An inverse semigroup is presented by an
inverse-closed generating set, a word for every element and the relations
``w(s) g = w(sg)``; a transitive action is then searched for point by
point (see :func:`noble._purekernels.transitive_search`) and accepted when
the element images are pairwise distinct.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .. import kernels
from ..algebra import SemigroupTable
from ..errors import SizeCapExceeded
from ..partial import ConcreteFamily, PartialBijection, is_transitive

ORDER_CAP = 10
DEGREE_CAP = 8


@dataclass(frozen=True)
class EmbeddingWitness:
    degree: int
    assignment: tuple[PartialBijection, ...]
    transitive: bool

    def family(self) -> ConcreteFamily:
        return ConcreteFamily(self.degree, tuple(sorted(set(self.assignment), key=PartialBijection.sort_key)), True)


def _closure(S: SemigroupTable, mask: int) -> int:
    members = [s for s in range(S.n) if mask >> s & 1]
    queue = list(members)
    tb = S.table
    while queue:
        x = queue.pop()
        for y in (S.inv[x],):
            if not mask >> y & 1:
                mask |= 1 << y
                members.append(y)
                queue.append(y)
        for y in list(members):
            for z in (tb[x][y], tb[y][x]):
                if not mask >> z & 1:
                    mask |= 1 << z
                    members.append(z)
                    queue.append(z)
    return mask


def generating_set(S: SemigroupTable) -> list[int]:
    """Greedy inverse-semigroup generating set, taking high elements first."""
    height = [bin(S.down[s]).count("1") for s in range(S.n)]
    order = sorted(range(S.n), key=lambda s: (-height[s], s))
    gens, mask = [], 0
    for s in order:
        if not mask >> s & 1:
            gens.append(s)
            mask = _closure(S, mask | 1 << s)
        if mask == S.full_mask:
            break
    return gens


def presentation(S: SemigroupTable):
    """Symbols, inverse pairing, element words and relations for the search."""
    symbols = []
    for g in generating_set(S):
        for h in (g, S.inv[g]):
            if h not in symbols:
                symbols.append(h)
    gen_inv = [symbols.index(S.inv[h]) for h in symbols]
    words = [None] * S.n
    queue = deque()
    for i, h in enumerate(symbols):
        words[h] = (i,)
        queue.append(h)
    while queue:
        x = queue.popleft()
        for i, h in enumerate(symbols):
            y = S.table[x][h]
            if words[y] is None:
                words[y] = words[x] + (i,)
                queue.append(y)
    relations = []
    for s in range(S.n):
        for i, h in enumerate(symbols):
            y = S.table[s][h]
            left = words[s] + (i,)
            if left != words[y]:
                relations.append((left, words[y]))
    return symbols, gen_inv, words, relations


def brute_force_noble(S: SemigroupTable, max_degree: int, backend=None):
    """First transitive faithful action on at most ``max_degree`` points.

    Degrees are tried in increasing order, so a returned witness has the
    least possible degree.  ``None`` means none exists up to the bound.
    """
    if S.n > ORDER_CAP:
        raise SizeCapExceeded("oracle semigroup order", S.n, ORDER_CAP)
    if max_degree > DEGREE_CAP:
        raise SizeCapExceeded("oracle degree", max_degree, DEGREE_CAP)
    _, gen_inv, words, relations = presentation(S)
    for d in range(1, max_degree + 1):
        hits = kernels.transitive_search(gen_inv, relations, words, d, True, backend=backend)
        if hits:
            k, images = hits[0]
            assignment = tuple(PartialBijection(k, tuple(img)) for img in images)
            fam = ConcreteFamily(k, tuple(set(assignment)), True)
            return EmbeddingWitness(k, assignment, is_transitive(fam))
    return None


def transitive_actions(S: SemigroupTable, max_degree: int, backend=None) -> list[EmbeddingWitness]:
    """Every transitive faithful action on at most ``max_degree`` points, one per relabelling class."""
    _, gen_inv, words, relations = presentation(S)
    out = []
    for k, images in kernels.transitive_search(gen_inv, relations, words, max_degree, False, backend=backend):
        assignment = tuple(PartialBijection(k, tuple(img)) for img in images)
        out.append(EmbeddingWitness(k, assignment, is_transitive(ConcreteFamily(k, assignment))))
    return out
