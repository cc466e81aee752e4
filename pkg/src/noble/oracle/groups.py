"""Small groups as Cayley tables, and subgroup cores.

The catalog is closed under the constructions that produce every group of
order at most 24: cyclic groups, semidirect products ``N x| C_k`` over
every automorphism of order dividing ``k`` and the dicyclic groups.
Duplicates are removed up to isomorphism.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from ..algebra import ElementSet, SemigroupTable, iter_bits, validate_inverse_semigroup
from ..errors import NotAGroup, NotASubgroup, SizeCapExceeded
from .iso import automorphisms, invariant, isomorphisms

CATALOG_CAP = 24

# number of groups of order 1..24 up to isomorphism
GROUP_COUNTS = (1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15)


def cyclic(n: int) -> SemigroupTable:
    return validate_inverse_semigroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"C{n}")


def direct_product(G: SemigroupTable, H: SemigroupTable, name: str = "") -> SemigroupTable:
    m = H.n
    rows = [
        [G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.n * m)]
        for a in range(G.n * m)
    ]
    return validate_inverse_semigroup(rows, name=name or f"{G.name}x{H.name}")


def semidirect(N: SemigroupTable, phi: Sequence[int], k: int, name: str = "") -> SemigroupTable:
    """``N x| C_k`` with the generator of ``C_k`` acting by the automorphism ``phi``.

    ``(a, i)(b, j) = (a phi^i(b), i + j)``; element ``(a, i)`` is ``i*|N| + a``.
    """
    n = N.n
    powers = [tuple(range(n))]
    for _ in range(1, k):
        prev = powers[-1]
        powers.append(tuple(phi[prev[x]] for x in range(n)))
    rows = []
    for i in range(k):
        for a in range(n):
            row = []
            for j in range(k):
                for b in range(n):
                    row.append(((i + j) % k) * n + N.table[a][powers[i][b]])
            rows.append(row)
    return validate_inverse_semigroup(rows, name=name)


def dicyclic(m: int) -> SemigroupTable:
    """``<a, x | a^2m = 1, x^2 = a^m, x^-1 a x = a^-1>`` of order ``4m``."""
    r = 2 * m

    def code(k, j):
        return j * r + k % r

    rows = []
    for j in range(2):
        for k in range(r):
            row = []
            for l in range(2):
                for mm in range(r):
                    if j == 0:
                        row.append(code(k + mm, l))
                    elif l == 0:
                        row.append(code(k - mm, 1))
                    else:
                        row.append(code(k - mm + m, 0))
            rows.append(row)
    return validate_inverse_semigroup(rows, name=f"Dic{m}")


def _order_of(perm: Sequence[int]) -> int:
    ident = tuple(range(len(perm)))
    p, k = tuple(perm), 1
    while p != ident:
        p = tuple(perm[x] for x in p)
        k += 1
    return k


def _add(catalog: list, G: SemigroupTable) -> None:
    inv = invariant(G)
    for H in catalog:
        if invariant(H) == inv and next(isomorphisms(G, H), None) is not None:
            return
    catalog.append(G)


@lru_cache(maxsize=None)
def groups_of_order(n: int) -> tuple[SemigroupTable, ...]:
    found: list[SemigroupTable] = []
    _add(found, cyclic(n))
    for d in range(2, n):
        if n % d:
            continue
        k = n // d
        for N in groups_of_order(d):
            seen_phi = set()
            for phi in automorphisms(N):
                if k % _order_of(phi) or phi in seen_phi:
                    continue
                seen_phi.add(phi)
                _add(found, semidirect(N, phi, k))
    if n % 4 == 0 and n >= 8:
        _add(found, dicyclic(n // 4))
    for i, G in enumerate(found):
        object.__setattr__(G, "name", f"G{n}_{i}")
    return tuple(found)


def group_catalog(max_order: int = 12) -> list[SemigroupTable]:
    """One representative of every group of order ``<= max_order``."""
    if max_order > CATALOG_CAP:
        raise SizeCapExceeded("group catalog order", max_order, CATALOG_CAP)
    return [G for n in range(1, max_order + 1) for G in groups_of_order(n)]


def is_group(S: SemigroupTable) -> bool:
    return len(S.idempotents) == 1


def group_core(G: SemigroupTable, H) -> ElementSet:
    """Intersection of the conjugates ``u H u^-1`` of a subgroup ``H``."""
    if not is_group(G):
        raise NotAGroup(len(G.idempotents))
    h = H.mask if hasattr(H, "mask") else sum(1 << x for x in H)
    members = list(iter_bits(h))
    e = G.identity
    if (
        not h >> e & 1
        or any(not h >> G.table[a][b] & 1 for a in members for b in members)
        or any(not h >> G.inv[a] & 1 for a in members)
    ):
        raise NotASubgroup(ElementSet(G.n, h))
    core = G.full_mask
    for u in range(G.n):
        conj = 0
        for x in members:
            conj |= 1 << G.table[G.table[u][x]][G.inv[u]]
        core &= conj
    return ElementSet(G.n, core)


def subgroups(G: SemigroupTable) -> list[ElementSet]:
    """All subgroups, found as closures of growing generating sets."""
    if not is_group(G):
        raise NotAGroup(len(G.idempotents))
    tb = G.table

    def close(mask):
        members = list(iter_bits(mask))
        queue = list(members)
        while queue:
            x = queue.pop()
            for y in list(members):
                for z in (tb[x][y], tb[y][x]):
                    if not mask >> z & 1:
                        mask |= 1 << z
                        members.append(z)
                        queue.append(z)
        return mask

    found = {close(1 << G.identity)}
    frontier = list(found)
    while frontier:
        nxt = []
        for m in frontier:
            for s in range(G.n):
                if not m >> s & 1:
                    c = close(m | 1 << s)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        frontier = nxt
    return [ElementSet(G.n, m) for m in sorted(found)]
