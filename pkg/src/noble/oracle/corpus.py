"""A deterministic corpus of small inverse semigroups."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..algebra import SemigroupTable, adjoin_identity, adjoin_zero, validate_inverse_semigroup
from ..errors import SizeCapExceeded
from ..partial import (
    ConcreteFamily,
    PartialBijection,
    abstract_table_of,
    generate_closure,
    inverse_subsemigroups,
    symmetric_inverse_semigroup,
)
from .groups import group_catalog
from .iso import invariant, isomorphisms

EXHAUSTIVE_CAP = 6
GROUP_ORDER = 12


def semilattices(n: int) -> list[SemigroupTable]:
    """Every semilattice of order ``n`` up to isomorphism, as meet tables.

    Posets are enumerated with a natural labelling (``i < j`` in the order
    implies ``i < j`` as integers); those in which every pair has a meet
    are kept.
    """
    pairs = list(combinations(range(n), 2))
    out: list[SemigroupTable] = []
    buckets: dict = {}
    for bits in range(1 << len(pairs)):
        below = [1 << i for i in range(n)]  # reflexive down-sets
        for k, (i, j) in enumerate(pairs):
            if bits >> k & 1:
                below[j] |= 1 << i
        # transitive iff every down-set is a union of down-sets of its members
        closed = all(
            all(below[j] & below[i] == below[i] for i in range(n) if below[j] >> i & 1)
            for j in range(n)
        )
        if not closed:
            continue
        rows = []
        ok = True
        for a in range(n):
            row = []
            for b in range(n):
                common = below[a] & below[b]
                meet = [c for c in range(n) if common >> c & 1 and below[c] == common]
                if not meet:
                    ok = False
                    break
                row.append(meet[0])
            if not ok:
                break
            rows.append(row)
        if not ok:
            continue
        S = validate_inverse_semigroup(rows)
        key = invariant(S)
        if any(next(isomorphisms(S, T), None) is not None for T in buckets.get(key, ())):
            continue
        buckets.setdefault(key, []).append(S)
        object.__setattr__(S, "name", f"SL{n}_{len(out)}")
        out.append(S)
    return out


def chain(n: int) -> SemigroupTable:
    """The ``n``-element chain semilattice ``min(i, j)``."""
    return validate_inverse_semigroup([[min(i, j) for j in range(n)] for i in range(n)], name=f"E{n}")


def brandt_b2() -> SemigroupTable:
    S, _ = abstract_table_of(generate_closure([PartialBijection(2, (1, -1))]), name="B2")
    return S


def symmetric_table(m: int) -> SemigroupTable:
    S, _ = abstract_table_of(symmetric_inverse_semigroup(m), name=f"I{m}")
    return S


class _Dedup:
    def __init__(self):
        self.items: list[SemigroupTable] = []
        self.buckets: dict = {}

    def add(self, S: SemigroupTable, name: str = "") -> bool:
        key = invariant(S)
        for T in self.buckets.get(key, ()):
            if next(isomorphisms(S, T), None) is not None:
                return False
        if name:
            object.__setattr__(S, "name", name)
        self.buckets.setdefault(key, []).append(S)
        self.items.append(S)
        return True


@lru_cache(maxsize=None)
def _corpus(max_order: int) -> tuple[SemigroupTable, ...]:
    d = _Dedup()
    for n in range(1, max_order + 1):
        d.add(chain(n))
        for S in semilattices(n):
            d.add(S)
    for G in group_catalog(GROUP_ORDER):
        d.add(G)
    d.add(brandt_b2())
    d.add(symmetric_table(2))
    d.add(symmetric_table(3))
    for m in (2, 3):
        F = symmetric_inverse_semigroup(m)
        for k, elems in enumerate(inverse_subsemigroups(F)):
            S, _ = abstract_table_of(ConcreteFamily(m, elems, True))
            d.add(S, name=f"I{m}sub{k}")
    base = [S for S in d.items if S.n <= max_order]
    for S in base:
        d.add(adjoin_zero(S), name=f"{S.name}^0")
        d.add(adjoin_identity(S), name=f"{S.name}^1")
    return tuple(sorted(d.items, key=lambda S: S.n))


def generate_corpus(max_order: int = 5) -> list[SemigroupTable]:
    """Deterministic corpus, deduplicated up to isomorphism.

    Semilattices of order ``<= max_order``, all groups of order ``<= 12``,
    ``B2``, every inverse subsemigroup of ``I_2`` and ``I_3``, and the
    zero- and identity-adjoined variants of the members of order
    ``<= max_order``.
    """
    if max_order > EXHAUSTIVE_CAP:
        raise SizeCapExceeded("corpus order", max_order, EXHAUSTIVE_CAP)
    return list(_corpus(max_order))
