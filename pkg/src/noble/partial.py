"""One-to-one partial transformations of ``{0, ..., m-1}``.

A map is stored as a tuple of length ``m`` whose entry ``a`` is the image
of ``a`` or ``UNDEF``.  Composition is left to right: ``a(phi psi)`` is
``(a phi) psi``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .algebra import SemigroupTable, validate_inverse_semigroup
from .errors import (
    EmptyGenerators,
    ExplosionCap,
    MismatchedPointSets,
    SizeCapExceeded,
    ValidationError,
)

UNDEF = -1
FULL_ENUMERATION_CAP = 5
CLOSURE_POINT_CAP = 8
CLOSURE_SIZE_CAP = 100_000


@dataclass(frozen=True)
class PartialBijection:
    m: int
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.m:
            raise ValidationError(f"map has {len(self.map)} entries for {self.m} points")
        seen = set()
        for b in self.map:
            if b == UNDEF:
                continue
            if not (0 <= b < self.m) or b in seen:
                raise ValidationError(f"{self.map} is not a one-to-one partial map")
            seen.add(b)

    @classmethod
    def from_pairs(cls, m: int, pairs: Iterable[tuple[int, int]]) -> "PartialBijection":
        arr = [UNDEF] * m
        for a, b in pairs:
            arr[a] = b
        return cls(m, tuple(arr))

    @classmethod
    def identity(cls, m: int, points: Iterable[int] | None = None) -> "PartialBijection":
        """The partial identity on ``points`` (all points by default)."""
        pts = range(m) if points is None else points
        return cls.from_pairs(m, ((a, a) for a in pts))

    @classmethod
    def empty(cls, m: int) -> "PartialBijection":
        return cls(m, (UNDEF,) * m)

    def __call__(self, a: int) -> int:
        return self.map[a]

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(a for a, b in enumerate(self.map) if b != UNDEF)

    @property
    def range(self) -> frozenset[int]:
        return frozenset(b for b in self.map if b != UNDEF)

    @property
    def rank(self) -> int:
        return sum(b != UNDEF for b in self.map)

    def graph(self) -> frozenset[tuple[int, int]]:
        return frozenset((a, b) for a, b in enumerate(self.map) if b != UNDEF)

    def is_idempotent(self) -> bool:
        return all(b == UNDEF or a == b for a, b in enumerate(self.map))

    def __le__(self, other: "PartialBijection") -> bool:
        """Graph inclusion."""
        return all(b == UNDEF or other.map[a] == b for a, b in enumerate(self.map))

    def sort_key(self):
        return (self.rank, not self.is_idempotent(), tuple(sorted(self.domain)), self.map)

    def __repr__(self) -> str:
        if self.rank == 0:
            return "[]"
        return "[" + " ".join(f"{a}>{b}" for a, b in enumerate(self.map) if b != UNDEF) + "]"


def compose(phi: PartialBijection, psi: PartialBijection) -> PartialBijection:
    """``phi`` followed by ``psi``."""
    if phi.m != psi.m:
        raise MismatchedPointSets(phi.m, psi.m)
    pm = psi.map
    return PartialBijection(phi.m, tuple(UNDEF if b == UNDEF else pm[b] for b in phi.map))


def invert(phi: PartialBijection) -> PartialBijection:
    arr = [UNDEF] * phi.m
    for a, b in enumerate(phi.map):
        if b != UNDEF:
            arr[b] = a
    return PartialBijection(phi.m, tuple(arr))


@dataclass(frozen=True)
class ConcreteFamily:
    m: int
    elems: tuple[PartialBijection, ...]
    closed: bool = False

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __contains__(self, phi) -> bool:
        return phi in self.elems


def symmetric_inverse_semigroup(m: int) -> ConcreteFamily:
    """All one-to-one partial maps of ``m`` points, in canonical order."""
    if m > FULL_ENUMERATION_CAP:
        raise SizeCapExceeded("symmetric inverse semigroup", m, FULL_ENUMERATION_CAP)
    out = []
    for k in range(m + 1):
        for dom in combinations(range(m), k):
            for img in permutations(range(m), k):
                out.append(PartialBijection.from_pairs(m, zip(dom, img)))
    out.sort(key=PartialBijection.sort_key)
    return ConcreteFamily(m, tuple(out), closed=True)


def generate_closure(generators: Sequence[PartialBijection], cap: int = CLOSURE_SIZE_CAP) -> ConcreteFamily:
    """Least inverse semigroup of partial maps containing ``generators``."""
    gens = list(generators)
    if not gens:
        raise EmptyGenerators()
    m = gens[0].m
    for g in gens:
        if g.m != m:
            raise MismatchedPointSets(m, g.m)
    if m > CLOSURE_POINT_CAP:
        raise SizeCapExceeded("generator point set", m, CLOSURE_POINT_CAP)
    base = []
    for g in gens:
        for h in (g, invert(g)):
            if h not in base:
                base.append(h)
    seen = set(base)
    queue = deque(base)
    while queue:
        x = queue.popleft()
        for g in base:
            for y in (compose(x, g), compose(g, x)):
                if y not in seen:
                    seen.add(y)
                    if len(seen) > cap:
                        raise ExplosionCap(cap)
                    queue.append(y)
    return ConcreteFamily(m, tuple(sorted(seen, key=PartialBijection.sort_key)), closed=True)


def is_transitive(F: ConcreteFamily) -> bool:
    covered = set()
    for phi in F.elems:
        covered.update(phi.graph())
    return len(covered) == F.m * F.m


@dataclass(frozen=True)
class ElementMap:
    """Bidirectional dictionary between element ids and partial maps."""

    maps: tuple[PartialBijection, ...]
    index: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {phi: i for i, phi in enumerate(self.maps)})

    def __getitem__(self, s: int) -> PartialBijection:
        return self.maps[s]

    def id_of(self, phi: PartialBijection) -> int:
        return self.index[phi]

    def __len__(self) -> int:
        return len(self.maps)


def abstract_table_of(F: ConcreteFamily, name: str = "") -> tuple[SemigroupTable, ElementMap]:
    elems = F.elems
    index = {phi: i for i, phi in enumerate(elems)}
    rows = []
    for phi in elems:
        row = []
        for psi in elems:
            prod = compose(phi, psi)
            if prod not in index:
                raise ValidationError(f"family is not closed: {phi} {psi} = {prod}")
            row.append(index[prod])
        rows.append(row)
    return validate_inverse_semigroup(rows, name=name), ElementMap(elems)


def inverse_subsemigroups(F: ConcreteFamily) -> list[tuple[PartialBijection, ...]]:
    """Every inverse subsemigroup of a closed family, as sorted tuples.

    Closed sets are reached by adding one element at a time to smaller
    closed sets, starting from the closures of single elements.
    """
    S, emap = abstract_table_of(F)
    tb, inv, n = S.table, S.inv, S.n

    def close(mask):
        members = [s for s in range(n) if mask >> s & 1]
        queue = list(members)
        while queue:
            x = queue.pop()
            xi = inv[x]
            if not mask >> xi & 1:
                mask |= 1 << xi
                members.append(xi)
                queue.append(xi)
            for y in list(members):
                for z in (tb[x][y], tb[y][x]):
                    if not mask >> z & 1:
                        mask |= 1 << z
                        members.append(z)
                        queue.append(z)
        return mask

    found = set()
    frontier = []
    for s in range(n):
        c = close(1 << s)
        if c not in found:
            found.add(c)
            frontier.append(c)
    while frontier:
        nxt = []
        for c in frontier:
            for s in range(n):
                if not c >> s & 1:
                    d = close(c | 1 << s)
                    if d not in found:
                        found.add(d)
                        nxt.append(d)
        frontier = nxt
    out = []
    for c in sorted(found):
        out.append(tuple(emap[s] for s in range(n) if c >> s & 1))
    return out
