"""Finite inverse semigroups given by Cayley tables.

Elements are the integers ``0..n-1``.  Subsets of elements are stored as
Python integers used as bit masks (bit ``s`` set means ``s`` is a member);
:class:`ElementSet` wraps such a mask for the public API.  Products are
read left to right: ``S.mul(s, t)`` is ``st``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from .errors import (
    EquivalentFormsDisagree,
    IdempotentsDontCommute,
    InverseNotUnique,
    NotAssociative,
    NotRegular,
    ValidationError,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class ElementSet:
    n: int
    mask: int = 0

    @classmethod
    def of(cls, n: int, ids: Iterable[int]) -> "ElementSet":
        return cls(n, mask_of(ids))

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, s: int) -> bool:
        return bool(self.mask >> s & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask | other.mask)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "ElementSet":
        return ElementSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    def issubset(self, other: "ElementSet") -> bool:
        return self.mask & ~other.mask == 0

    def ids(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self.ids())) + "}"


@dataclass(frozen=True)
class GreenData:
    """Green's relations as partitions (blocks sorted by least member).

    ``L`` groups elements with equal ``s s^-1`` (equal domains once the
    semigroup acts on the right), ``R`` groups equal ``s^-1 s``.
    """

    L: tuple[tuple[int, ...], ...]
    R: tuple[tuple[int, ...], ...]
    D: tuple[tuple[int, ...], ...]

    def d_class_of(self, s: int) -> tuple[int, ...]:
        for block in self.D:
            if s in block:
                return block
        raise KeyError(s)


@dataclass(frozen=True)
class SemigroupTable:
    n: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    idempotents: ElementSet
    zero: Optional[int] = None
    identity: Optional[int] = None
    name: str = field(default="", compare=False)

    # -- element level -------------------------------------------------
    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    def triple(self, s: int, t: int, u: int) -> int:
        """The triple product ``s t^-1 u``."""
        tb = self.table
        return tb[tb[s][self.inv[t]]][u]

    def leq(self, s: int, t: int) -> bool:
        return self.up[s] >> t & 1 == 1

    def is_idempotent(self, s: int) -> bool:
        return s in self.idempotents

    def dom(self, s: int) -> int:
        """``s s^-1``."""
        return self.table[s][self.inv[s]]

    def ran(self, s: int) -> int:
        """``s^-1 s``."""
        return self.table[self.inv[s]][s]

    # -- cached structure ----------------------------------------------
    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[s]`` is the mask of ``{t : s <= t}``."""
        tb, n = self.table, self.n
        out = []
        for s in range(n):
            row = tb[self.dom(s)]
            m = 0
            for t in range(n):
                if row[t] == s:
                    m |= 1 << t
            out.append(m)
        return tuple(out)

    @cached_property
    def down(self) -> tuple[int, ...]:
        out = [0] * self.n
        for s, m in enumerate(self.up):
            for t in iter_bits(m):
                out[t] |= 1 << s
        return tuple(out)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def idem_mask(self) -> int:
        return self.idempotents.mask

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int32)

    # -- subset level (raw masks) ----------------------------------------
    def up_mask(self, mask: int) -> int:
        up = self.up
        out = 0
        for s in iter_bits(mask):
            out |= up[s]
        return out

    def product_mask(self, a: int, b: int) -> int:
        tb = self.table
        bs = list(iter_bits(b))
        out = 0
        for s in iter_bits(a):
            row = tb[s]
            for t in bs:
                out |= 1 << row[t]
        return out

    def inverse_mask(self, a: int) -> int:
        inv = self.inv
        out = 0
        for s in iter_bits(a):
            out |= 1 << inv[s]
        return out

    def left_mask(self, u: int, a: int) -> int:
        """Mask of ``u A``."""
        row = self.table[u]
        out = 0
        for s in iter_bits(a):
            out |= 1 << row[s]
        return out

    def right_mask(self, a: int, v: int) -> int:
        """Mask of ``A v``."""
        tb = self.table
        out = 0
        for s in iter_bits(a):
            out |= 1 << tb[s][v]
        return out

    def elements(self) -> range:
        return range(self.n)

    def element_set(self, ids: Iterable[int]) -> ElementSet:
        return ElementSet.of(self.n, ids)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.table]


def validate_inverse_semigroup(raw: Sequence[Sequence[int]], name: str = "") -> SemigroupTable:
    """Check the inverse-semigroup axioms and return the populated table.

    Raises one of :class:`NotAssociative`, :class:`NotRegular`,
    :class:`InverseNotUnique`, :class:`IdempotentsDontCommute` with a
    witness, in that order of precedence.
    """
    n = len(raw)
    if n < 1:
        raise ValidationError("a semigroup is nonempty")
    for i, row in enumerate(raw):
        if len(row) != n:
            raise ValidationError(f"row {i} has {len(row)} entries, expected {n}")
        for x in row:
            if not (0 <= int(x) < n):
                raise ValidationError(f"entry {x} in row {i} is out of range")
    T = np.asarray(raw, dtype=np.int64)

    # (st)u == s(tu), vectorised one s at a time to keep memory at n^2
    for s in range(n):
        lhs = T[T[s]]  # lhs[t, u] = (st)u
        rhs = T[s][T]  # rhs[t, u] = s(tu)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            t, u = bad[0]
            raise NotAssociative(s, int(t), int(u))

    idx = np.arange(n)
    inv = []
    for s in range(n):
        # t is an inverse of s iff s t s = s and t s t = t
        sts = T[T[s, idx], s]
        tst = T[T[idx, s], idx]
        cands = np.flatnonzero((sts == s) & (tst == idx))
        if len(cands) == 0:
            raise NotRegular(s)
        if len(cands) > 1:
            raise InverseNotUnique(s, int(cands[0]), int(cands[1]))
        inv.append(int(cands[0]))

    idem = [s for s in range(n) if T[s, s] == s]
    for i, e in enumerate(idem):
        for f in idem[i + 1:]:
            if T[e, f] != T[f, e]:
                raise IdempotentsDontCommute(e, f)

    identity = zero = None
    for e in range(n):
        if identity is None and np.all(T[e] == idx) and np.all(T[:, e] == idx):
            identity = e
        if zero is None and np.all(T[e] == e) and np.all(T[:, e] == e):
            zero = e

    return SemigroupTable(
        n=n,
        table=tuple(tuple(int(x) for x in row) for row in T),
        inv=tuple(inv),
        idempotents=ElementSet.of(n, idem),
        zero=zero,
        identity=identity,
        name=name,
    )


def product(S: SemigroupTable, s: int, t: int) -> int:
    return S.table[s][t]


def triple_product(S: SemigroupTable, s: int, t: int, u: int) -> int:
    return S.triple(s, t, u)


def natural_leq(S: SemigroupTable, s: int, t: int, check: bool = False) -> bool:
    """``s <= t`` in the natural order, i.e. ``s = s s^-1 t``.

    With ``check`` every equivalent characterisation is evaluated as well
    and :class:`EquivalentFormsDisagree` is raised if any differs.
    """
    tb, inv = S.table, S.inv
    si, ti = inv[s], inv[t]
    answer = tb[tb[s][si]][t] == s
    if check:
        forms = (
            tb[tb[s][ti]][s] == s,
            tb[tb[t][si]][s] == s,
            tb[s][si] == tb[s][ti],
            tb[s][si] == tb[t][si],
            tb[si][s] == tb[si][t],
            tb[si][s] == tb[ti][s],
            S.triple(s, s, t) == s,
            S.triple(s, t, s) == s,
            S.triple(t, s, s) == s,
        )
        if any(f != answer for f in forms):
            raise EquivalentFormsDisagree(s, t)
    return answer


def _partition(keys: Sequence) -> tuple[tuple[int, ...], ...]:
    blocks: dict = {}
    for s, k in enumerate(keys):
        blocks.setdefault(k, []).append(s)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def _divides(S: SemigroupTable, s: int, t: int, left: bool) -> bool:
    # s |_l t : s = t or t = s r ;  s |_r t : s = t or t = r s
    if s == t:
        return True
    tb = S.table
    if left:
        return t in tb[s]
    return any(tb[r][s] == t for r in range(S.n))


def green_relations(S: SemigroupTable, check: bool = False) -> GreenData:
    """Green's L, R and D relations of an inverse semigroup.

    With ``check`` the L and R partitions are recomputed from mutual
    divisibility and compared.
    """
    n = S.n
    L = _partition([S.dom(s) for s in range(n)])
    R = _partition([S.ran(s) for s in range(n)])
    # s D t  iff  some u has u u^-1 = s s^-1 and u^-1 u = t^-1 t
    linked = {(S.dom(u), S.ran(u)) for u in range(n)}
    D_key = [None] * n
    blocks = []
    for s in range(n):
        if D_key[s] is not None:
            continue
        D_key[s] = len(blocks)
        block = [s]
        for t in range(s + 1, n):
            if D_key[t] is None and (S.dom(s), S.ran(t)) in linked:
                D_key[t] = D_key[s]
                block.append(t)
        blocks.append(tuple(block))
    D = tuple(sorted(blocks))
    if check:
        dl = [[_divides(S, s, t, True) for t in range(n)] for s in range(n)]
        dr = [[_divides(S, s, t, False) for t in range(n)] for s in range(n)]
        for s in range(n):
            for t in range(n):
                if (dl[s][t] and dl[t][s]) != (S.dom(s) == S.dom(t)):
                    raise ValidationError(f"L disagrees with divisibility at ({s}, {t})")
                if (dr[s][t] and dr[t][s]) != (S.ran(s) == S.ran(t)):
                    raise ValidationError(f"R disagrees with divisibility at ({s}, {t})")
    return GreenData(L=L, R=R, D=D)


def adjoin_identity(S: SemigroupTable) -> SemigroupTable:
    """``S`` with a new identity element ``n`` appended."""
    n = S.n
    rows = [list(r) + [s] for s, r in enumerate(S.table)]
    rows.append(list(range(n + 1)))
    return validate_inverse_semigroup(rows, name=f"{S.name}^1" if S.name else "")


def adjoin_zero(S: SemigroupTable) -> SemigroupTable:
    """``S`` with a new zero element ``n`` appended."""
    n = S.n
    rows = [list(r) + [n] for r in S.table]
    rows.append([n] * (n + 1))
    return validate_inverse_semigroup(rows, name=f"{S.name}^0" if S.name else "")


def relabel(S: SemigroupTable, perm: Sequence[int], name: str = "") -> SemigroupTable:
    """Isomorphic copy with element ``s`` renamed ``perm[s]``."""
    n = S.n
    rows = [[0] * n for _ in range(n)]
    for s in range(n):
        for t in range(n):
            rows[perm[s]][perm[t]] = perm[S.table[s][t]]
    return validate_inverse_semigroup(rows, name=name or S.name)
