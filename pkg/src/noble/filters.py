"""Closed sets, filters and their magnitude.

A filter is a nonempty proper subset that is up-closed in the natural
order and closed under the triple product ``[stu] = s t^-1 u``.  Filters
that contain an idempotent are exactly the closed inverse subsemigroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import kernels
from .algebra import ElementSet, SemigroupTable, iter_bits
from .errors import (
    NotClosedInverseSubsemigroup,
    SizeCapExceeded,
    ValidationError,
    ZeroHasNoPrincipalFilter,
)

FILTER_ENUMERATION_CAP = 24
POWERSET_CAP = 16
# filters through an idempotent are far fewer; one machine word of mask bits
CLOSED_ENUMERATION_CAP = 64


@dataclass(frozen=True)
class Filter:
    carrier: ElementSet
    principal_of: Optional[int] = field(default=None, compare=False)

    @property
    def mask(self) -> int:
        return self.carrier.mask

    def __contains__(self, s: int) -> bool:
        return s in self.carrier

    def __iter__(self):
        return iter(self.carrier)

    def __len__(self) -> int:
        return len(self.carrier)

    def ids(self) -> tuple[int, ...]:
        return self.carrier.ids()

    def __lt__(self, other):  # sort by mask, not by dataclass field order
        return self.mask < other.mask

    def __repr__(self) -> str:
        return f"Filter{self.carrier!r}"


@dataclass(frozen=True)
class MagnitudeWitness:
    """``u F1 v^-1 <= F2`` and ``u^-1 F2 v <= F1``; ``None`` is an adjoined identity."""

    u: Optional[int]
    v: Optional[int]


def _as_mask(S: SemigroupTable, T) -> int:
    if isinstance(T, Filter):
        return T.mask
    if isinstance(T, ElementSet):
        return T.mask
    if isinstance(T, int):
        return T
    m = 0
    for s in T:
        m |= 1 << s
    return m


def make_filter(S: SemigroupTable, mask: int) -> Filter:
    carrier = ElementSet(S.n, mask)
    principal = None
    for s in iter_bits(mask):
        if S.up[s] == mask:
            principal = s
            break
    return Filter(carrier, principal)


def up_closure(S: SemigroupTable, T) -> ElementSet:
    return ElementSet(S.n, S.up_mask(_as_mask(S, T)))


def principal_filter(S: SemigroupTable, s: int) -> Filter:
    if S.zero == s:
        raise ZeroHasNoPrincipalFilter(s)
    return Filter(ElementSet(S.n, S.up[s]), s)


def is_filter(S: SemigroupTable, T) -> bool:
    mask = _as_mask(S, T)
    if mask == 0 or mask == S.full_mask:
        return False
    if S.up_mask(mask) != mask:
        return False
    members = list(iter_bits(mask))
    tb, inv = S.table, S.inv
    for a in members:
        for b in members:
            row = tb[tb[a][inv[b]]]
            for c in members:
                if not mask >> row[c] & 1:
                    return False
    return True


def filter_closure(S: SemigroupTable, T) -> Optional[ElementSet]:
    """Smallest filter containing ``T``, or ``None`` if that would be all of S."""
    m = kernels.filter_closure(S, _as_mask(S, T))
    return ElementSet(S.n, m) if m else None


def enumerate_filters(S: SemigroupTable, cap: int = FILTER_ENUMERATION_CAP, method: str = "closure") -> list[Filter]:
    """All filters of ``S`` sorted by carrier mask.

    ``method="powerset"`` tests every subset instead (``n <= 16``).
    """
    if S.n > cap:
        raise SizeCapExceeded("filter enumeration", S.n, cap)
    if method == "powerset":
        if S.n > POWERSET_CAP:
            raise SizeCapExceeded("power-set filter enumeration", S.n, POWERSET_CAP)
        masks = [m for m in range(1, S.full_mask) if is_filter(S, m)]
    elif method == "closure":
        masks = kernels.enumerate_filter_masks(S)
    else:
        raise ValueError(method)
    return [make_filter(S, m) for m in masks]


def enumerate_closed_inverse(S: SemigroupTable, cap: int = CLOSED_ENUMERATION_CAP) -> list[Filter]:
    """Filters containing an idempotent, sorted by carrier mask.

    Only the principal filters of idempotents are used as seeds, so this
    reaches larger semigroups than :func:`enumerate_filters`.
    """
    if S.n > cap:
        raise SizeCapExceeded("closed inverse subsemigroup enumeration", S.n, cap)
    return [make_filter(S, m) for m in kernels.enumerate_filter_masks(S, S.idempotents)]


def _subset(S, a_mask, u, v_inv, target):
    """``u A v_inv`` inside ``target``; ``None`` multiplies as an identity."""
    tb = S.table
    for s in iter_bits(a_mask):
        x = s if u is None else tb[u][s]
        y = x if v_inv is None else tb[x][v_inv]
        if not target >> y & 1:
            return False
    return True


def _translate(S, a_mask, u, v_inv):
    tb = S.table
    out = 0
    for s in iter_bits(a_mask):
        x = s if u is None else tb[u][s]
        y = x if v_inv is None else tb[x][v_inv]
        out |= 1 << y
    return out


def same_magnitude(S: SemigroupTable, F1, F2, s1: bool = False, check: bool = False) -> Optional[MagnitudeWitness]:
    """Least ``(u, v)`` with ``u F1 v^-1 <= F2`` and ``u^-1 F2 v <= F1``.

    ``u, v`` range over ``S``; with ``s1`` an adjoined identity (reported
    as ``None``, tried last) is allowed too unless ``S`` is a monoid.
    """
    m1, m2 = _as_mask(S, F1), _as_mask(S, F2)
    inv = S.inv
    cands: list = list(range(S.n))
    if s1 and S.identity is None:
        cands.append(None)
    for u in cands:
        ui = None if u is None else inv[u]
        for v in cands:
            vi = None if v is None else inv[v]
            if _subset(S, m1, u, vi, m2) and _subset(S, m2, ui, v, m1):
                if check:
                    if S.up_mask(_translate(S, m1, u, vi)) != m2 or S.up_mask(_translate(S, m2, ui, v)) != m1:
                        raise ValidationError(f"magnitude witness ({u}, {v}) does not normalise")
                return MagnitudeWitness(u, v)
    return None


def magnitude_classes(S: SemigroupTable, filters: Iterable[Filter], s1: bool = False) -> list[list[Filter]]:
    """Partition ``filters`` by the same-magnitude relation."""
    classes: list[list[Filter]] = []
    for F in filters:
        for cls in classes:
            if same_magnitude(S, cls[0], F, s1=s1) is not None:
                cls.append(F)
                break
        else:
            classes.append([F])
    return classes


def has_idempotent(S: SemigroupTable, F) -> bool:
    return _as_mask(S, F) & S.idem_mask != 0


def is_closed_inverse_subsemigroup(S: SemigroupTable, F, check: bool = False) -> bool:
    mask = _as_mask(S, F)
    answer = has_idempotent(S, F)
    if check:
        direct = (
            S.product_mask(mask, mask) & ~mask == 0
            and S.inverse_mask(mask) & ~mask == 0
            and S.up_mask(mask) == mask
        )
        if direct != answer:
            raise ValidationError(f"idempotent test and direct closure disagree on {ElementSet(S.n, mask)}")
    return answer


def conjugates(S: SemigroupTable, H) -> list[Filter]:
    """The closed inverse subsemigroups ``up(u H u^-1)`` with ``u^-1 u`` in ``H``."""
    h = _as_mask(S, H)
    if not has_idempotent(S, h):
        raise NotClosedInverseSubsemigroup(ElementSet(S.n, h))
    inv = S.inv
    seen = {}
    for u in range(S.n):
        if not h >> S.ran(u) & 1:
            continue
        k = S.up_mask(_translate(S, h, u, inv[u]))
        if k in seen:
            continue
        if S.up_mask(_translate(S, k, inv[u], u)) != h:
            raise ValidationError(f"conjugation by {u} is not reversible")
        seen[k] = u
    return [make_filter(S, k) for k in sorted(seen)]


def lub(S: SemigroupTable, T) -> Optional[int]:
    """Least upper bound in the natural order, if it exists."""
    mask = _as_mask(S, T)
    if mask == 0:
        return S.zero
    bounds = S.full_mask
    for s in iter_bits(mask):
        bounds &= S.up[s]
    for x in iter_bits(bounds):
        if bounds & ~S.up[x] == 0:
            return x
    return None


def set_product_closure(S: SemigroupTable, H, K) -> ElementSet:
    """``up(H K)``."""
    return ElementSet(S.n, S.up_mask(S.product_mask(_as_mask(S, H), _as_mask(S, K))))
