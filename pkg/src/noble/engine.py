"""Deciding nobility and building transitive representations.

A finite inverse semigroup is *noble* when it is isomorphic to a
transitive inverse semigroup of one-to-one partial maps.  It is noble
exactly when it has an infinitesimal closed inverse subsemigroup ``H``;
``S`` then acts on a family of filters of the same magnitude as ``H`` by

    F1 f(s) = F2   iff   F1 s <= F2  and  F2 s^-1 <= F1.

The default acting family is the orbit ``{up(H u) : u u^-1 in H}``.  The
full magnitude class ``{up(u H v^-1) : u^-1 u, v^-1 v in H}`` is always
measured as well; on ``I_2`` it splits into two orbits, so the action on
it is not transitive.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .algebra import ElementSet, SemigroupTable, iter_bits
from .errors import (
    ActionNotFunctional,
    DegenerateSemigroup,
    FamilyNotUniform,
    Inconclusive,
    NotClosedInverseSubsemigroup,
    NotTransitive,
    ValidationError,
)
from .filters import (
    Filter,
    _as_mask,
    conjugates,
    enumerate_closed_inverse,
    enumerate_filters,
    has_idempotent,
    is_filter,
    lub,
    magnitude_classes,
    make_filter,
    same_magnitude,
)
from .partial import (
    UNDEF,
    ConcreteFamily,
    PartialBijection,
    abstract_table_of,
    compose,
    invert,
)

log = logging.getLogger(__name__)

ORBIT, MAGNITUDE, CUSTOM = "orbit", "magnitude", "custom"


@dataclass(frozen=True)
class FilterFamily:
    filters: tuple[Filter, ...]
    kind: str = CUSTOM
    anchor: Optional[Filter] = None

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    def __getitem__(self, i: int) -> Filter:
        return self.filters[i]

    def index(self, F: Filter) -> int:
        return self.filters.index(F)


def make_family(S: SemigroupTable, filters: Sequence, kind: str = CUSTOM, anchor=None, check: bool = True) -> FilterFamily:
    """Deduplicate and sort ``filters`` and check they share one magnitude.

    ``same_magnitude`` is an equivalence relation, so each member is only
    compared with the first.
    """
    masks = sorted({_as_mask(S, F) for F in filters})
    fs = tuple(make_filter(S, m) for m in masks)
    if check:
        for j, F in enumerate(fs):
            if not is_filter(S, F.mask):
                raise ValidationError(f"family member {F} is not a filter")
            if j and same_magnitude(S, fs[0], F) is None:
                raise FamilyNotUniform(0, j)
    if anchor is not None and not isinstance(anchor, Filter):
        anchor = make_filter(S, anchor.mask if isinstance(anchor, ElementSet) else anchor)
    return FilterFamily(fs, kind, anchor)


@dataclass(frozen=True)
class Representation:
    family: FilterFamily
    action: tuple[PartialBijection, ...]
    is_homomorphism: Optional[bool] = None
    is_faithful: Optional[bool] = None
    is_transitive: Optional[bool] = None

    @property
    def degree(self) -> int:
        return len(self.family)

    @property
    def verified(self) -> bool:
        return bool(self.is_homomorphism and self.is_faithful and self.is_transitive)

    def flags(self) -> dict:
        return {
            "is_homomorphism": self.is_homomorphism,
            "is_faithful": self.is_faithful,
            "is_transitive": self.is_transitive,
        }


@dataclass(frozen=True)
class Witness:
    H: Filter
    family: FilterFamily
    representation: Representation
    degenerate: bool = False


@dataclass(frozen=True)
class Refutation:
    candidates: tuple[tuple[Filter, Optional[int]], ...]
    oracle_bound: int = 0


@dataclass(frozen=True)
class NobilityCertificate:
    verdict: str
    witness: Optional[Witness] = None
    refutation: Optional[Refutation] = None
    findings: dict = field(default_factory=dict)

    @property
    def noble(self) -> bool:
        return self.verdict == "noble"


# -- infinitesimality -------------------------------------------------------

def _basis_defect(S: SemigroupTable, masks: Sequence[int], elements) -> Optional[int]:
    """First element whose up-set is not the meet of the members containing it.

    An empty meet is all of ``S``, which equals an up-set only for the zero.
    """
    full = S.full_mask
    for s in elements:
        meet = full
        for m in masks:
            if m >> s & 1:
                meet &= m
        if meet != S.up[s]:
            return s
    return None


def is_infinitesimal_basis(S: SemigroupTable, family) -> bool:
    masks = [F.mask for F in family]
    return _basis_defect(S, masks, range(S.n)) is None


def failing_idempotent(S: SemigroupTable, H) -> Optional[int]:
    """First nonzero idempotent not recovered from the conjugates of ``H``."""
    h = _as_mask(S, H)
    if not has_idempotent(S, h):
        raise NotClosedInverseSubsemigroup(ElementSet(S.n, h))
    masks = [K.mask for K in conjugates(S, h)]
    idems = [e for e in iter_bits(S.idem_mask) if e != S.zero]
    return _basis_defect(S, masks, idems)


def is_infinitesimal_subsemigroup(S: SemigroupTable, H) -> bool:
    return failing_idempotent(S, H) is None


def closed_inverse_subsemigroups(S: SemigroupTable, filters=None) -> list[Filter]:
    if filters is None:
        return enumerate_closed_inverse(S)
    return [F for F in filters if has_idempotent(S, F)]


def scan_candidates(S: SemigroupTable, filters=None) -> tuple[Optional[Filter], list[tuple[Filter, Optional[int]]]]:
    """Test closed inverse subsemigroups in ascending mask order.

    Returns the first infinitesimal one (or ``None``) and the ledger of
    ``(candidate, failing idempotent)`` for every candidate tested.
    """
    ledger = []
    for H in closed_inverse_subsemigroups(S, filters):
        e = failing_idempotent(S, H)
        ledger.append((H, e))
        if e is None:
            return H, ledger
    return None, ledger


def find_infinitesimal(S: SemigroupTable) -> Optional[Filter]:
    return scan_candidates(S)[0]


# -- acting families ----------------------------------------------------------

def _require_closed(S, H) -> int:
    h = _as_mask(S, H)
    if not has_idempotent(S, h):
        raise NotClosedInverseSubsemigroup(ElementSet(S.n, h))
    return h


def coset_family(S: SemigroupTable, H) -> FilterFamily:
    """``{up(H u) : u u^-1 in H}``."""
    h = _require_closed(S, H)
    masks = {S.up_mask(S.right_mask(h, u)) for u in range(S.n) if h >> S.dom(u) & 1}
    return make_family(S, masks, ORBIT, anchor=h, check=False)


def magnitude_family(S: SemigroupTable, H) -> FilterFamily:
    """``{up(u H v^-1) : u^-1 u, v^-1 v in H}``."""
    h = _require_closed(S, H)
    inv = S.inv
    us = [u for u in range(S.n) if h >> S.ran(u) & 1]
    masks = set()
    for u in us:
        uh = S.left_mask(u, h)
        for v in us:
            masks.add(S.up_mask(S.right_mask(uh, inv[v])))
    return make_family(S, masks, MAGNITUDE, anchor=h, check=False)


def build_representation(S: SemigroupTable, family: FilterFamily) -> Representation:
    masks = [F.mask for F in family]
    k = len(masks)
    inv = S.inv
    action = []
    for s in range(S.n):
        fwd = [S.right_mask(m, s) for m in masks]
        back = [S.right_mask(m, inv[s]) for m in masks]
        img = [UNDEF] * k
        hit = set()
        for i in range(k):
            for j in range(k):
                if fwd[i] & ~masks[j] == 0 and back[j] & ~masks[i] == 0:
                    if img[i] != UNDEF:
                        raise ActionNotFunctional(s, f"(filter {i} goes to {img[i]} and {j})")
                    img[i] = j
            if img[i] != UNDEF:
                if img[i] in hit:
                    raise ActionNotFunctional(s, f"(two filters go to {img[i]})")
                hit.add(img[i])
        action.append(PartialBijection(k, tuple(img)))
    return Representation(family, tuple(action))


def verify_representation(S: SemigroupTable, rep: Representation) -> Representation:
    f = rep.action
    hom = all(compose(f[s], f[t]) == f[S.table[s][t]] for s in range(S.n) for t in range(S.n))
    faithful = len(set(f)) == S.n
    k = rep.degree
    covered = set()
    for phi in f:
        covered.update(phi.graph())
    transitive = len(covered) == k * k
    return replace(rep, is_homomorphism=hom, is_faithful=faithful, is_transitive=transitive)


def represent(S: SemigroupTable, H, kind: str = ORBIT) -> Representation:
    family = coset_family(S, H) if kind == ORBIT else magnitude_family(S, H)
    return verify_representation(S, build_representation(S, family))


def discrepancy_report(S: SemigroupTable, H) -> dict:
    """Sizes and verification flags of the orbit and magnitude actions of ``H``."""
    out = {}
    for kind in (ORBIT, MAGNITUDE):
        rep = represent(S, H, kind)
        out[kind] = {"size": rep.degree, **rep.flags()}
    return out


def basis_from_representation(F: ConcreteFamily, S: Optional[SemigroupTable] = None) -> FilterFamily:
    """The filters ``H_a^b = {s : a f(s) = b}`` of a transitive closed family."""
    if S is None:
        S, _ = abstract_table_of(F)
    if S.n == 1:
        raise DegenerateSemigroup()
    masks = []
    for a in range(F.m):
        for b in range(F.m):
            m = 0
            for s, phi in enumerate(F.elems):
                if phi.map[a] == b:
                    m |= 1 << s
            if m == 0:
                raise NotTransitive(a, b)
            masks.append(m)
    for m in masks:
        if not is_filter(S, m):
            raise ValidationError(f"{ElementSet(S.n, m)} is not a filter")
    return make_family(S, masks, CUSTOM, check=True)


def infinitesimal_basis_classes(S: SemigroupTable, filters=None) -> list[FilterFamily]:
    """Magnitude classes of filters that are infinitesimal bases.

    A subfamily of a class can only lose this property when members are
    removed, so testing whole classes decides whether any basis exists.
    """
    if filters is None:
        filters = enumerate_filters(S)
    out = []
    for cls in magnitude_classes(S, filters):
        if is_infinitesimal_basis(S, cls):
            out.append(make_family(S, cls, MAGNITUDE, check=False))
    return out


# -- decision ----------------------------------------------------------------

def _degenerate_certificate(S: SemigroupTable) -> NobilityCertificate:
    H = Filter(ElementSet.full(1), 0)
    family = FilterFamily((H,), ORBIT, H)
    rep = Representation(family, (PartialBijection.identity(1),), True, True, True)
    return NobilityCertificate("noble", witness=Witness(H, family, rep, degenerate=True))


def decide_nobility(S: SemigroupTable, oracle_bound: int = 0) -> NobilityCertificate:
    """Decide nobility, returning a verified witness or a refutation ledger.

    ``oracle_bound > 0`` cross-checks a negative answer with a bounded
    search for transitive embeddings; a hit raises :class:`Inconclusive`.
    """
    if S.n == 1:
        return _degenerate_certificate(S)
    H, ledger = scan_candidates(S)
    if H is None:
        if oracle_bound:
            from .oracle.search import brute_force_noble

            hit = brute_force_noble(S, oracle_bound)
            if hit is not None:
                raise Inconclusive(
                    f"no infinitesimal closed inverse subsemigroup, yet a transitive embedding of degree {hit.degree} exists"
                )
        return NobilityCertificate(
            "not_noble", refutation=Refutation(tuple(ledger), oracle_bound)
        )

    reps = {kind: represent(S, H, kind) for kind in (ORBIT, MAGNITUDE)}
    findings = {kind: {"size": r.degree, **r.flags()} for kind, r in reps.items()}
    for kind in (ORBIT, MAGNITUDE):
        rep = reps[kind]
        if rep.verified:
            if kind != ORBIT:
                log.warning("orbit action failed verification; using the magnitude family")
            return NobilityCertificate(
                "noble", witness=Witness(H, rep.family, rep), findings=findings
            )
    from .oracle.search import brute_force_noble

    bound = min(reps[ORBIT].degree, 8)
    hit = brute_force_noble(S, bound)
    raise Inconclusive(
        f"infinitesimal H={H!r} found but neither action verified {findings}; "
        f"oracle at degree <= {bound}: {'embedding found' if hit else 'none'}"
    )


# -- classical constructions ---------------------------------------------------

def wagner_preston(S: SemigroupTable) -> tuple[ConcreteFamily, tuple[PartialBijection, ...]]:
    """Right regular representation: ``s`` sends ``x`` to ``x s`` on ``S s^-1``."""
    n, tb = S.n, S.table
    images = []
    for s in range(n):
        d = S.dom(s)
        arr = tuple(tb[x][s] if tb[x][d] == x else UNDEF for x in range(n))
        images.append(PartialBijection(n, arr))
    if len(set(images)) != n:
        raise ValidationError("right translations are not faithful")
    for s in range(n):
        for t in range(n):
            if compose(images[s], images[t]) != images[tb[s][t]]:
                raise ValidationError(f"right translation is not a homomorphism at ({s}, {t})")
    family = ConcreteFamily(n, tuple(sorted(set(images), key=PartialBijection.sort_key)), closed=True)
    return family, tuple(images)


def uniform_basis_check(S: SemigroupTable, B) -> bool:
    """Every element is the join of the members of ``B`` below it, and ``B`` is one D-class."""
    b = _as_mask(S, B)
    members = list(iter_bits(b))
    for s in range(S.n):
        below = b & S.down[s]
        if lub(S, below) != s:
            return False
    linked = {(S.dom(u), S.ran(u)) for u in range(S.n)}
    return all((S.dom(x), S.ran(y)) in linked for x in members for y in members)


def inverse_of_action(rep: Representation, S: SemigroupTable) -> bool:
    """``f(s^-1) = f(s)^-1`` for every element."""
    return all(rep.action[S.inv[s]] == invert(rep.action[s]) for s in range(S.n))
