"""Property tests on random inverse semigroups of partial bijections."""

from hypothesis import given, settings, strategies as st

from noble.algebra import green_relations, natural_leq, relabel, triple_product
from noble.engine import decide_nobility, wagner_preston
from noble.filters import enumerate_filters, is_filter, principal_filter, same_magnitude
from noble.formats import emit_cayley, emit_generators, parse_cayley, parse_generators
from noble.partial import UNDEF, PartialBijection, abstract_table_of, compose, generate_closure, invert


@st.composite
def partial_bijections(draw, m):
    images = draw(st.permutations(list(range(m))))
    keep = draw(st.lists(st.booleans(), min_size=m, max_size=m))
    return PartialBijection(m, tuple(b if k else UNDEF for b, k in zip(images, keep)))


@st.composite
def families(draw, max_points=3, max_gens=3):
    m = draw(st.integers(1, max_points))
    gens = draw(st.lists(partial_bijections(m), min_size=1, max_size=max_gens))
    return generate_closure(gens)


@st.composite
def tables(draw):
    F = draw(families())
    S, emap = abstract_table_of(F)
    perm = draw(st.permutations(list(range(S.n))))
    return relabel(S, perm), F


props = settings(max_examples=60, deadline=None)


@props
@given(families())
def test_closure_is_closed(F):
    elems = set(F)
    for a in F:
        assert invert(a) in elems
        for b in F:
            assert compose(a, b) in elems


@props
@given(families())
def test_order_is_inclusion(F):
    S, emap = abstract_table_of(F)
    for s in range(S.n):
        for t in range(S.n):
            assert natural_leq(S, s, t, check=True) == (emap[s] <= emap[t])


@props
@given(families())
def test_green_via_projections(F):
    S, emap = abstract_table_of(F)
    g = green_relations(S, check=True)
    L = {s: b for b in g.L for s in b}
    R = {s: b for b in g.R for s in b}
    for s in range(S.n):
        for t in range(S.n):
            assert (t in L[s]) == (emap[s].domain == emap[t].domain)
            assert (t in R[s]) == (emap[s].range == emap[t].range)


@props
@given(tables())
def test_natural_order_is_stable_partial_order(data):
    S, _ = data
    leq = [[S.leq(s, t) for t in range(S.n)] for s in range(S.n)]
    for s in range(S.n):
        assert leq[s][s]
        for t in range(S.n):
            if leq[s][t] and leq[t][s]:
                assert s == t
            if leq[s][t]:
                assert leq[S.inv[s]][S.inv[t]]
                for u in range(S.n):
                    if leq[t][u]:
                        assert leq[s][u]
    pairs = [(s, t) for s in range(S.n) for t in range(S.n) if leq[s][t]]
    for s1, t1 in pairs:
        for s2, t2 in pairs:
            assert leq[S.table[s1][s2]][S.table[t1][t2]]


@props
@given(tables())
def test_triple_product_forms(data):
    S, _ = data
    for s in range(S.n):
        for t in range(S.n):
            sst = triple_product(S, s, s, t)
            assert sst == S.table[S.dom(s)][t]
            forms = (sst, triple_product(S, s, t, s), triple_product(S, t, s, s))
            assert (forms == (s, s, s)) == S.leq(s, t)


@props
@given(tables())
def test_principal_filters_reverse_order(data):
    S, _ = data
    nonzero = [s for s in range(S.n) if s != S.zero]
    g = green_relations(S)
    D = {s: b for b in g.D for s in b}
    for s in nonzero:
        Fs = principal_filter(S, s)
        assert is_filter(S, Fs)
        for t in nonzero:
            Ft = principal_filter(S, t)
            assert S.leq(s, t) == (Fs.mask & Ft.mask == Ft.mask)
            assert (same_magnitude(S, Fs, Ft) is not None) == (t in D[s])


@props
@given(tables())
def test_verdict_is_invariant_under_relabelling(data):
    S, F = data
    T, _ = abstract_table_of(F)
    assert decide_nobility(S).verdict == decide_nobility(T).verdict


@props
@given(tables())
def test_wagner_preston_faithful(data):
    S, _ = data
    fam, images = wagner_preston(S)
    assert len(set(images)) == S.n
    assert all(compose(images[s], images[t]) == images[S.table[s][t]] for s in range(S.n) for t in range(S.n))


@props
@given(tables())
def test_cayley_round_trip(data):
    S, _ = data
    assert parse_cayley(emit_cayley(S)) == S


@props
@given(families())
def test_generator_round_trip(F):
    assert parse_generators(emit_generators(F.m, F.elems)) == F


@props
@given(tables())
def test_filter_enumeration_methods_agree(data):
    S, _ = data
    if S.n <= 14:
        assert enumerate_filters(S) == enumerate_filters(S, method="powerset")
