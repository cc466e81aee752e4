import pytest

from noble.algebra import relabel
from noble.engine import decide_nobility
from noble.errors import NotAGroup, NotASubgroup, SizeCapExceeded
from noble.oracle import are_isomorphic, brute_force_noble, generate_corpus, group_catalog, group_core
from noble.oracle.corpus import chain, semilattices
from noble.oracle.groups import GROUP_COUNTS, groups_of_order, subgroups
from noble.oracle.search import transitive_actions
from noble.partial import abstract_table_of, symmetric_inverse_semigroup


def test_brute_force_examples(E3, B2, C2):
    assert brute_force_noble(E3, 4) is None
    w = brute_force_noble(B2, 2)
    assert w.degree == 2 and w.transitive
    w = brute_force_noble(C2, 2)
    assert w.degree == 2 and {phi.map for phi in w.assignment} == {(0, 1), (1, 0)}


def test_brute_force_witness_is_embedding(corpus):
    from noble.partial import compose

    for S in corpus:
        if S.n > 8:
            continue
        w = brute_force_noble(S, min(S.n, 8))
        if w is None:
            continue
        f = w.assignment
        assert len(set(f)) == S.n and w.transitive
        assert all(compose(f[s], f[t]) == f[S.table[s][t]] for s in range(S.n) for t in range(S.n))


def test_brute_force_caps(I3, E3):
    with pytest.raises(SizeCapExceeded):
        brute_force_noble(I3, 3)
    with pytest.raises(SizeCapExceeded):
        brute_force_noble(E3, 9)


def test_transitive_actions_of_c2(C2):
    degrees = sorted(w.degree for w in transitive_actions(C2, 3))
    assert degrees == [2]


def test_isomorphism_examples(I2, C2, B2):
    T, _ = abstract_table_of(symmetric_inverse_semigroup(2))
    assert are_isomorphic(I2, T) is not None
    assert are_isomorphic(C2, chain(2)) is None
    assert are_isomorphic(B2, chain(5)) is None


def test_isomorphism_respects_relabelling(corpus):
    import random

    rng = random.Random(7)
    for S in corpus[::7]:
        perm = list(range(S.n))
        rng.shuffle(perm)
        T = relabel(S, perm)
        phi = are_isomorphic(S, T)
        assert phi is not None
        assert all(phi[S.table[a][b]] == T.table[phi[a]][phi[b]] for a in range(S.n) for b in range(S.n))
        assert are_isomorphic(T, S) is not None
        assert decide_nobility(S).verdict == decide_nobility(T).verdict


def test_group_counts():
    for n in range(1, 17):
        assert len(groups_of_order(n)) == GROUP_COUNTS[n - 1], n


def test_group_core_examples(S3):
    e = S3.identity
    inv = next(s for s in range(6) if s != e and S3.table[s][s] == e)
    assert group_core(S3, [e, inv]).ids() == (e,)
    A3 = [s for s in range(6) if S3.table[S3.table[s][s]][s] == e]
    assert group_core(S3, A3).ids() == tuple(sorted(A3))
    assert group_core(S3, range(6)).ids() == tuple(range(6))
    with pytest.raises(NotASubgroup):
        group_core(S3, [inv])


def test_group_core_needs_group(I2):
    with pytest.raises(NotAGroup):
        group_core(I2, [5])


def test_subgroup_counts(S3):
    assert len(subgroups(S3)) == 6


def test_semilattice_counts():
    assert [len(semilattices(n)) for n in range(1, 6)] == [1, 1, 2, 5, 15]


def test_corpus_contents(corpus, E3, B2, I2, I3):
    for T in (E3, B2, I2, I3):
        assert any(S.n == T.n and are_isomorphic(S, T) is not None for S in corpus)
    assert sum(len(S.idempotents) == 1 for S in corpus) == len(group_catalog(12))
    assert generate_corpus() == corpus
    with pytest.raises(SizeCapExceeded):
        generate_corpus(7)


def test_corpus_has_no_duplicates(corpus):
    for i, S in enumerate(corpus):
        for T in corpus[i + 1:]:
            if S.n == T.n:
                assert are_isomorphic(S, T) is None, (S.name, T.name)
