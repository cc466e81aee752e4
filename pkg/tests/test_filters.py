import pytest

from noble.errors import NotClosedInverseSubsemigroup, SizeCapExceeded, ZeroHasNoPrincipalFilter
from noble.filters import (
    conjugates,
    enumerate_closed_inverse,
    enumerate_filters,
    filter_closure,
    is_closed_inverse_subsemigroup,
    is_filter,
    lub,
    magnitude_classes,
    principal_filter,
    same_magnitude,
    up_closure,
)
from noble.partial import abstract_table_of, symmetric_inverse_semigroup


def ids(fs):
    return [F.ids() for F in fs]


def test_up_closure(I2):
    assert up_closure(I2, [3]).ids() == (3, 6)
    assert up_closure(I2, [5]).ids() == (5,)
    assert len(up_closure(I2, [0])) == 7


def test_principal_filters(I2, S3):
    assert principal_filter(I2, 1).ids() == (1, 5)
    for s in range(S3.n):
        assert principal_filter(S3, s).ids() == (s,)
    with pytest.raises(ZeroHasNoPrincipalFilter):
        principal_filter(I2, 0)


def test_is_filter_examples(C2, E3, I2):
    assert is_filter(C2, [1])
    assert is_filter(E3, [1, 2])
    assert is_filter(I2, [5])
    assert not is_filter(I2, [1, 2])
    assert not is_filter(I2, range(7))
    assert not is_filter(I2, [])


def test_enumeration_examples(C2, E3, I2):
    I1, _ = abstract_table_of(symmetric_inverse_semigroup(1))
    assert ids(enumerate_filters(C2)) == [(0,), (1,)]
    assert ids(enumerate_filters(E3)) == [(2,), (1, 2)]
    assert ids(enumerate_filters(I1)) == [(1,)]
    assert len(enumerate_filters(I2)) == 7


def test_enumeration_methods_agree(corpus):
    for S in corpus:
        if S.n <= 10:
            assert enumerate_filters(S) == enumerate_filters(S, method="powerset"), S.name


def test_enumeration_cap(I3):
    with pytest.raises(SizeCapExceeded):
        enumerate_filters(I3)
    # filters through idempotents stay within reach
    assert len(enumerate_closed_inverse(I3)) == 15


def test_closed_inverse_enumeration_matches(corpus):
    for S in corpus:
        if S.n <= 24:
            full = [F for F in enumerate_filters(S) if is_closed_inverse_subsemigroup(S, F)]
            assert full == enumerate_closed_inverse(S), S.name


def test_filter_closure(I2, E3):
    assert filter_closure(I2, [1]).ids() == (1, 5)
    assert filter_closure(I2, [1, 2]) is None
    assert filter_closure(E3, [1]).ids() == (1, 2)


def test_same_magnitude_examples(I2):
    for F in enumerate_filters(I2):
        assert same_magnitude(I2, F, F, check=True) is not None
    assert same_magnitude(I2, principal_filter(I2, 1), principal_filter(I2, 2), check=True) is not None
    assert same_magnitude(I2, principal_filter(I2, 5), principal_filter(I2, 1)) is None


def test_magnitude_classes_I2(I2):
    classes = magnitude_classes(I2, enumerate_filters(I2))
    assert sorted(len(c) for c in classes) == [1, 2, 4]


def test_closed_inverse_examples(I2, C2):
    assert is_closed_inverse_subsemigroup(I2, [1, 5], check=True)
    assert not is_closed_inverse_subsemigroup(I2, [3, 6], check=True)
    assert not is_closed_inverse_subsemigroup(C2, [1], check=True)


def test_conjugates(I2, E3, S3):
    assert ids(conjugates(I2, [1, 5])) == [(1, 5), (2, 5)]
    assert ids(conjugates(E3, [1, 2])) == [(1, 2)]
    with pytest.raises(NotClosedInverseSubsemigroup):
        conjugates(I2, [3, 6])
    involution = next(s for s in range(6) if s != S3.identity and S3.table[s][s] == S3.identity)
    H = [S3.identity, involution]
    assert len(conjugates(S3, H)) == 3


def test_lub(I2, S3):
    assert lub(I2, [1, 2]) == 5
    assert lub(I2, [3, 4]) == 6
    assert lub(I2, [1, 6]) is None
    assert lub(I2, []) == 0
    assert lub(S3, []) is None


def test_magnitude_modes_agree(corpus):
    for S in corpus:
        if S.n <= 24:
            fs = enumerate_filters(S)
            plain = [[F.mask for F in c] for c in magnitude_classes(S, fs)]
            adjoined = [[F.mask for F in c] for c in magnitude_classes(S, fs, s1=True)]
            assert plain == adjoined, S.name
