import itertools

import pytest
from hypothesis import given, strategies as st

from qschub.symgroup import (
    Permutation,
    all_permutations,
    from_word,
    identity,
    longest,
    multiply,
    parse_permutation,
    reduced_word,
    right_transposition,
    transposition,
    transposition_length,
)


def inversions(images):
    return sum(1 for a, b in itertools.combinations(range(len(images)), 2) if images[a] > images[b])


P = lambda *xs: Permutation(xs)


@pytest.mark.parametrize("w, expected", [(P(1, 2, 3), 0), (P(3, 2, 1), 3), (P(2, 4, 1, 3), 3)])
def test_length(w, expected):
    assert w.length == expected == inversions(w.images)


def test_reduced_word_examples():
    assert reduced_word(identity(3)) == ()
    assert reduced_word(P(1, 3, 2)) == (2,)
    word = reduced_word(P(3, 2, 1))
    assert word in ((1, 2, 1), (2, 1, 2))
    assert from_word(3, word) == P(3, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_reduced_words_exhaustive(n):
    for w in all_permutations(n):
        word = reduced_word(w)
        assert len(word) == w.length == inversions(w.images)
        assert from_word(n, word) == w
        assert reduced_word(w) == word


def test_multiply():
    w = P(2, 4, 1, 3)
    assert multiply(identity(4), w) == w
    assert P(2, 1, 3) * P(1, 3, 2) == P(2, 3, 1)
    assert longest(4) * longest(4) == identity(4)
    with pytest.raises(ValueError):
        multiply(P(1, 2), P(1, 2, 3))


def test_s1s2_is_231():
    assert parse_permutation("s1*s2", 3) == P(2, 3, 1)
    assert parse_permutation("s2*s1", 3) == P(3, 1, 2)


def test_right_transposition():
    assert right_transposition(identity(3), 1, 2) == (P(2, 1, 3), 1)
    assert right_transposition(P(2, 1, 3), 1, 2) == (identity(3), -1)
    assert right_transposition(P(2, 1, 3), 1, 3) == (P(3, 1, 2), 1)
    with pytest.raises(ValueError):
        right_transposition(identity(3), 2, 4)
    with pytest.raises(ValueError):
        right_transposition(identity(3), 2, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_length_delta_is_odd_and_correct(n):
    for w in all_permutations(n):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            v, delta = right_transposition(w, i, j)
            assert delta % 2 == 1
            assert inversions(v.images) - inversions(w.images) == delta
            assert v == w * transposition(n, i, j)


def test_transposition_length():
    assert transposition_length(1, 2) == 1
    assert transposition_length(1, 3) == 3
    assert transposition_length(2, 5) == 5
    for n in range(2, 7):
        for i, j in itertools.combinations(range(1, n + 1), 2):
            assert transposition_length(i, j) == inversions(transposition(n, i, j).images)
    with pytest.raises(ValueError):
        transposition_length(3, 3)


def test_all_permutations():
    assert list(all_permutations(1)) == [identity(1)]
    assert len(list(all_permutations(3))) == 6
    perms = list(all_permutations(4))
    assert len(perms) == len(set(perms)) == 24
    assert perms == sorted(perms)


@pytest.mark.parametrize("n", range(1, 7))
def test_longest(n):
    w0 = longest(n)
    assert w0.length == n * (n - 1) // 2
    assert all(w0(i) == n + 1 - i for i in range(1, n + 1))


def test_parse_formats():
    assert parse_permutation("2 3 1") == P(2, 3, 1)
    assert parse_permutation("[2, 3, 1]") == P(2, 3, 1)
    assert parse_permutation("2,3,1", 3) == P(2, 3, 1)
    assert parse_permutation("id", 4) == identity(4)
    assert str(P(2, 3, 1)) == "2 3 1"
    with pytest.raises(ValueError):
        parse_permutation("1 1 2")
    with pytest.raises(ValueError):
        parse_permutation("2 1", 3)
    with pytest.raises(ValueError):
        parse_permutation("s3", 3)


perms5 = st.permutations(range(1, 6)).map(lambda p: Permutation(tuple(p)))


@given(perms5, perms5, perms5)
def test_group_axioms(u, v, w):
    assert (u * v) * w == u * (v * w)
    assert u * u.inverse() == identity(5) == u.inverse() * u
    assert (u * v).inverse() == v.inverse() * u.inverse()
