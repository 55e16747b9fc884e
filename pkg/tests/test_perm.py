import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prophopf.perm import Permutation, transpose_perm, transposition


def transpose_by_enumeration(m, n):
    # position of copy (l, k) in l-major order, sent to its position in k-major order
    l_major = [(l, k) for l in range(1, m + 1) for k in range(1, n + 1)]
    k_major = [(l, k) for k in range(1, n + 1) for l in range(1, m + 1)]
    return [k_major.index(pair) + 1 for pair in l_major]


def test_transpose_examples():
    for n in range(6):
        assert transpose_perm(1, n) == Permutation.identity(n)
    assert list(transpose_perm(2, 2).map) == [1, 3, 2, 4]
    assert list(transpose_perm(2, 3).map) == [1, 3, 5, 2, 4, 6]


@pytest.mark.parametrize("m,n", list(itertools.product(range(5), repeat=2)))
def test_transpose_matches_enumeration(m, n):
    assert list(transpose_perm(m, n).map) == transpose_by_enumeration(m, n)


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation.of([1, 1])


perms = st.integers(0, 7).flatmap(lambda s: st.permutations(list(range(1, s + 1)))).map(Permutation.of)


@given(perms)
def test_bubble_decomposition_recovers_permutation(p):
    acc = Permutation.identity(p.size)
    for a in p.adjacent_transpositions():
        acc = transposition(p.size, a) @ acc
    assert acc == p


@given(perms)
def test_inverse(p):
    assert p @ p.inverse() == Permutation.identity(p.size)
    assert p.inverse() @ p == Permutation.identity(p.size)


def test_composition_convention():
    s, t = Permutation.of([2, 3, 1]), Permutation.of([2, 1, 3])
    assert (s @ t)(1) == s(t(1)) == 3
