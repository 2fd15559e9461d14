import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieslice.root_combinatorics import (
    CombinatoricsError,
    LeviOrbitPair,
    LeviSubset,
    Partition,
    compositions_of,
    dominance_leq,
    induced_orbit_dimension,
    ls_induce,
    orbit_dimension,
    partitions_of,
    richardson,
    weyl_orbit,
)


def test_dominance_examples():
    assert dominance_leq(Partition((2, 2)), Partition((3, 1)))
    assert not dominance_leq(Partition((3, 1)), Partition((2, 2)))
    assert dominance_leq(Partition((2, 1, 1)), Partition((2, 2)))
    with pytest.raises(CombinatoricsError):
        dominance_leq(Partition((2,)), Partition((3,)))


def test_dominance_is_partial_order():
    for n in range(1, 9):
        parts = partitions_of(n)
        for a in parts:
            assert dominance_leq(a, a)
        for a, b in itertools.permutations(parts, 2):
            if dominance_leq(a, b) and dominance_leq(b, a):
                assert a == b
        for a, b, c in itertools.product(parts, repeat=3):
            if dominance_leq(a, b) and dominance_leq(b, c):
                assert dominance_leq(a, c)


def test_orbit_dimension_examples():
    for m in range(1, 7):
        assert orbit_dimension(Partition((m,)), m) == m * m - m
        assert orbit_dimension(Partition((1,) * m), m) == 0
    assert orbit_dimension(Partition((2, 2)), 4) == 8


def test_ls_induce_examples():
    assert ls_induce(LeviOrbitPair((3,), (Partition((2, 1)),))) == Partition((2, 1))
    pair = LeviOrbitPair((2, 1), (Partition((1, 1)), Partition((1,))))
    assert ls_induce(pair) == Partition((2, 1))
    assert induced_orbit_dimension(pair) == 4 == orbit_dimension(Partition((2, 1)), 3)
    borel = LeviOrbitPair((1, 1, 1), (Partition((1,)),) * 3)
    assert ls_induce(borel) == Partition((3,))


def test_richardson_transpose_identity():
    for n in range(1, 9):
        for blocks in compositions_of(n):
            expected = Partition(tuple(sorted(blocks, reverse=True))).transpose()
            assert richardson(blocks) == expected


def test_richardson_fixtures():
    assert richardson((4,)) == Partition((1, 1, 1, 1))
    assert richardson((1, 1, 1)) == Partition((3,))
    assert richardson((2, 2)) == Partition((2, 2))


def test_dimension_identity_exhaustive():
    for n in range(1, 7):
        for blocks in compositions_of(n):
            for orbits in itertools.product(*(partitions_of(b) for b in blocks)):
                pair = LeviOrbitPair(blocks, orbits)
                ind = ls_induce(pair)
                assert orbit_dimension(ind, n) == induced_orbit_dimension(pair)
                assert dominance_leq(richardson(blocks), ind)


def test_weyl_orbit():
    lev2 = LeviSubset(2, (2,))
    assert weyl_orbit((Q(1), Q(2)), lev2) == {(Q(1), Q(2)), (Q(2), Q(1))}
    lev3 = LeviSubset(3, (3,))
    assert len(weyl_orbit((Q(1), Q(1), Q(2)), lev3)) == 3
    trivial = LeviSubset(3, (1, 1, 1))
    h = (Q(5), Q(1), Q(3))
    assert weyl_orbit(h, trivial) == {h}


def test_transpose_involution():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert lam.transpose().transpose() == lam


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=4))
def test_induction_from_sorted_blocks_order_independent(blocks):
    orbits = tuple(Partition((b,)) for b in blocks)
    value = ls_induce(LeviOrbitPair(tuple(blocks), orbits))
    perm = tuple(reversed(blocks))
    value2 = ls_induce(LeviOrbitPair(perm, tuple(Partition((b,)) for b in perm)))
    assert value == value2


def test_nilradical_dimension():
    assert LeviSubset(3, (2, 1)).nilradical_dimension() == 2
    assert LeviSubset(4, (1, 1, 1, 1)).nilradical_dimension() == 6
    assert LeviSubset(4, (4,)).nilradical_dimension() == 0
