"""Composition combinatorics against independent enumeration oracles."""

from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import pytest

from qshuffle.compositions import (
    EMPTY,
    Composition,
    coarsenings,
    compositions_of,
    compositions_up_to,
    deconcatenations,
    extend_over_refinement,
    nonempty_splits,
    partitions_of,
    quasi_shuffle,
    rearrangements,
    refinement_split,
    refines,
    shuffle,
    shuffle_multiplicity_total,
    stats,
)
from qshuffle.errors import NotARefinement

C = Composition


def compositions_by_cuts(n):
    # independent route: subsets of cut positions 1..n-1 (stars and bars)
    if n == 0:
        return {C()}
    out = set()
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            out.add(C(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1)))
    return out


def test_enumeration_matches_cut_subsets():
    for n in range(9):
        listed = compositions_of(n)
        assert set(listed) == compositions_by_cuts(n)
        assert len(listed) == len(set(listed))


def test_enumeration_counts_and_order():
    assert compositions_of(0) == (EMPTY,)
    assert set(compositions_of(3)) == {C((3,)), C((2, 1)), C((1, 2)), C((1, 1, 1))}
    assert len(compositions_of(3)) == 4
    assert len(compositions_of(8)) == 128
    # graded lexicographic: already sorted within the degree
    for n in range(9):
        listed = compositions_of(n)
        assert list(listed) == sorted(listed, key=lambda c: tuple(c))
    up = compositions_up_to(4)
    assert up == sorted(up, key=lambda c: (c.size, tuple(c)))


def test_composition_validation_and_text():
    with pytest.raises(ValueError):
        C((2, 0, 1))
    with pytest.raises(ValueError):
        C((-1,))
    assert C.from_text("2,1,3") == C((2, 1, 3))
    assert C.from_text("-") == EMPTY
    assert C((2, 1, 3)).to_text() == "2,1,3"
    assert EMPTY.to_text() == "-"
    with pytest.raises(ValueError):
        C.from_text("2,x")
    with pytest.raises(ValueError):
        C.from_text("2,-1")
    for comp in compositions_up_to(5):
        assert C.from_text(comp.to_text()) == comp


def test_stats_examples():
    st = stats(C((2, 1, 2)))
    assert (st.aut_count, st.part_product, st.z_value) == (2, 4, 8)
    assert (st.last_part, st.prefix_product) == (2, 30)
    assert st.sorted_partition == C((2, 2, 1))
    empty = stats(EMPTY)
    assert (empty.last_part, empty.part_product, empty.aut_count) == (0, 1, 1)
    assert (empty.z_value, empty.prefix_product) == (1, 1)
    st2 = stats(C((1, 2, 1)))
    assert (st2.prefix_product, st2.aut_count) == (12, 2)


def test_stats_properties():
    for comp in compositions_up_to(8):
        st = stats(comp)
        assert st.z_value == st.part_product * st.aut_count
        assert st.even_count + st.odd_count == st.length
        assert st.sorted_partition.sorted_partition() == st.sorted_partition
        assert sorted(st.sorted_partition) == sorted(comp)


def test_rearrangement_orbit_size():
    for comp in compositions_up_to(8):
        st = stats(comp)
        assert len(rearrangements(comp)) == factorial(st.length) // st.aut_count


def test_coarsenings_example():
    got = coarsenings(C((1, 1, 1)))
    assert set(got) == {C((1, 1, 1)), C((1, 2)), C((2, 1)), C((3,))}
    assert coarsenings(EMPTY) == [EMPTY]


def test_coarsenings_properties():
    for comp in compositions_up_to(8):
        got = coarsenings(comp)
        expected = 1 if not comp else 2 ** (comp.length - 1)
        assert len(got) == expected
        assert comp in got
        if comp:
            assert C((comp.size,)) in got
        # all listed really are coarser, sizes preserved
        for beta in got:
            assert beta.size == comp.size
            assert refines(comp, beta)


def test_refinement_split_examples():
    assert refinement_split(C((1, 1, 2, 1)), C((2, 3))) == (C((1, 1)), C((2, 1)))
    assert refinement_split(C((3,)), C((3,))) == (C((3,)),)
    assert refinement_split(EMPTY, EMPTY) == ()
    with pytest.raises(NotARefinement):
        refinement_split(C((2, 1)), C((1, 2)))
    with pytest.raises(NotARefinement):
        refinement_split(C((2,)), C((3,)))


def test_refinement_split_roundtrip():
    for comp in compositions_up_to(7):
        for beta in coarsenings(comp):
            blocks = refinement_split(comp, beta)
            assert len(blocks) == beta.length
            rebuilt = EMPTY
            for block, part in zip(blocks, beta):
                assert block.size == part
                rebuilt = rebuilt + block
            assert rebuilt == comp


def test_shuffle_examples():
    assert shuffle(C((1, 2)), C((2,))) == {C((1, 2, 2)): 2, C((2, 1, 2)): 1}
    assert shuffle(C((1,)), C((1,))) == {C((1, 1)): 2}
    assert shuffle(EMPTY, C((2, 1))) == {C((2, 1)): 1}
    assert shuffle(EMPTY, EMPTY) == {EMPTY: 1}


def test_shuffle_properties():
    pairs = [
        (a, b)
        for total in range(2, 9)
        for i in range(1, total)
        for a in compositions_of(i)
        for b in compositions_of(total - i)
    ]
    for a, b in pairs:
        left = shuffle(a, b)
        assert left == shuffle(b, a)
        assert sum(left.values()) == shuffle_multiplicity_total(a, b) == comb(len(a) + len(b), len(a))
        for word in left:
            assert word.size == a.size + b.size
            assert len(word) == len(a) + len(b)


def test_quasi_shuffle_examples():
    assert quasi_shuffle(C((1,)), C((1,))) == {C((1, 1)): 2, C((2,)): 1}
    assert quasi_shuffle(C((2,)), C((1,))) == {C((2, 1)): 1, C((1, 2)): 1, C((3,)): 1}
    assert quasi_shuffle(EMPTY, C((3,))) == {C((3,)): 1}


def test_quasi_shuffle_contains_shuffle():
    # merging terms only add; the pure interleavings appear with the same multiplicity
    for total in range(2, 7):
        for i in range(1, total):
            for a in compositions_of(i):
                for b in compositions_of(total - i):
                    qs = quasi_shuffle(a, b)
                    for word, mult in shuffle(a, b).items():
                        assert qs[word] == mult


def test_extend_over_refinement_examples():
    half_factorial = lambda comp: Fraction(1, factorial(len(comp)))
    assert extend_over_refinement(half_factorial, C((1, 1, 2, 1)), C((2, 3))) == Fraction(1, 4)
    inverse_prefix = lambda comp: Fraction(1, stats(comp).prefix_product)
    assert extend_over_refinement(inverse_prefix, C((2, 1)), C((3,))) == Fraction(1, 6)
    assert extend_over_refinement(half_factorial, EMPTY, EMPTY) == 1


def test_extend_is_multiplicative_under_concatenation():
    fn = lambda comp: Fraction(1, stats(comp).prefix_product)
    for na in range(1, 4):
        for nb in range(1, 4):
            for a in compositions_of(na):
                for b in compositions_of(nb):
                    for ca in coarsenings(a):
                        for cb in coarsenings(b):
                            assert extend_over_refinement(fn, a + b, ca + cb) == extend_over_refinement(
                                fn, a, ca
                            ) * extend_over_refinement(fn, b, cb)


def test_deconcatenations_and_splits():
    assert deconcatenations(C((3, 1))) == [
        (EMPTY, C((3, 1))),
        (C((3,)), C((1,))),
        (C((3, 1)), EMPTY),
    ]
    assert list(nonempty_splits(EMPTY)) == []
    got = sorted(tuple(s) for s in nonempty_splits(C((1, 2))))
    assert got == [(C((1,)), C((2,))), (C((1, 2)),)]
    for comp in compositions_up_to(7):
        if comp:
            assert sum(1 for _ in nonempty_splits(comp)) == 2 ** (comp.length - 1)


def test_partitions_of():
    assert partitions_of(4) == (C((1, 1, 1, 1)), C((2, 1, 1)), C((2, 2)), C((3, 1)), C((4,)))
    # partition counts 1, 1, 2, 3, 5, 7, 11, 15, 22
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
