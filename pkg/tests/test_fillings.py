"""Filling families, readings, row permutations, and the column operations."""

import pytest

from qpow.combinat import (
    Composition, Partition, SetComposition,
    NATURAL_DESCENDING, NATURAL_ASCENDING, DTILDE, compositions,
)
from qpow.fillings import (
    IntFilling, SetFilling, row_reading, column_reading,
    enumerate_A, enumerate_SD, enumerate_LDD, enumerate_row_perms,
    deconcatenate_filling, quasishuffle_fillings, render_filling,
)

C = Composition
S = SetComposition


def test_filling_invariants():
    f = IntFilling([(2, 1), (1, 2), (2, 3)])
    assert f.num_columns == 3
    with pytest.raises(ValueError):
        IntFilling([(2, 2)])  # column 1 must be occupied
    with pytest.raises(ValueError):
        SetFilling([({1, 2}, 1), ({2}, 2)])  # blocks must be disjoint


def test_readings():
    f = IntFilling([(2, 1), (1, 1), (2, 2)])
    assert row_reading(f) == C((2, 1, 2))
    assert column_reading(f) == C((3, 2))
    g = SetFilling([({3, 4}, 1), ({1, 5}, 1), ({2}, 2)])
    assert row_reading(g) == S([[3, 4], [1, 5], [2]])
    assert column_reading(g) == S([[1, 3, 4, 5], [2]])


def test_enumerate_A():
    assert len(enumerate_A(Partition((2, 2, 1)))) == 6
    assert enumerate_A(Partition(())) == {IntFilling()}
    for f in enumerate_A(Partition((2, 2, 1))):
        assert row_reading(f) == C((2, 2, 1))
        col = column_reading(f)
        assert all(col[i] >= col[i + 1] for i in range(len(col) - 1))


def test_enumerate_SD():
    sd = enumerate_SD(C((2, 1, 2)), NATURAL_DESCENDING)
    assert {column_reading(f) for f in sd} == {C((2, 1, 2)), C((3, 2))}
    # a weakly decreasing composition of length l has 2^(l-1) fillings:
    # every step may stack or move on
    assert len(enumerate_SD(C((3, 2, 2)), NATURAL_DESCENDING)) == 4
    assert len(enumerate_SD(C((1, 2)), NATURAL_DESCENDING)) == 1
    assert len(enumerate_SD(C((1, 2)), NATURAL_ASCENDING)) == 2
    for alpha in compositions(5):
        d = sum(1 for i in range(len(alpha) - 1)
                if NATURAL_DESCENDING.ge(alpha[i], alpha[i + 1]))
        assert len(enumerate_SD(alpha, NATURAL_DESCENDING)) == 2 ** d


def test_enumerate_LDD():
    assert len(enumerate_LDD(S([[3, 4], [1, 5], [2]]), DTILDE)) == 2
    assert len(enumerate_LDD(S([[1, 5], [3, 4], [2]]), DTILDE)) == 4
    for f in enumerate_LDD(S([[1, 5], [3, 4], [2]]), DTILDE):
        assert row_reading(f) == S([[1, 5], [3, 4], [2]])


def test_enumerate_row_perms():
    # all values distinct: a single trivial tuple
    assert len(enumerate_row_perms(IntFilling([(2, 1), (1, 2)]))) == 1
    # two equal values in one column: swapping them changes nothing
    assert len(enumerate_row_perms(IntFilling([(1, 1), (1, 1)]))) == 1
    # two equal values in distinct columns: two assignments
    f = IntFilling([(2, 1), (1, 2), (2, 3)])
    perms = enumerate_row_perms(f)
    assert len(perms) == 2
    assert {p[2] for p in perms} == {(1, 3), (3, 1)}
    # four equal values over columns (1,1,2,2): multinomial 4!/(2!2!) = 6
    g = IntFilling([(1, 1), (1, 1), (1, 2), (1, 2)])
    assert len(enumerate_row_perms(g)) == 6


def test_deconcatenate():
    f = IntFilling([(2, 1), (1, 1), (2, 2)])
    cuts = deconcatenate_filling(f)
    assert len(cuts) == f.num_columns + 1
    assert cuts[0] == (IntFilling(), f)
    assert cuts[-1] == (f, IntFilling())
    left, right = cuts[1]
    assert column_reading(left) == C((3,))
    assert column_reading(right) == C((2,))


def test_quasishuffle_fillings():
    f = IntFilling([(2, 1)])
    g = IntFilling([(1, 1)])
    out = quasishuffle_fillings(f, g)
    # interleave two ways or merge into one column (2 above 1)
    assert sum(out.values()) == 3
    merged = IntFilling([(2, 1), (1, 1)])
    assert out[merged] == 1
    # merged columns sort descending, first factor's rows first on ties
    out2 = quasishuffle_fillings(IntFilling([(1, 1), (3, 2)]),
                                 IntFilling([(2, 1)]))
    for h in out2:
        for col in range(1, h.num_columns + 1):
            vals = [v for v, c in h if c == col]
            assert vals == sorted(vals, reverse=True)


def test_render():
    text = render_filling(IntFilling([(2, 1), (1, 2), (2, 3)]))
    lines = text.splitlines()
    assert lines[0].split() == ["2", ".", "."]
    assert lines[-1].split() == ["2", "1", "2"]
    settext = render_filling(SetFilling([({3, 4}, 1), ({1, 5}, 1), ({2}, 2)]))
    assert settext.splitlines()[-1].split() == ["1345", "2"]
