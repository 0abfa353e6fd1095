"""Ribbon machinery and the double-checked fundamental expansion."""

import pytest

from qpow.combinat import (
    Composition, compositions, interval, runs_C, runs_I, refines,
)
from qpow.formal import FormalSum
from qpow import mn, qsym

C = Composition


def test_ribbon_validity():
    r = mn.Ribbon([(1, 1), (1, 2), (2, 2)])
    assert r.bottom_right() == (2, 2)
    with pytest.raises(ValueError):
        mn.Ribbon([(1, 1), (1, 2), (2, 1), (2, 2)])  # 2x2 block
    assert mn.Ribbon([(3, 5), (3, 6)]).normalize() == mn.Ribbon([(1, 1), (1, 2)])


def test_ribbon_of():
    # rows overlap at last/first column: (2,3) gives a 5-cell ribbon
    r = mn.ribbon_of(C((2, 3)))
    assert r == mn.Ribbon([(1, 1), (1, 2), (2, 2), (2, 3), (2, 4)])
    assert mn.ribbon_of(C()) == mn.Ribbon()


def test_count_sdr():
    assert mn.count_sdr(mn.Ribbon()) == 1
    assert mn.count_sdr(mn.Ribbon([(1, 1)])) == 1
    # a single row or column admits exactly one standard filling
    assert mn.count_sdr(mn.ribbon_of(C((4,)))) == 1
    assert mn.count_sdr(mn.ribbon_of(C((1, 1, 1)))) == 1
    # the hook (1,2): 2 cells after the corner, values split two ways
    assert mn.count_sdr(mn.ribbon_of(C((1, 2)))) == 2


def test_build_D_example():
    tup, height = mn.build_D(C((1, 1, 3)), C((1, 2, 1, 1)))
    assert height == 1
    assert tup.sdr_count() == 3
    with pytest.raises(ValueError):
        mn.build_D(C((2,)), C((3,)))  # weights differ


def test_ribbon_expansion_example():
    want = FormalSum(qsym.F, {
        C((1, 1, 2, 1)): -3, C((1, 1, 3)): -3,
        C((1, 3, 1)): 3, C((1, 4)): 3,
    })
    assert mn.ribbon_expansion(C((1, 2, 1, 1))) == want
    assert mn.composite_expansion(C((1, 2, 1, 1))) == want
    assert mn.P_to_F(C((1, 2, 1, 1))) == want


def test_paths_agree_exhaustively():
    for n in range(7):
        for alpha in compositions(n):
            expansion = mn.P_to_F(alpha)
            allowed = interval(runs_I(alpha), runs_C(alpha))
            assert set(expansion.terms) <= allowed
            if n:
                assert expansion[runs_C(alpha)] > 0


def test_small_expansions():
    assert mn.P_to_F(C((3,))) == FormalSum(qsym.F, {
        C((3,)): 1, C((1, 2)): -1, C((2, 1)): -1, C((1, 1, 1)): 1,
    })
    assert mn.P_to_F(C((1, 1, 1))) == FormalSum(qsym.F, {
        C((3,)): 1, C((1, 2)): 2, C((2, 1)): 2, C((1, 1, 1)): 1,
    })
