"""Polynomial oracle: expansion, identification, and the two-alphabet split."""

from fractions import Fraction

import pytest

from qpow.combinat import (
    Composition, Partition, SetComposition, SetPartition,
    compositions, partitions, set_compositions,
)
from qpow.formal import FormalSum
from qpow import oracle, qsym, ncqsym

C = Composition
S = SetComposition


def test_cpoly_arithmetic():
    a = oracle.CPoly(2, {(1, 0): 1})
    b = oracle.CPoly(2, {(0, 1): 1})
    assert oracle.multiply(a, b) == oracle.CPoly(2, {(1, 1): 1})
    assert a + (-1) * a == oracle.CPoly(2)
    with pytest.raises(ValueError):
        a + oracle.CPoly(3)
    with pytest.raises(ValueError):
        oracle.CPoly(2, {(1,): 1})


def test_ncpoly_arithmetic():
    a = oracle.NCPoly(2, {(1,): 1})
    b = oracle.NCPoly(2, {(2,): 1})
    ab = oracle.multiply(a, b)
    ba = oracle.multiply(b, a)
    assert ab == oracle.NCPoly(2, {(1, 2): 1})
    assert ab != ba  # words do not commute
    with pytest.raises(ValueError):
        oracle.multiply(a, oracle.CPoly(2))


def test_expand_M():
    f = oracle.expand_M(C((2, 1)), 3)
    assert f.terms == {(2, 1, 0): 1, (2, 0, 1): 1, (0, 2, 1): 1}
    assert oracle.expand_M(C(), 2) == oracle.CPoly(2, {(0, 0): 1})


def test_expand_M_nc():
    f = oracle.expand_M_nc(S([[1, 3], [2]]), 2)
    assert f.terms == {(1, 2, 1): 1}
    g = oracle.expand_M_nc(S([[2], [1, 3]]), 3)
    assert (2, 1, 2) in g.terms and (3, 1, 3) in g.terms and (3, 2, 3) in g.terms
    assert len(g.terms) == 3


def test_expand_p_matches_m():
    for n in range(6):
        nvars = max(n, 1)
        for lam in partitions(n):
            direct = oracle.expand_p(lam, nvars)
            via_m = oracle.CPoly(nvars)
            for mu, c in qsym.p_to_m(lam).items():
                for beta, c2 in qsym.m_to_M(mu).items():
                    via_m = via_m + (c * c2) * oracle.expand_M(beta, nvars)
            assert direct == via_m


def test_expand_p_nc_commutes_to_p():
    p = SetPartition([[1, 3], [2]])
    f = oracle.let_variables_commute(oracle.expand_p_nc(p, 3))
    assert f == oracle.expand_p(Partition((2, 1)), 3)


def test_identify_qsym():
    for n in range(6):
        nvars = max(n, 1)
        for alpha in compositions(n):
            f = oracle.expand_M(alpha, nvars)
            assert oracle.identify_qsym(f) == qsym.monomial(qsym.M, alpha)
    with pytest.raises(oracle.IdentifyError):
        oracle.identify_qsym(oracle.CPoly(2, {(1, 0): 1}))  # x1 alone


def test_identify_ncqsym():
    for n in range(5):
        nvars = max(n, 1)
        for phi in set_compositions(n):
            f = oracle.expand_M_nc(phi, nvars)
            assert oracle.identify_ncqsym(f) == \
                ncqsym.monomial_nc(ncqsym.M_NC, phi)
    with pytest.raises(oracle.IdentifyError):
        oracle.identify_ncqsym(oracle.NCPoly(2, {(1,): 1}))


def test_expand_F():
    f = oracle.expand_F(C((1, 1)), 3)
    # F_(1,1) = sum over i < j of x_i x_j with strict inequality
    assert f.terms == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}


def test_coproduct_oracle():
    ts = oracle.coproduct_oracle(C((2, 1)), 3)
    assert ts == qsym.coproduct(qsym.monomial(qsym.M, C((2, 1))))


def test_oracle_multiplication_vs_quasishuffle():
    # M_1 * M_1 = 2 M_(1,1) + M_(2)
    m1 = oracle.expand_M(C((1,)), 3)
    got = oracle.identify_qsym(oracle.multiply(m1, m1))
    assert got == FormalSum(qsym.M, {C((1, 1)): 2, C((2,)): 1})
