"""Commuting bases: conversions, products, coproducts."""

from fractions import Fraction

import pytest

from qpow.combinat import (
    Composition, Partition, NATURAL_DESCENDING, NATURAL_ASCENDING,
    part_order_from_ranking, compositions, partitions, z_factor,
    sort_composition, refines,
)
from qpow.formal import FormalSum, TensorSum, BasisMismatch
from qpow import qsym, oracle

C = Composition


def test_p_to_m():
    got = qsym.p_to_m(Partition((2, 2, 1)))
    want = FormalSum(qsym.SYM_M, {
        Partition((2, 2, 1)): 2, Partition((3, 2)): 2,
        Partition((4, 1)): 1, Partition((5,)): 1,
    })
    assert got == want
    assert qsym.p_to_m(Partition(())) == FormalSum(qsym.SYM_M, {Partition(()): 1})


def test_m_to_M_and_p_to_P():
    assert qsym.m_to_M(Partition((2, 1))) == FormalSum(
        qsym.M, {C((2, 1)): 1, C((1, 2)): 1})
    got = qsym.p_to_P(Partition((2, 1)), NATURAL_DESCENDING)
    assert got == FormalSum(qsym.P(NATURAL_DESCENDING),
                            {C((2, 1)): 1, C((1, 2)): 1})
    # the refinement identity in the M basis, both orders
    for order in (NATURAL_DESCENDING, NATURAL_ASCENDING):
        for lam in partitions(5):
            total = FormalSum(qsym.M)
            for alpha in compositions(5):
                if sort_composition(alpha) == lam:
                    total = total + qsym.P_to_M(alpha, order)
            m_side = FormalSum(qsym.M)
            for mu, c in qsym.p_to_m(lam).items():
                m_side = m_side + c * qsym.m_to_M(mu)
            assert total == m_side


def test_F_M_triangle():
    assert qsym.F_to_M(C((2, 1))) == FormalSum(
        qsym.M, {C((2, 1)): 1, C((1, 1, 1)): 1})
    assert qsym.M_to_F(C((2, 1))) == FormalSum(
        qsym.F, {C((2, 1)): 1, C((1, 1, 1)): -1})
    # F_alpha is the sum of M over refinements of alpha
    for n in range(6):
        for alpha in compositions(n):
            f = qsym.F_to_M(alpha)
            assert all(refines(beta, alpha) and c == 1 for beta, c in f.items())


def test_P_to_M_examples():
    assert qsym.P_to_M(C((2, 1, 2)), NATURAL_DESCENDING) == FormalSum(
        qsym.M, {C((2, 1, 2)): 2, C((3, 2)): 2})
    assert qsym.P_to_M(C(()), NATURAL_DESCENDING) == FormalSum(
        qsym.M, {C(()): 1})
    # leading coefficient: P_alpha = z-ish multiple of M_alpha plus coarser terms
    for n in range(6):
        for alpha in compositions(n):
            x = qsym.P_to_M(alpha, NATURAL_DESCENDING)
            assert x[alpha] > 0
            assert all(refines(alpha, beta) for beta, _ in x.items())


def test_Ptilde_scaling():
    alpha = C((2, 1, 2))
    assert qsym.Ptilde_to_M(alpha, NATURAL_DESCENDING) == \
        Fraction(1, z_factor(alpha)) * qsym.P_to_M(alpha, NATURAL_DESCENDING)


def test_M_to_P_inverse():
    for order in (NATURAL_DESCENDING, NATURAL_ASCENDING):
        for n in range(6):
            for alpha in compositions(n):
                x = qsym.monomial(qsym.M, alpha)
                back = qsym.from_M(x, qsym.P(order)).map_linear(
                    lambda b: qsym.P_to_M(b, order), basis=qsym.M)
                assert back == x


def test_custom_order_registry():
    order = part_order_from_ranking([1, 3, 2], name="odd-first")
    qsym.register_order(order)
    x = qsym.monomial(qsym.P(order), C((2, 1, 2)))
    y = qsym.to_M(x)
    assert y.basis == qsym.M
    # under an order with 1 above 2 the merge (2,1,2) -> (2,3) is allowed
    assert y == FormalSum(qsym.M, {C((2, 1, 2)): 2, C((2, 3)): 2})
    assert qsym.convert(y, qsym.P(order)) == x


def test_convert_between_P_orders():
    x = qsym.monomial(qsym.P(NATURAL_DESCENDING), C((2, 1)))
    y = qsym.convert(x, qsym.P(NATURAL_ASCENDING))
    assert y.basis == qsym.P(NATURAL_ASCENDING)
    assert qsym.to_M(y) == qsym.to_M(x)


def test_basis_mismatch():
    x = qsym.monomial(qsym.M, C((1,)))
    y = qsym.monomial(qsym.F, C((1,)))
    with pytest.raises(BasisMismatch):
        x + y


def test_product_M_quasishuffle():
    x = qsym.monomial(qsym.M, C((1,)))
    got = qsym.product(x, x)
    assert got == FormalSum(qsym.M, {C((1, 1)): 2, C((2,)): 1})


def test_product_Ptilde_shuffle():
    x = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), C((2,)))
    y = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), C((1, 1)))
    got = qsym.product(x, y)
    assert got == FormalSum(qsym.Ptilde(NATURAL_DESCENDING),
                            {C((2, 1, 1)): 1, C((1, 2, 1)): 1, C((1, 1, 2)): 1})


def test_product_matches_oracle_F():
    for a in compositions(2):
        for b in compositions(3):
            x = qsym.monomial(qsym.F, a)
            y = qsym.monomial(qsym.F, b)
            got = qsym.to_M(qsym.product(x, y))
            fa = oracle.expand_F(a, 5)
            fb = oracle.expand_F(b, 5)
            assert got == oracle.identify_qsym(oracle.multiply(fa, fb))


def test_coproduct_M():
    got = qsym.coproduct(qsym.monomial(qsym.M, C((2, 1))))
    want = TensorSum(qsym.M, {
        (C(()), C((2, 1))): 1, (C((2,)), C((1,))): 1, (C((2, 1)), C(())): 1,
    })
    assert got == want


def test_coproduct_counit():
    # (counit x id) after the coproduct is the identity
    for n in range(5):
        for alpha in compositions(n):
            x = qsym.monomial(qsym.M, alpha)
            ts = qsym.coproduct(x)
            left = FormalSum(qsym.M)
            for (a, b), c in ts.items():
                if not a:
                    left = left + FormalSum(qsym.M, {b: c})
            assert left == x
            assert qsym.counit(x) == (1 if not alpha else 0)


def test_coproduct_P_grouplike_flavor():
    # the P coproduct only splits into rearranged-part pairs
    ts = qsym.coproduct(qsym.monomial(qsym.P(NATURAL_DESCENDING), C((2, 1))))
    for (a, b), c in ts.items():
        assert sort_composition(a + b) == Partition((2, 1))
