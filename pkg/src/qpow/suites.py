"""Named verification suites.

Each suite runs an exhaustive check at desk scale and returns a list of
failure descriptions (empty means pass).  The suites pit the formal-sum
implementations against the truncated-polynomial oracle or against an
independent second evaluation path.
"""

from fractions import Fraction
from itertools import permutations

from .combinat import (
    Composition, Permutation, sort_composition, z_factor,
    compositions, partitions, set_compositions, set_partitions,
    rho, runs_C, runs_I, interval, refines, descent_composition,
    NATURAL_DESCENDING, NATURAL_ASCENDING,
)
from .formal import FormalSum
from . import qsym, ncqsym, mn, oracle

BOTH_ORDERS = (NATURAL_DESCENDING, NATURAL_ASCENDING)


def _expand_sum(x, nvars):
    """Oracle expansion of an M-basis formal sum."""
    total = oracle.CPoly(nvars)
    for alpha, coeff in x.terms.items():
        total = total + coeff * oracle.expand_M(alpha, nvars)
    return total


def suite_refine(max_weight=6):
    """Sum of P over rearrangements of lambda equals the oracle powersum."""
    failures = []
    for n in range(max_weight + 1):
        nvars = max(n, 1)
        for lam in partitions(n):
            target = oracle.identify_qsym(oracle.expand_p(lam, nvars))
            for order in BOTH_ORDERS:
                total = FormalSum(qsym.M)
                for alpha in compositions(n):
                    if sort_composition(alpha) == lam:
                        total = total + qsym.P_to_M(alpha, order)
                if total != target:
                    failures.append("refine: lambda=%s order=%s" % (lam, order.name))
    return failures


def suite_shuffle(max_weight=5):
    """Scaled-P shuffle product equals the oracle polynomial product."""
    failures = []
    for n1 in range(max_weight + 1):
        for n2 in range(max_weight + 1 - n1):
            nvars = max(n1 + n2, 1)
            for alpha in compositions(n1):
                for beta in compositions(n2):
                    for order in BOTH_ORDERS:
                        x = qsym.monomial(qsym.Ptilde(order), alpha)
                        y = qsym.monomial(qsym.Ptilde(order), beta)
                        got = qsym.to_M(qsym.product(x, y))
                        fa = Fraction(1, z_factor(alpha)) * _expand_sum(
                            qsym.P_to_M(alpha, order), nvars)
                        fb = Fraction(1, z_factor(beta)) * _expand_sum(
                            qsym.P_to_M(beta, order), nvars)
                        want = oracle.identify_qsym(oracle.multiply(fa, fb))
                        if got != want:
                            failures.append("shuffle: %s * %s order=%s"
                                            % (alpha, beta, order.name))
    return failures


def _tensor_product(ts1, ts2, factor_product):
    terms = {}
    for (a1, b1), c1 in ts1.terms.items():
        for (a2, b2), c2 in ts2.terms.items():
            left = factor_product(a1, a2)
            right = factor_product(b1, b2)
            for la, ca in left.terms.items():
                for rb, cb in right.terms.items():
                    key = (la, rb)
                    terms[key] = terms.get(key, 0) + c1 * c2 * ca * cb
    return terms


def suite_coproduct(max_weight=4):
    """Deconcatenation coproducts: two-alphabet oracle agreement on M,
    coassociativity, and the bialgebra axiom on scaled-P and NC P."""
    failures = []
    for n in range(max_weight + 1):
        for alpha in compositions(n):
            got = qsym.coproduct(qsym.monomial(qsym.M, alpha))
            want = oracle.coproduct_oracle(alpha, max(n, 1))
            if got != want:
                failures.append("coproduct vs oracle: %s" % (alpha,))

    # coassociativity on deconcatenation, scaled-P generators:
    # apply the coproduct again to the left factor and to the right factor
    for n in range(min(max_weight, 3) + 1):
        for gamma in compositions(n):
            g = tuple(gamma)
            left, right = {}, {}
            for i in range(len(g) + 1):
                a, b = g[:i], g[i:]
                for j in range(len(a) + 1):
                    key = (Composition(a[:j]), Composition(a[j:]), Composition(b))
                    left[key] = left.get(key, 0) + 1
                for j in range(len(b) + 1):
                    key = (Composition(a), Composition(b[:j]), Composition(b[j:]))
                    right[key] = right.get(key, 0) + 1
            if left != right:
                failures.append("coassociativity: %s" % (gamma,))

    # bialgebra axiom on scaled-P pairs
    def ptilde_product(a, b):
        x = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), a)
        y = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), b)
        return qsym.product(x, y)

    for n1 in range(min(max_weight, 4) + 1):
        for n2 in range(min(max_weight, 4) + 1 - n1):
            for alpha in compositions(n1):
                for beta in compositions(n2):
                    x = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), alpha)
                    y = qsym.monomial(qsym.Ptilde(NATURAL_DESCENDING), beta)
                    lhs = qsym.coproduct(qsym.product(x, y)).terms
                    rhs = _tensor_product(qsym.coproduct(x), qsym.coproduct(y),
                                          ptilde_product)
                    rhs = {k: v for k, v in rhs.items() if v}
                    if lhs != rhs:
                        failures.append("bialgebra Ptilde: %s, %s" % (alpha, beta))

    # bialgebra axiom on NC P pairs
    def pnc_product(a, b):
        return ncqsym.product_nc(ncqsym.monomial_nc(ncqsym.P_nc(), a),
                                 ncqsym.monomial_nc(ncqsym.P_nc(), b))

    for n1 in range(min(max_weight, 3) + 1):
        for n2 in range(min(max_weight, 3) + 1 - n1):
            for phi in set_compositions(n1):
                for psi in set_compositions(n2):
                    x = ncqsym.monomial_nc(ncqsym.P_nc(), phi)
                    y = ncqsym.monomial_nc(ncqsym.P_nc(), psi)
                    lhs = ncqsym.coproduct_nc(ncqsym.product_nc(x, y)).terms
                    rhs = _tensor_product(ncqsym.coproduct_nc(x),
                                          ncqsym.coproduct_nc(y), pnc_product)
                    rhs = {k: v for k, v in rhs.items() if v}
                    if lhs != rhs:
                        failures.append("bialgebra P_nc: %s, %s" % (phi, psi))
    return failures


def suite_toqsym(max_weight=5):
    """Block-symmetry orbit sums project onto the commuting powersum."""
    failures = []
    for n in range(max_weight + 1):
        for phi in set_compositions(n):
            if ncqsym.P_from_orbit(phi) != qsym.P_to_M(rho(phi), NATURAL_DESCENDING):
                failures.append("toqsym: %s" % (phi,))
    return failures


def suite_pwrsmim(max_weight=5):
    """Interval/Mobius F expansion equals the Mobius-inversion composite."""
    failures = []
    for n in range(max_weight + 1):
        for phi in set_compositions(n):
            direct = ncqsym.rhoP_to_F(phi)
            composite = qsym.from_M(ncqsym.project_rho(ncqsym.P_to_M_nc(phi)), qsym.F)
            if direct != composite:
                failures.append("pwrsmim: %s" % (phi,))
    return failures


def suite_mnrule(max_weight=6):
    """Ribbon-formula F expansion equals the composite path, termwise, with
    the support inside the run interval."""
    failures = []
    for n in range(max_weight + 1):
        for alpha in compositions(n):
            try:
                expansion = mn.P_to_F(alpha)
            except RuntimeError as exc:
                failures.append(str(exc).splitlines()[0])
                continue
            allowed = interval(runs_I(alpha), runs_C(alpha))
            for beta, coeff in expansion.terms.items():
                if beta not in allowed:
                    failures.append("mnrule support: %s has F_%s" % (alpha, beta))
            if n and expansion[runs_C(alpha)] <= 0:
                failures.append("mnrule top coefficient: %s" % (alpha,))
    return failures


def suite_fima(max_weight=5):
    """Projection of the singleton-indexed P equals the fundamental function
    of the descent composition."""
    failures = []
    for n in range(1, max_weight + 1):
        for word in permutations(range(1, n + 1)):
            tau = Permutation(word)
            got = ncqsym.project_rho(ncqsym.fqsym_image(tau))
            want = qsym.F_to_M(descent_composition(tau))
            if got != want:
                failures.append("fima: tau=%s" % (tau,))
    return failures


def suite_oracle_roundtrip(max_weight=6):
    """identify . expand is the identity; M<->F and M<->P invert exactly."""
    failures = []
    for n in range(max_weight + 1):
        nvars = max(n, 1)
        for alpha in compositions(n):
            if oracle.identify_qsym(oracle.expand_M(alpha, nvars)) != \
                    qsym.monomial(qsym.M, alpha):
                failures.append("identify.expand_M: %s" % (alpha,))
            x = qsym.monomial(qsym.M, alpha)
            if qsym.to_M(qsym.from_M(x, qsym.F)) != x:
                failures.append("M<->F: %s" % (alpha,))
            for order in BOTH_ORDERS:
                back = qsym.from_M(x, qsym.P(order)).map_linear(
                    lambda b: qsym.P_to_M(b, order), basis=qsym.M)
                if back != x:
                    failures.append("M<->P: %s order=%s" % (alpha, order.name))
    for n in range(min(max_weight, 5) + 1):
        nvars = max(n, 1)
        for phi in set_compositions(n):
            got = oracle.identify_ncqsym(oracle.expand_M_nc(phi, nvars))
            if got != ncqsym.monomial_nc(ncqsym.M_NC, phi):
                failures.append("identify.expand_M_nc: %s" % (phi,))
    return failures


SUITES = {
    "refine": suite_refine,
    "shuffle": suite_shuffle,
    "coproduct": suite_coproduct,
    "toqsym": suite_toqsym,
    "pwrsmim": suite_pwrsmim,
    "mnrule": suite_mnrule,
    "fima": suite_fima,
    "oracle-roundtrip": suite_oracle_roundtrip,
}


def run_suite(name, max_weight=None):
    func = SUITES[name]
    if max_weight is None:
        return func()
    return func(max_weight)
