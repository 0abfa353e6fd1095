"""NCQSym as formal sums: the M and P bases on set compositions, the shifted
shuffle product, the standardized deconcatenation coproduct, and the
projection down to QSym.

Basis tags: "M_nc", "P_nc:<blockorder>", "ncsym-p".
"""

from itertools import combinations, permutations

from .combinat import (
    Composition, SetComposition, SetPartition,
    rho, rho_C, rho_I, standardize, shifted_shuffle, block_symmetry_orbit,
    interval, mobius_refinement, inverse_singleton_image,
    DTILDE, NATURAL_DESCENDING,
)
from .fillings import enumerate_LDD, column_reading
from .formal import FormalSum, TensorSum, BasisMismatch
from . import qsym

M_NC = "M_nc"
NCSYM_P = "ncsym-p"


def P_nc(order=DTILDE):
    return "P_nc:%s" % order.name


def monomial_nc(basis, phi, coeff=1):
    return FormalSum(basis, [(phi, coeff)])


_P_to_M_nc_cache = {}


def P_to_M_nc(phi, order=DTILDE):
    """Aggregate column readings of the LDD fillings of phi.  Unlike the
    commuting case there is no row-permutation factor."""
    phi = SetComposition(phi)
    key = (phi, order.name)
    if key not in _P_to_M_nc_cache:
        terms = {}
        for f in enumerate_LDD(phi, order):
            col = column_reading(f)
            terms[col] = terms.get(col, 0) + 1
        _P_to_M_nc_cache[key] = FormalSum(M_NC, terms)
    return _P_to_M_nc_cache[key]


def p_to_P_nc(phi, order=DTILDE):
    """The set-partition powersum as the sum of P over all block orderings."""
    phi = SetPartition(phi)
    return FormalSum(P_nc(order),
                     ((SetComposition(w), 1) for w in permutations(phi.blocks_by_min())))


def _expect_P_basis(x):
    if not x.basis.startswith("P_nc:"):
        raise BasisMismatch("expected a P_nc element, got basis %r" % (x.basis,))


def product_nc(x, y):
    """Shifted shuffle product on the P basis; the left factor must be
    homogeneous so the shift amount is well defined."""
    _expect_P_basis(x)
    if x.basis != y.basis:
        raise BasisMismatch("basis mismatch: %r vs %r" % (x.basis, y.basis))
    if len(x.weights()) > 1:
        raise ValueError("left factor must be homogeneous, has weights %s" % (x.weights(),))
    terms = {}
    for phi, ca in x.terms.items():
        for psi, cb in y.terms.items():
            for gamma, mult in shifted_shuffle(phi, psi).items():
                terms[gamma] = terms.get(gamma, 0) + ca * cb * mult
    return FormalSum(x.basis, terms)


def coproduct_nc(x):
    """All block deconcatenations, both sides standardized."""
    _expect_P_basis(x)
    terms = {}
    for phi, coeff in x.terms.items():
        for i in range(len(phi) + 1):
            pair = (standardize(SetComposition(phi[:i])),
                    standardize(SetComposition(phi[i:])))
            terms[pair] = terms.get(pair, 0) + coeff
    return TensorSum(x.basis, terms)


def project_rho(x):
    """The homomorphism to QSym sending M indexed by a set composition to M
    indexed by its block sizes."""
    if x.basis.startswith("P_nc:"):
        order = _block_order_from_name(x.basis.partition(":")[2])
        x = x.map_linear(lambda p: P_to_M_nc(p, order), basis=M_NC)
    if x.basis != M_NC:
        raise BasisMismatch("expected M_nc or P_nc element, got %r" % (x.basis,))
    return x.map_index(rho, qsym.M)


_BLOCK_ORDER_REGISTRY = {}


def register_block_order(order):
    _BLOCK_ORDER_REGISTRY[order.name] = order
    return order


def _block_order_from_name(name):
    from .combinat import DTILDE_REVERSED
    register_block_order(DTILDE)
    register_block_order(DTILDE_REVERSED)
    if name not in _BLOCK_ORDER_REGISTRY:
        raise ValueError("unknown block order %r; register_block_order it first" % name)
    return _BLOCK_ORDER_REGISTRY[name]


def canonical_lift(alpha):
    """The set composition with consecutive-integer blocks of sizes alpha,
    assigned left to right; e.g. (1,2,1,1) -> 1|23|4|5."""
    alpha = Composition(alpha)
    blocks, next_x = [], 1
    for a in alpha:
        blocks.append(frozenset(range(next_x, next_x + a)))
        next_x += a
    return SetComposition(blocks)


def P_from_orbit(phi, order=DTILDE):
    """Sum of the rho projections over the block-symmetry orbit of phi;
    for a compatible order pair this is P of the block-size composition."""
    total = FormalSum(qsym.M)
    for psi in block_symmetry_orbit(phi):
        total = total + project_rho(P_to_M_nc(psi, order))
    return total


def fqsym_image(tau):
    """The P element indexed by the singleton set composition read off the
    inverse permutation."""
    return monomial_nc(P_nc(DTILDE), inverse_singleton_image(tau))


def rhoP_to_F(phi):
    """F expansion of the rho projection of P_phi: Mobius coefficients over
    the refinement interval between the run-conjugate and run-weight images."""
    phi = SetComposition(phi)
    top = rho_C(phi)
    terms = []
    for alpha in interval(rho_I(phi), top):
        terms.append((alpha, mobius_refinement(alpha, top)))
    return FormalSum(qsym.F, terms)


def compatibility_check(block_order, part_order, n):
    """True when, for all disjoint nonempty A, B in {1..n} of different sizes,
    B above A in the block order forces |B| above |A| in the part order."""
    universe = range(1, n + 1)
    subsets = []
    for k in range(1, n + 1):
        subsets.extend(frozenset(c) for c in combinations(universe, k))
    for a in subsets:
        for b in subsets:
            if a & b or len(a) == len(b):
                continue
            if block_order.greater(b, a) and not part_order.greater(len(b), len(a)):
                return False
    return True
