"""QSym as formal sums: the M, F, P and scaled-P bases, conversions between
them, products and coproducts, plus the symmetric p/m embeddings.

Basis tags: "M", "F", "P:<order>", "Ptilde:<order>", "m", "p".  Conversions
route through M as the pivot basis.  Coefficients are exact Fractions
throughout.  Conversion results are memoized per (index, order-name); the
memo is a plain dict, so concurrent callers may duplicate work but always
observe consistent published values.
"""

from fractions import Fraction

from .combinat import (
    Composition, Partition, sort_composition, z_factor, interval,
    mobius_refinement, shuffle, quasishuffle, concat, compositions,
    composition_from_descents, NATURAL_DESCENDING,
)
from .fillings import enumerate_A, enumerate_SD, enumerate_row_perms, column_reading
from .formal import FormalSum, TensorSum, BasisMismatch

M = "M"
F = "F"
SYM_M = "m"
SYM_P = "p"


def P(order=NATURAL_DESCENDING):
    return "P:%s" % order.name


def Ptilde(order=NATURAL_DESCENDING):
    return "Ptilde:%s" % order.name


def monomial(basis, index, coeff=1):
    """The single-term sum coeff * basis[index]."""
    return FormalSum(basis, [(index, Fraction(coeff))])


# ---------------------------------------------------------------------------
# symmetric embeddings

def p_to_m(lam):
    """Powersum to monomial via partition fillings: aggregate the column
    readings of all fillings with row reading lam and partition columns."""
    lam = Partition(lam)
    terms = {}
    for f in enumerate_A(lam):
        col = Partition(column_reading(f))
        terms[col] = terms.get(col, 0) + 1
    return FormalSum(SYM_M, terms)


def m_to_M(lam):
    """m_lam is the sum of M over the distinct rearrangements of lam."""
    lam = Partition(lam)
    return FormalSum(M, ((alpha, 1) for alpha in _rearrangements(lam)))


def _rearrangements(lam):
    from itertools import permutations
    return sorted({Composition(p) for p in permutations(lam)}, key=Composition.sort_key)


def p_to_P(lam, order=NATURAL_DESCENDING):
    """p_lam as the sum of P_alpha over rearrangements alpha of lam."""
    lam = Partition(lam)
    return FormalSum(P(order), ((alpha, 1) for alpha in _rearrangements(lam)))


# ---------------------------------------------------------------------------
# M <-> F

def F_to_M(alpha):
    """Sum of M over all refinements of alpha."""
    alpha = Composition(alpha)
    n = alpha.weight
    fixed = alpha.descent_set()
    free = sorted(set(range(1, n)) - fixed)
    terms = []
    for mask in range(1 << len(free)):
        chosen = {free[i] for i in range(len(free)) if mask >> i & 1}
        terms.append((composition_from_descents(fixed | chosen, n), 1))
    return FormalSum(M, terms)


def M_to_F(alpha):
    """Mobius inversion of F_to_M on the boolean refinement lattice."""
    alpha = Composition(alpha)
    n = alpha.weight
    fixed = alpha.descent_set()
    free = sorted(set(range(1, n)) - fixed)
    terms = []
    for mask in range(1 << len(free)):
        chosen = {free[i] for i in range(len(free)) if mask >> i & 1}
        beta = composition_from_descents(fixed | chosen, n)
        terms.append((beta, (-1) ** len(chosen)))
    return FormalSum(F, terms)


# ---------------------------------------------------------------------------
# M <-> P

_P_to_M_cache = {}
_M_to_P_cache = {}


def P_to_M(alpha, order=NATURAL_DESCENDING):
    """Aggregate column readings of the strict diagonal fillings of alpha,
    each weighted by its number of admissible row-permutation tuples."""
    alpha = Composition(alpha)
    key = (alpha, order.name)
    if key not in _P_to_M_cache:
        terms = {}
        for f in enumerate_SD(alpha, order):
            col = column_reading(f)
            terms[col] = terms.get(col, 0) + len(enumerate_row_perms(f))
        _P_to_M_cache[key] = FormalSum(M, terms)
    return _P_to_M_cache[key]


def Ptilde_to_M(alpha, order=NATURAL_DESCENDING):
    return Fraction(1, z_factor(alpha)) * P_to_M(alpha, order)


def M_to_P(alpha, order=NATURAL_DESCENDING):
    """Invert P_to_M.  The expansion of P_alpha is block-triangular: every
    other composition in its support is strictly coarser (shorter), so we can
    solve by back-substitution down the lengths."""
    alpha = Composition(alpha)
    key = (alpha, order.name)
    if key in _M_to_P_cache:
        return _M_to_P_cache[key]
    expansion = P_to_M(alpha, order)
    diag = expansion[alpha]
    if diag == 0:
        raise ArithmeticError("singular change of basis at %s" % (alpha,))
    rest = FormalSum(P(order))
    for beta, coeff in expansion.items():
        if beta == alpha:
            continue
        if len(beta) >= len(alpha):
            raise ArithmeticError(
                "expansion of %s not triangular: contains %s" % (alpha, beta))
        rest = rest + coeff * M_to_P(beta, order)
    result = Fraction(1, diag) * (monomial(P(order), alpha) - rest)
    _M_to_P_cache[key] = result
    return result


def M_to_Ptilde(alpha, order=NATURAL_DESCENDING):
    x = M_to_P(alpha, order)
    return FormalSum(Ptilde(order), ((beta, c * z_factor(beta)) for beta, c in x.terms.items()))


# ---------------------------------------------------------------------------
# generic conversion

def _split_tag(basis):
    name, _, order_name = basis.partition(":")
    return name, order_name


_ORDER_REGISTRY = {}


def register_order(order):
    """Make a part order reachable by name from basis tags."""
    _ORDER_REGISTRY[order.name] = order
    return order


def _order_from_name(name):
    from .combinat import NATURAL_ASCENDING
    register_order(NATURAL_DESCENDING)
    register_order(NATURAL_ASCENDING)
    if name not in _ORDER_REGISTRY:
        raise ValueError("unknown order %r; register_order it first" % name)
    return _ORDER_REGISTRY[name]


def to_M(x):
    """Convert any supported element to the M basis."""
    name, order_name = _split_tag(x.basis)
    if name == M:
        return x
    if name == F:
        return x.map_linear(F_to_M, basis=M)
    if name == "P":
        order = _order_from_name(order_name)
        return x.map_linear(lambda a: P_to_M(a, order), basis=M)
    if name == "Ptilde":
        order = _order_from_name(order_name)
        return x.map_linear(lambda a: Ptilde_to_M(a, order), basis=M)
    if name == SYM_M:
        return x.map_linear(m_to_M, basis=M)
    if name == SYM_P:
        return x.map_linear(p_to_m, basis=SYM_M).map_linear(m_to_M, basis=M)
    raise BasisMismatch("cannot convert basis %r to M" % (x.basis,))


def from_M(x, target):
    """Convert an M-basis element to a composition-indexed target basis."""
    if x.basis != M:
        raise BasisMismatch("expected M-basis element")
    name, order_name = _split_tag(target)
    if name == M:
        return x
    if name == F:
        return x.map_linear(M_to_F, basis=F)
    if name == "P":
        order = _order_from_name(order_name)
        return x.map_linear(lambda a: M_to_P(a, order), basis=target)
    if name == "Ptilde":
        order = _order_from_name(order_name)
        return x.map_linear(lambda a: M_to_Ptilde(a, order), basis=target)
    raise BasisMismatch("cannot convert M to basis %r" % (target,))


def convert(x, target):
    if x.basis == target:
        return x
    return from_M(to_M(x), target)


# ---------------------------------------------------------------------------
# product and coproduct

def _multiset_sum(basis, pairs):
    terms = {}
    for multiset, coeff in pairs:
        for idx, mult in multiset.items():
            terms[idx] = terms.get(idx, 0) + coeff * mult
    return FormalSum(basis, terms)


def product(x, y):
    """Product in the common basis of x and y: shuffle for scaled P,
    quasishuffle for M, otherwise routed through M."""
    if x.basis != y.basis:
        raise BasisMismatch("basis mismatch: %r vs %r" % (x.basis, y.basis))
    name, _ = _split_tag(x.basis)
    if name == "Ptilde":
        return _multiset_sum(x.basis, ((shuffle(a, b), ca * cb)
                                       for a, ca in x.terms.items()
                                       for b, cb in y.terms.items()))
    if name == M:
        return _multiset_sum(M, ((quasishuffle(a, b), ca * cb)
                                 for a, ca in x.terms.items()
                                 for b, cb in y.terms.items()))
    if name in ("F", "P"):
        return from_M(product(to_M(x), to_M(y)), x.basis)
    raise BasisMismatch("no product implemented for basis %r" % (x.basis,))


def _deconcat_tensor(basis, x):
    terms = {}
    for gamma, coeff in x.terms.items():
        for i in range(len(gamma) + 1):
            pair = (Composition(gamma[:i]), Composition(gamma[i:]))
            terms[pair] = terms.get(pair, 0) + coeff
    return TensorSum(basis, terms)


def tensor_map(ts, func, basis):
    """Apply an index -> FormalSum map to both tensor factors."""
    terms = {}
    for (a, b), coeff in ts.terms.items():
        left, right = func(a), func(b)
        for la, ca in left.terms.items():
            for rb, cb in right.terms.items():
                pair = (la, rb)
                terms[pair] = terms.get(pair, 0) + coeff * ca * cb
    return TensorSum(basis, terms)


def coproduct(x):
    """Deconcatenation coproduct: native on M and scaled P, by conversion
    elsewhere."""
    name, order_name = _split_tag(x.basis)
    if name in (M, "Ptilde"):
        return _deconcat_tensor(x.basis, x)
    if name == "P":
        scaled = FormalSum("Ptilde:%s" % order_name,
                           ((g, c * z_factor(g)) for g, c in x.terms.items()))
        ts = _deconcat_tensor(scaled.basis, scaled)
        return tensor_map(
            ts, lambda a: monomial(x.basis, a, Fraction(1, z_factor(a))), x.basis)
    if name == F:
        ts = _deconcat_tensor(M, to_M(x))
        return tensor_map(ts, M_to_F, F)
    raise BasisMismatch("no coproduct implemented for basis %r" % (x.basis,))


def counit(x):
    """Coefficient of the empty index."""
    return x[Composition()]
