"""Independent ground truth: genuine truncated polynomials in commuting and
non-commuting variables.

Basis elements are expanded into actual monomials, multiplied by distributing,
and re-identified as monomial-basis expansions.  Nothing here calls the basis
conversion code, so agreement between the two is a real check.
"""

from fractions import Fraction
from itertools import combinations, product as _product

from .combinat import (
    Composition, Partition, SetComposition, SetPartition, varrho, rho,
)
from .formal import FormalSum
from . import qsym, ncqsym


class CPoly:
    """Sparse polynomial in N commuting variables: exponent vector -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        clean = {}
        for exp, coeff in terms:
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError("exponent vector length %d != %d" % (len(exp), nvars))
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            new = clean.get(exp, 0) + coeff
            if new == 0:
                clean.pop(exp, None)
            else:
                clean[exp] = new
        self.nvars = nvars
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, CPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        return CPoly(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        self._check(other)
        return self + (-1) * other

    def __rmul__(self, scalar):
        return CPoly(self.nvars, ((e, Fraction(scalar) * c) for e, c in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, CPoly) or other.nvars != self.nvars:
            raise ValueError("operands must be CPoly over the same variables")

    def __repr__(self):
        return "CPoly(%d, %d terms)" % (self.nvars, len(self.terms))


class NCPoly:
    """Sparse polynomial in N non-commuting variables: word -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        clean = {}
        for word, coeff in terms:
            word = tuple(word)
            if any(not 1 <= x <= nvars for x in word):
                raise ValueError("word letters must lie in 1..%d" % nvars)
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            new = clean.get(word, 0) + coeff
            if new == 0:
                clean.pop(word, None)
            else:
                clean[word] = new
        self.nvars = nvars
        self.terms = clean

    def __eq__(self, other):
        return (isinstance(other, NCPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        return NCPoly(self.nvars, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        self._check(other)
        return self + (-1) * other

    def __rmul__(self, scalar):
        return NCPoly(self.nvars, ((w, Fraction(scalar) * c) for w, c in self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, NCPoly) or other.nvars != self.nvars:
            raise ValueError("operands must be NCPoly over the same variables")

    def __repr__(self):
        return "NCPoly(%d, %d terms)" % (self.nvars, len(self.terms))


def multiply(a, b):
    """Distributive product: exponent addition or word concatenation."""
    if isinstance(a, CPoly) and isinstance(b, CPoly):
        a._check(b)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return CPoly(a.nvars, terms)
    if isinstance(a, NCPoly) and isinstance(b, NCPoly):
        a._check(b)
        terms = {}
        for w1, c1 in a.terms.items():
            for w2, c2 in b.terms.items():
                w = w1 + w2
                terms[w] = terms.get(w, 0) + c1 * c2
        return NCPoly(a.nvars, terms)
    raise ValueError("operands must be two CPoly or two NCPoly")


# ---------------------------------------------------------------------------
# expansions

def expand_M(alpha, nvars):
    """M as a sum over strictly increasing variable choices."""
    alpha = Composition(alpha)
    terms = []
    for idx in combinations(range(nvars), len(alpha)):
        exp = [0] * nvars
        for pos, part in zip(idx, alpha):
            exp[pos] = part
        terms.append((tuple(exp), 1))
    return CPoly(nvars, terms)


def expand_F(alpha, nvars):
    """F via its refinement expansion, each refinement expanded as M."""
    total = CPoly(nvars)
    for beta, coeff in qsym.F_to_M(alpha).terms.items():
        total = total + coeff * expand_M(beta, nvars)
    return total


def expand_M_nc(phi, nvars):
    """Sum of the words constant on each block, block values strictly
    increasing along the block order."""
    phi = SetComposition(phi)
    n = phi.weight
    terms = []
    for values in combinations(range(1, nvars + 1), len(phi)):
        word = [0] * n
        for v, block in zip(values, phi):
            for i in block:
                word[i - 1] = v
        terms.append((tuple(word), 1))
    return NCPoly(nvars, terms)


def expand_p(lam, nvars):
    """Classical powersum: product over parts of sum_i x_i^k."""
    lam = Partition(lam)
    result = CPoly(nvars, {(0,) * nvars: 1})
    for k in lam:
        pk = CPoly(nvars, (((0,) * i + (k,) + (0,) * (nvars - i - 1), 1)
                           for i in range(nvars)))
        result = multiply(result, pk)
    return result


def expand_p_nc(phi, nvars):
    """Powersum in non-commuting variables: all words constant on each block
    of the set partition, block values unconstrained."""
    phi = SetPartition(phi)
    blocks = phi.blocks_by_min()
    n = phi.weight
    terms = {}
    for values in _product(range(1, nvars + 1), repeat=len(blocks)):
        word = [0] * n
        for v, block in zip(values, blocks):
            for i in block:
                word[i - 1] = v
        word = tuple(word)
        terms[word] = terms.get(word, 0) + 1
    return NCPoly(nvars, terms)


# ---------------------------------------------------------------------------
# identification

class IdentifyError(ValueError):
    """Raised when a polynomial is not a (quasi)symmetric M-combination."""


def identify_qsym(f, nvars=None, degree=None):
    """Recover the unique M expansion of a quasisymmetric polynomial.

    Coefficients are read off the initial monomials x_1^{a_1}...x_k^{a_k};
    the reconstruction is then re-expanded and compared, so a
    non-quasisymmetric input (or insufficient truncation) raises.
    """
    if nvars is None:
        nvars = f.nvars
    terms = {}
    for exp, coeff in f.terms.items():
        support = [i for i, e in enumerate(exp) if e > 0]
        if support == list(range(len(support))):  # initial segment of variables
            alpha = Composition(exp[i] for i in support)
            terms[alpha] = coeff
    result = FormalSum(qsym.M, terms)
    check = CPoly(nvars)
    for alpha, coeff in result.terms.items():
        check = check + coeff * expand_M(alpha, nvars)
    if check != f:
        raise IdentifyError("polynomial is not quasisymmetric at truncation %d" % nvars)
    return result


def identify_ncqsym(f, nvars=None):
    """Recover the unique M expansion of a polynomial in NCQSym.

    The coefficient of each set composition is read off its minimal word
    (block j filled with letter j); the reconstruction is verified.
    """
    if nvars is None:
        nvars = f.nvars
    terms = {}
    for word, coeff in f.terms.items():
        if not word or set(word) == set(range(1, max(word) + 1)):  # packed word
            terms[varrho(word)] = coeff
    result = FormalSum(ncqsym.M_NC, terms)
    check = NCPoly(nvars)
    for phi, coeff in result.terms.items():
        check = check + coeff * expand_M_nc(phi, nvars)
    if check != f:
        raise IdentifyError("polynomial is not in NCQSym at truncation %d" % nvars)
    return result


def let_variables_commute(f):
    """Collapse a word polynomial to commuting variables."""
    terms = {}
    for word, coeff in f.terms.items():
        exp = [0] * f.nvars
        for x in word:
            exp[x - 1] += 1
        exp = tuple(exp)
        terms[exp] = terms.get(exp, 0) + coeff
    return CPoly(f.nvars, terms)


# ---------------------------------------------------------------------------
# two-alphabet coproduct

def coproduct_oracle(alpha, nvars):
    """The M coproduct of M_alpha read off a two-alphabet evaluation.

    M_alpha is expanded in the ordered alphabet x_1 < ... < x_N < y_1 < ...
    < y_N; splitting each monomial's exponents between the alphabets and
    identifying both halves yields the tensor.
    """
    from .formal import TensorSum
    alpha = Composition(alpha)
    big = expand_M(alpha, 2 * nvars)
    halves = {}
    for exp, coeff in big.terms.items():
        x_part, y_part = exp[:nvars], exp[nvars:]
        key = (x_part, y_part)
        halves[key] = halves.get(key, 0) + coeff
    # group by the compositions each half reads as
    terms = {}
    for (x_part, y_part), coeff in halves.items():
        x_support = [i for i, e in enumerate(x_part) if e > 0]
        y_support = [i for i, e in enumerate(y_part) if e > 0]
        if (x_support != list(range(len(x_support)))
                or y_support != list(range(len(y_support)))):
            continue
        pair = (Composition(e for e in x_part if e > 0),
                Composition(e for e in y_part if e > 0))
        terms[pair] = terms.get(pair, 0) + coeff
    ts = TensorSum(qsym.M, terms)
    # verify the reconstruction against the two-alphabet expansion
    check = CPoly(2 * nvars)
    for (a, b), coeff in ts.terms.items():
        left = expand_M(a, 2 * nvars)
        right = CPoly(2 * nvars, ((tuple(0 for _ in range(nvars)) + e[:nvars], c)
                                  for e, c in expand_M(b, nvars).terms.items()))
        check = check + coeff * multiply(left_restrict(left, nvars), right)
    if check != big:
        raise IdentifyError("two-alphabet identification failed for %s" % (alpha,))
    return ts


def left_restrict(f, nvars):
    """Drop monomials touching the second alphabet."""
    return CPoly(f.nvars, ((e, c) for e, c in f.terms.items()
                           if all(x == 0 for x in e[nvars:])))
