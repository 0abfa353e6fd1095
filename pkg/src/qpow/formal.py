"""Sparse formal sums: basis index -> exact rational coefficient.

A FormalSum is immutable after construction, carries a basis tag, and never
stores zero coefficients.  TensorSum is the two-factor analog used for
coproducts.
"""

from fractions import Fraction


class BasisMismatch(ValueError):
    pass


def _clean(terms):
    out = {}
    for idx, coeff in terms:
        coeff = Fraction(coeff)
        if coeff == 0:
            continue
        new = out.get(idx, 0) + coeff
        if new == 0:
            out.pop(idx, None)
        else:
            out[idx] = new
    return out


class FormalSum:
    """A finite linear combination of basis indices with Fraction coefficients."""

    __slots__ = ("terms", "basis")

    def __init__(self, basis, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        object.__setattr__(self, "terms", _clean(terms))
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("FormalSum is immutable")

    def __iter__(self):
        return iter(self.items())

    def items(self):
        """Terms in canonical index order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __getitem__(self, idx):
        return self.terms.get(idx, Fraction(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FormalSum) and self.basis == other.basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def _check(self, other):
        if not isinstance(other, FormalSum):
            raise TypeError("expected FormalSum, got %r" % type(other))
        if self.basis != other.basis:
            raise BasisMismatch("basis mismatch: %r vs %r" % (self.basis, other.basis))

    def __add__(self, other):
        self._check(other)
        return FormalSum(self.basis, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return FormalSum(self.basis, ((i, scalar * c) for i, c in self.terms.items()))

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def map_linear(self, func, basis=None):
        """Apply an index -> FormalSum function linearly."""
        images = [coeff * func(idx) for idx, coeff in self.terms.items()]
        if images:
            return sum(images[1:], start=images[0])
        return FormalSum(basis if basis is not None else self.basis)

    def map_index(self, func, basis):
        """Apply an index -> index map termwise."""
        return FormalSum(basis, ((func(i), c) for i, c in self.terms.items()))

    def weights(self):
        return sorted({idx.weight for idx in self.terms})

    def __repr__(self):
        if not self.terms:
            return "FormalSum(%r, 0)" % (self.basis,)
        bits = []
        for idx, coeff in self.items():
            bits.append("%s*%s[%s]" % (coeff, self.basis, idx))
        return " + ".join(bits)


class TensorSum:
    """Sparse (index, index) -> Fraction map for coproduct output."""

    __slots__ = ("terms", "basis")

    def __init__(self, basis, terms=()):
        if isinstance(terms, dict):
            terms = terms.items()
        object.__setattr__(self, "terms", _clean(terms))
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("TensorSum is immutable")

    def items(self):
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))

    def __getitem__(self, pair):
        return self.terms.get(pair, Fraction(0))

    def __eq__(self, other):
        return (isinstance(other, TensorSum) and self.basis == other.basis
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.basis != other.basis:
            raise BasisMismatch("basis mismatch: %r vs %r" % (self.basis, other.basis))
        return TensorSum(self.basis, list(self.terms.items()) + list(other.terms.items()))

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return TensorSum(self.basis, ((p, scalar * c) for p, c in self.terms.items()))

    def __mul__(self, scalar):
        return self.__rmul__(scalar)

    def __repr__(self):
        bits = ["%s*%s[%s (x) %s]" % (c, self.basis, a, b) for (a, b), c in self.items()]
        return " + ".join(bits) if bits else "TensorSum(%r, 0)" % (self.basis,)
