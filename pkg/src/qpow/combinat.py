"""Core combinatorial types: compositions, set compositions, orders, shuffles.

Compositions are immutable tuples of positive integers; set compositions are
tuples of disjoint frozensets.  Everything here is a pure function on these
values, so all of it is safe to use concurrently.
"""

from itertools import permutations as _permutations
from math import prod, factorial


class Composition(tuple):
    """A finite sequence of positive integers.  The empty composition is allowed."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError("composition parts must be positive integers: %r" % (parts,))
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def descent_set(self):
        """Partial sums a_1, a_1+a_2, ... excluding the full weight."""
        out, s = [], 0
        for p in self[:-1]:
            s += p
            out.append(s)
        return frozenset(out)

    def sort_key(self):
        return (self.weight, len(self), tuple(self))

    def __repr__(self):
        return "Composition(%s)" % (tuple(self),)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self) + ")"


class Partition(Composition):
    """A weakly decreasing composition."""

    def __new__(cls, parts=()):
        self = super().__new__(cls, parts)
        if any(self[i] < self[i + 1] for i in range(len(self) - 1)):
            raise ValueError("partition parts must be weakly decreasing: %r" % (tuple(self),))
        return self

    def multiplicity(self, i):
        return sum(1 for p in self if p == i)

    def __repr__(self):
        return "Partition(%s)" % (tuple(self),)


class SetComposition(tuple):
    """An ordered sequence of nonempty pairwise-disjoint finite integer sets."""

    def __new__(cls, blocks=()):
        blocks = tuple(frozenset(int(x) for x in b) for b in blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("set composition blocks must be nonempty")
            if seen & b:
                raise ValueError("set composition blocks must be disjoint: %r" % (blocks,))
            seen |= b
        if seen and any(x < 1 for x in seen):
            raise ValueError("set composition entries must be positive")
        return super().__new__(cls, blocks)

    @property
    def weight(self):
        return sum(len(b) for b in self)

    @property
    def length(self):
        return len(self)

    def ground_set(self):
        return frozenset().union(*self) if self else frozenset()

    def is_of(self, n):
        """True when the ground set is exactly {1, ..., n}."""
        return self.ground_set() == frozenset(range(1, n + 1))

    def sort_key(self):
        return (self.weight, len(self), tuple(tuple(sorted(b)) for b in self))

    def to_set_partition(self):
        return SetPartition(self)

    def __repr__(self):
        return "SetComposition(%s)" % (self.__str__(),)

    def __str__(self):
        if not self:
            return "()"
        return "|".join("".join(str(x) for x in sorted(b)) if max(b) < 10
                        else ",".join(str(x) for x in sorted(b)) for b in self)


class SetPartition(frozenset):
    """An unordered collection of nonempty pairwise-disjoint integer sets."""

    def __new__(cls, blocks=()):
        blocks = SetComposition(sorted((frozenset(b) for b in blocks), key=min) if blocks else ())
        return super().__new__(cls, blocks)

    @property
    def weight(self):
        return sum(len(b) for b in self)

    def blocks_by_min(self):
        return sorted(self, key=min)

    def sort_key(self):
        return (self.weight, len(self), tuple(tuple(sorted(b)) for b in self.blocks_by_min()))

    def __repr__(self):
        return "SetPartition(%s)" % (str(SetComposition(self.blocks_by_min())),)


class Permutation(tuple):
    """A permutation of {1, ..., n} in one-line notation."""

    def __new__(cls, values):
        values = tuple(int(v) for v in values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (values,))
        return super().__new__(cls, values)

    def __call__(self, i):
        return self[i - 1]

    def inverse(self):
        inv = [0] * len(self)
        for i, v in enumerate(self, start=1):
            inv[v - 1] = i
        return Permutation(inv)


class PartOrder:
    """A strict total order on positive integers, given by a rank key.

    greater(a, b) means a is strictly above b; ge allows equality.
    """

    def __init__(self, name, key):
        self.name = name
        self.key = key

    def greater(self, a, b):
        return a != b and self.key(a) < self.key(b)

    def ge(self, a, b):
        return a == b or self.greater(a, b)

    def __repr__(self):
        return "PartOrder(%r)" % self.name


NATURAL_DESCENDING = PartOrder("descending", lambda a: -a)
NATURAL_ASCENDING = PartOrder("ascending", lambda a: a)


def part_order_from_ranking(ranking, name="custom"):
    """Order where listed integers (decreasing precedence) sit above all others;
    unlisted values compare naturally below every listed one."""
    rank = {v: i for i, v in enumerate(ranking)}
    return PartOrder(name, lambda a: (0, rank[a]) if a in rank else (1, -a))


class BlockOrder:
    """A strict total order on pairwise-disjoint nonempty integer sets."""

    def __init__(self, name, greater):
        self.name = name
        self._greater = greater

    def greater(self, a, b):
        a, b = frozenset(a), frozenset(b)
        if not a or not b:
            raise ValueError("blocks must be nonempty")
        if a & b:
            raise ValueError("blocks must be disjoint: %r, %r" % (sorted(a), sorted(b)))
        return self._greater(a, b)

    def __repr__(self):
        return "BlockOrder(%r)" % self.name


def _dtilde_greater(a, b):
    # larger size wins; on equal size the smaller minimum wins
    return len(a) > len(b) or (len(a) == len(b) and min(a) < min(b))


DTILDE = BlockOrder("dtilde", _dtilde_greater)
DTILDE_REVERSED = BlockOrder("dtilde-reversed", lambda a, b: _dtilde_greater(b, a))


def dtilde_compare(a, b):
    """+1 if a is greater in the size-then-minimum order, -1 if b is."""
    return 1 if DTILDE.greater(a, b) else -1


# ---------------------------------------------------------------------------
# composition operations

def composition_from_descents(descents, n):
    """The composition of n with the given descent set."""
    if n == 0:
        return Composition()
    cuts = sorted(descents)
    if cuts and (cuts[0] < 1 or cuts[-1] > n - 1):
        raise ValueError("descents must lie in 1..n-1")
    bounds = [0] + cuts + [n]
    return Composition(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def sort_composition(alpha):
    """Rearrange the parts weakly decreasingly."""
    return Partition(sorted(alpha, reverse=True))


def z_factor(alpha):
    """prod_i i^{m_i} m_i! over the part multiplicities of sort(alpha)."""
    lam = sort_composition(Composition(alpha))
    mult = {}
    for p in lam:
        mult[p] = mult.get(p, 0) + 1
    return prod(i ** m * factorial(m) for i, m in mult.items())


def refines(alpha, beta):
    """True iff beta merges consecutive runs of alpha's parts (reflexive)."""
    alpha, beta = Composition(alpha), Composition(beta)
    if alpha.weight != beta.weight:
        return False
    return beta.descent_set() <= alpha.descent_set()


def interval(alpha, beta):
    """All compositions between alpha and beta in the refinement order."""
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        raise ValueError("%s does not refine %s" % (alpha, beta))
    free = sorted(alpha.descent_set() - beta.descent_set())
    fixed = beta.descent_set()
    n = alpha.weight
    out = set()
    for mask in range(1 << len(free)):
        chosen = {free[i] for i in range(len(free)) if mask >> i & 1}
        out.add(composition_from_descents(fixed | chosen, n))
    return out


def mobius_refinement(alpha, beta):
    """(-1)^{l(alpha) - l(beta)} on comparable pairs (boolean-lattice Mobius)."""
    alpha, beta = Composition(alpha), Composition(beta)
    if not refines(alpha, beta):
        raise ValueError("%s does not refine %s" % (alpha, beta))
    return (-1) ** (len(alpha) - len(beta))


def conjugate(alpha):
    """The composition of the same weight with complementary descent set."""
    alpha = Composition(alpha)
    n = alpha.weight
    comp = frozenset(range(1, n)) - alpha.descent_set()
    return composition_from_descents(comp, n)


def concat(alpha, beta):
    return Composition(tuple(alpha) + tuple(beta))


def shuffle(alpha, beta):
    """Multiset (dict value -> multiplicity) of interleavings of alpha and beta."""
    out = {}

    def rec(a, b, prefix):
        if not a and not b:
            c = Composition(prefix)
            out[c] = out.get(c, 0) + 1
            return
        if a:
            rec(a[1:], b, prefix + (a[0],))
        if b:
            rec(a, b[1:], prefix + (b[0],))

    rec(tuple(alpha), tuple(beta), ())
    return out


def quasishuffle(alpha, beta):
    """Overlapping shuffles: interleavings plus merges of the two lead parts."""
    out = {}

    def rec(a, b, prefix):
        if not a and not b:
            c = Composition(prefix)
            out[c] = out.get(c, 0) + 1
            return
        if a:
            rec(a[1:], b, prefix + (a[0],))
        if b:
            rec(a, b[1:], prefix + (b[0],))
        if a and b:
            rec(a[1:], b[1:], prefix + (a[0] + b[0],))

    rec(tuple(alpha), tuple(beta), ())
    return out


def _runs(alpha, break_after):
    """Split alpha into maximal runs, breaking between i and i+1 when
    break_after(a_i, a_{i+1}) holds."""
    alpha = tuple(alpha)
    runs, cur = [], []
    for i, p in enumerate(alpha):
        cur.append(p)
        if i + 1 < len(alpha) and break_after(p, alpha[i + 1]):
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


def runs_C(alpha):
    """Weights of the maximal weakly decreasing runs (break at strict ascents)."""
    return Composition(sum(r) for r in _runs(alpha, lambda a, b: a < b))


def runs_I(alpha):
    """Concatenated conjugates of the maximal strictly decreasing runs
    (break at weak ascents)."""
    out = ()
    for r in _runs(alpha, lambda a, b: a <= b):
        out += tuple(conjugate(Composition(r)))
    return Composition(out)


# ---------------------------------------------------------------------------
# set composition operations

def rho(phi):
    """Block sizes of a set composition."""
    return Composition(len(b) for b in SetComposition(phi))


def varrho(alpha):
    """Entry i of the sequence goes into the block ranked by how many entries
    are strictly smaller; e.g. (1,6,4,3,6) -> 1|4|3|25."""
    alpha = tuple(alpha)
    values = sorted(set(alpha))
    blocks = [set() for _ in values]
    for i, a in enumerate(alpha, start=1):
        blocks[sum(1 for v in values if v < a)].add(i)
    return SetComposition(blocks)


def standardize(phi):
    """Relabel the ground set to {1, ..., m} preserving relative order."""
    phi = SetComposition(phi)
    relabel = {x: i for i, x in enumerate(sorted(phi.ground_set()), start=1)}
    return SetComposition(frozenset(relabel[x] for x in b) for b in phi)


def shift_up(phi, n):
    return SetComposition(frozenset(x + n for x in b) for b in SetComposition(phi))


def shuffle_blocks(phi, psi):
    """Multiset of block interleavings of two disjoint set compositions."""
    out = {}

    def rec(a, b, prefix):
        if not a and not b:
            g = SetComposition(prefix)
            out[g] = out.get(g, 0) + 1
            return
        if a:
            rec(a[1:], b, prefix + (a[0],))
        if b:
            rec(a, b[1:], prefix + (b[0],))

    rec(tuple(SetComposition(phi)), tuple(SetComposition(psi)), ())
    return out


def shifted_shuffle(phi, psi):
    """Shuffle of phi with psi shifted up by the weight of phi.

    phi must have ground set {1, ..., n}.
    """
    phi = SetComposition(phi)
    n = phi.weight
    if not phi.is_of(n):
        raise ValueError("left factor must have ground set {1..n}: %r" % (phi,))
    return shuffle_blocks(phi, shift_up(psi, n))


def rho_C(phi):
    """rho(phi) broken where consecutive blocks ascend in the size-then-min
    order; returns the run weights."""
    return Composition(sum(r) for r in _rho_runs(phi))


def rho_I(phi):
    """Same breaking as rho_C, returning the concatenated run conjugates."""
    out = ()
    for r in _rho_runs(phi):
        out += tuple(conjugate(Composition(r)))
    return Composition(out)


def _rho_runs(phi):
    phi = SetComposition(phi)
    sizes = tuple(len(b) for b in phi)
    runs, cur = [], []
    for i, s in enumerate(sizes):
        cur.append(s)
        if i + 1 < len(phi) and not DTILDE.greater(phi[i], phi[i + 1]):
            runs.append(tuple(cur))
            cur = []
    if cur:
        runs.append(tuple(cur))
    return runs


def block_symmetry_orbit(phi):
    """All set compositions obtained by permuting, among their own positions,
    the blocks of each fixed size."""
    phi = SetComposition(phi)
    by_size = {}
    for pos, b in enumerate(phi):
        by_size.setdefault(len(b), []).append(pos)
    out = set()
    groups = sorted(by_size.items())
    choices = [list(_permutations(positions)) for _, positions in groups]

    def rec(gi, assignment):
        if gi == len(groups):
            out.add(SetComposition(assignment[p] for p in range(len(phi))))
            return
        _, positions = groups[gi]
        for perm in choices[gi]:
            new = dict(assignment)
            for src, dst in zip(positions, perm):
                new[dst] = phi[src]
            rec(gi + 1, new)

    rec(0, {})
    return out


def descent_composition(tau):
    """Composition of n whose descent set is {i : tau(i) > tau(i+1)}."""
    tau = Permutation(tau)
    descents = {i for i in range(1, len(tau)) if tau[i - 1] > tau[i]}
    return composition_from_descents(descents, len(tau))


def inverse_singleton_image(tau):
    """The image of the singleton set composition 1|2|...|n under the inverse
    action of tau: block i is {tau(i)}, the one-line word of tau as singletons.

    This is the convention under which the projection to QSym lands on the
    fundamental function of tau's own descent composition.
    """
    return SetComposition([v] for v in Permutation(tau))


# ---------------------------------------------------------------------------
# enumeration helpers (desk scale)

def compositions(n):
    """All compositions of n, one per descent subset."""
    if n == 0:
        yield Composition()
        return
    for mask in range(1 << (n - 1)):
        descents = {i for i in range(1, n) if mask >> (i - 1) & 1}
        yield composition_from_descents(descents, n)


def partitions(n):
    """All partitions of n, largest part first."""

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(n, n):
        yield Partition(parts)


def set_partitions(n):
    """All set partitions of {1, ..., n}."""

    def rec(i, blocks):
        if i > n:
            yield SetPartition(frozenset(b) for b in blocks)
            return
        for b in blocks:
            b.add(i)
            yield from rec(i + 1, blocks)
            b.remove(i)
        blocks.append({i})
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def set_compositions(n):
    """All set compositions of {1, ..., n}."""
    for phi in set_partitions(n):
        for order in _permutations(phi.blocks_by_min()):
            yield SetComposition(order)
