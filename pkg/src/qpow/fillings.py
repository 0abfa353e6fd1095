"""Matrix fillings: one occupied cell per row, stored sparsely as
(value, column) or (block, column) per row.

Covers the filling families behind the powersum expansions (partition
fillings, strict diagonal fillings, labelled diagonal descending fillings)
together with deconcatenation and the quasishuffle of fillings.
"""

from itertools import permutations as _permutations, product as _product

from .combinat import (
    Composition, Partition, SetComposition,
    NATURAL_DESCENDING, DTILDE,
)


class IntFilling(tuple):
    """Rows of (value, column) pairs; columns are 1-based and packed."""

    def __new__(cls, rows=()):
        rows = tuple((int(v), int(c)) for v, c in rows)
        if any(v < 1 or c < 1 for v, c in rows):
            raise ValueError("values and columns must be positive: %r" % (rows,))
        if rows and min(c for _, c in rows) != 1:
            raise ValueError("a nonempty filling must occupy column 1")
        return super().__new__(cls, rows)

    @property
    def num_columns(self):
        return max((c for _, c in self), default=0)

    def __repr__(self):
        return "IntFilling(%s)" % (list(self),)


class SetFilling(tuple):
    """Rows of (block, column) pairs with pairwise-disjoint blocks."""

    def __new__(cls, rows=()):
        rows = tuple((frozenset(b), int(c)) for b, c in rows)
        seen = set()
        for b, c in rows:
            if not b or c < 1:
                raise ValueError("blocks must be nonempty, columns positive")
            if seen & b:
                raise ValueError("blocks must be disjoint")
            seen |= b
        if rows and min(c for _, c in rows) != 1:
            raise ValueError("a nonempty filling must occupy column 1")
        return super().__new__(cls, rows)

    @property
    def num_columns(self):
        return max((c for _, c in self), default=0)

    def __repr__(self):
        return "SetFilling(%s)" % ([(sorted(b), c) for b, c in self],)


def row_reading(filling):
    """Per-row values (or blocks), top to bottom."""
    if isinstance(filling, SetFilling):
        return SetComposition(b for b, _ in filling)
    return Composition(v for v, _ in filling)


def column_reading(filling):
    """Per-column sums (or unions), left to right, skipping empty columns."""
    cols = {}
    if isinstance(filling, SetFilling):
        for b, c in filling:
            cols[c] = cols.get(c, frozenset()) | b
        return SetComposition(cols[c] for c in sorted(cols))
    for v, c in filling:
        cols[c] = cols.get(c, 0) + v
    return Composition(cols[c] for c in sorted(cols))


def enumerate_A(lam):
    """All distinct packed fillings with row reading lam whose column reading
    is weakly decreasing."""
    lam = Partition(lam)
    if not lam:
        return {IntFilling()}
    out = set()
    k = len(lam)
    for cols in _product(range(1, k + 1), repeat=k):
        if set(cols) != set(range(1, max(cols) + 1)):
            continue  # occupied columns must be packed
        f = IntFilling(zip(lam, cols))
        reading = column_reading(f)
        if all(reading[i] >= reading[i + 1] for i in range(len(reading) - 1)):
            out.add(f)
    return out


def enumerate_SD(alpha, order=NATURAL_DESCENDING):
    """Strict diagonal fillings of alpha: entry 1 in column 1, each later entry
    directly below or southeast of its predecessor, with the same column
    allowed only when the predecessor dominates in the part order."""
    alpha = Composition(alpha)
    if not alpha:
        return {IntFilling()}
    out = set()

    def rec(i, col, rows):
        if i == len(alpha):
            out.add(IntFilling(rows))
            return
        if order.ge(alpha[i - 1], alpha[i]):
            rec(i + 1, col, rows + ((alpha[i], col),))
        rec(i + 1, col + 1, rows + ((alpha[i], col + 1),))

    rec(1, 1, ((alpha[0], 1),))
    return out


def enumerate_LDD(phi, order=DTILDE):
    """Labelled diagonal descending fillings of a set composition: same column
    allowed only when the upper block is strictly greater in the block order."""
    phi = SetComposition(phi)
    if not phi:
        return {SetFilling()}
    out = set()

    def rec(i, col, rows):
        if i == len(phi):
            out.add(SetFilling(rows))
            return
        if order.greater(phi[i - 1], phi[i]):
            rec(i + 1, col, rows + ((phi[i], col),))
        rec(i + 1, col + 1, rows + ((phi[i], col + 1),))

    rec(1, 1, ((phi[0], 1),))
    return out


def enumerate_row_perms(filling):
    """Row-permutation tuples of an integer filling, one per distinct
    rearranged filling.

    For each value i, sigma_i hands the rows carrying i each other's columns.
    Moving entries strictly inside one column changes nothing, so tuples are
    kept up to that: each is recorded as a map value -> column sequence, and
    the count per value is the multinomial of its column multiplicities.
    """
    filling = IntFilling(filling)
    by_value = {}
    for v, c in filling:
        by_value.setdefault(v, []).append(c)
    values = sorted(by_value)
    per_value = []
    for v in values:
        cols = by_value[v]
        per_value.append(sorted({tuple(cols[j] for j in perm)
                                 for perm in _permutations(range(len(cols)))}))
    return [dict(zip(values, choice)) for choice in _product(*per_value)]


def deconcatenate_filling(filling):
    """All vertical cuts of a filling: c+1 pairs for c occupied columns,
    empty rows removed and the right piece's columns renumbered from 1."""
    filling = IntFilling(filling)
    c = filling.num_columns
    out = []
    for cut in range(c + 1):
        left = IntFilling((v, col) for v, col in filling if col <= cut)
        right = IntFilling((v, col - cut) for v, col in filling if col > cut)
        out.append((left, right))
    return out


def _columns_of(filling):
    """The filling as a list of columns, each a list of values top to bottom."""
    cols = [[] for _ in range(filling.num_columns)]
    for v, c in filling:
        cols[c - 1].append(v)
    return cols


def _from_columns(cols):
    """Rebuild a filling column by column, rows in column-major order."""
    rows = []
    for c, values in enumerate(cols, start=1):
        for v in values:
            rows.append((v, c))
    return IntFilling(rows)


def quasishuffle_fillings(f, g):
    """Multiset of fillings obtained by interleaving or merging the columns
    of f and g.  A merged column holds both columns' entries sorted by
    descending value, f entries before g entries on ties."""
    out = {}

    def merge(a, b):
        return sorted(a + b, key=lambda v: -v)  # stable: f rows first on ties

    def rec(a, b, prefix):
        if not a and not b:
            h = _from_columns(prefix)
            out[h] = out.get(h, 0) + 1
            return
        if a:
            rec(a[1:], b, prefix + [a[0]])
        if b:
            rec(a, b[1:], prefix + [b[0]])
        if a and b:
            rec(a[1:], b[1:], prefix + [merge(a[0], b[0])])

    rec(_columns_of(IntFilling(f)), _columns_of(IntFilling(g)), [])
    return out


def render_filling(filling):
    """ASCII grid in the style of the displayed fillings: one row per entry,
    dots for empty cells, and a column-sum footer."""
    filling = IntFilling(filling) if not isinstance(filling, SetFilling) else filling
    is_set = isinstance(filling, SetFilling)

    def cell(v):
        if is_set:
            return "".join(str(x) for x in sorted(v))
        return str(v)

    ncols = filling.num_columns
    footer = column_reading(filling)
    width = max([1] + [len(cell(v)) for v, _ in filling] + [len(cell(b)) for b in footer])
    lines = []
    for v, c in filling:
        cells = ["." .center(width) if j != c else cell(v).center(width)
                 for j in range(1, ncols + 1)]
        lines.append(" ".join(cells))
    lines.append("-" * max(1, (width + 1) * ncols - 1))
    lines.append(" ".join(cell(v).center(width) for v in footer))
    return "\n".join(lines)
