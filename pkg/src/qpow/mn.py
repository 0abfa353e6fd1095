"""Change of basis from the powersum basis to the fundamental basis via
ribbon insertion.

The expansion is computed twice: through the Mobius-inversion composite
(P -> M -> F), which is the authoritative path, and through the ribbon
insertion algorithm with its height and standard-filling count.  The two are
compared on every call; a mismatch is raised, never silently resolved.
"""

from itertools import permutations

from .combinat import (
    Composition, refines, interval, runs_C, runs_I, NATURAL_DESCENDING,
)
from .formal import FormalSum
from . import qsym


class Ribbon(frozenset):
    """A set of (row, col) cells with no 2x2 block; may be disconnected."""

    def __new__(cls, cells=()):
        cells = frozenset((int(r), int(c)) for r, c in cells)
        for r, c in cells:
            if {(r, c + 1), (r + 1, c), (r + 1, c + 1)} <= cells:
                raise ValueError("ribbon contains a 2x2 block at %s" % ((r, c),))
        return super().__new__(cls, cells)

    def normalize(self):
        """Translate so the minimum row and minimum column are both 1."""
        if not self:
            return self
        dr = min(r for r, _ in self) - 1
        dc = min(c for _, c in self) - 1
        return Ribbon((r - dr, c - dc) for r, c in self)

    def bottom_right(self):
        """The rightmost cell of the bottom row."""
        r = max(r for r, _ in self)
        return (r, max(c for rr, c in self if rr == r))

    def __repr__(self):
        return "Ribbon(%s)" % (sorted(self),)


class RibbonTuple(tuple):
    """Ribbons indexed by part value: entry i-1 is the ribbon for part i."""

    def sdr_count(self):
        """Product of the standard-filling counts of the components."""
        total = 1
        for r in self:
            total *= count_sdr(r)
        return total

    def __repr__(self):
        return "RibbonTuple(%s)" % (tuple(sorted(r) for r in self),)


def ribbon_of(beta):
    """The ribbon with rows of lengths beta top to bottom, each row starting
    in the column where the previous row ends."""
    beta = Composition(beta)
    cells, start = [], 1
    for r, b in enumerate(beta, start=1):
        cells.extend((r, c) for c in range(start, start + b))
        start = start + b - 1
    return Ribbon(cells)


def count_sdr(ribbon):
    """Standard fillings: 1..m placed bijectively, increasing left to right
    along rows and decreasing top to bottom along columns.  Brute force."""
    cells = sorted(ribbon)
    m = len(cells)
    if m == 0:
        return 1
    count = 0
    for perm in permutations(range(1, m + 1)):
        value = dict(zip(cells, perm))
        ok = True
        for (r, c), v in value.items():
            if (r, c + 1) in value and not v < value[(r, c + 1)]:
                ok = False
                break
            if (r + 1, c) in value and not v > value[(r + 1, c)]:
                ok = False
                break
        if ok:
            count += 1
    return count


def _reading_order(cells):
    return sorted(cells)  # top row first, left to right


def _suffix_matches(beta, running):
    """Does some suffix of beta have the same ribbon shape as the running
    remainder (up to translation)?"""
    target = Ribbon(running).normalize()
    for j in range(len(beta)):
        if ribbon_of(beta[j:]).normalize() == target:
            return True
    return False


def build_D(beta, alpha):
    """Run the insertion/removal algorithm for a pair alpha refining beta.

    Walks the parts of alpha, growing one ribbon per part value (southeast on
    a value change, south when a suffix of beta matches the remainder, east
    otherwise) while consuming the ribbon of beta in reading order.  Returns
    the ribbon tuple and the accumulated height.
    """
    beta, alpha = Composition(beta), Composition(alpha)
    if beta.weight != alpha.weight:
        raise ValueError("weights differ: %s vs %s" % (beta, alpha))
    remainder = set(ribbon_of(beta))
    n = alpha.weight
    built = {v: set() for v in range(1, n + 1)}
    height = 0
    for i, a in enumerate(alpha):
        target = built[a]
        if not target:
            target.add((1, 1))
        else:
            if i == 0 or alpha[i - 1] != a:
                r, c = Ribbon(target).bottom_right()
                target.add((r + 1, c + 1))
            elif _suffix_matches(beta, remainder):
                r, c = Ribbon(target).bottom_right()
                target.add((r + 1, c))
            else:
                r, c = Ribbon(target).bottom_right()
                target.add((r, c + 1))
        if len(remainder) < a:
            raise ValueError("removal exhausts the ribbon: inconsistent pair "
                             "(%s, %s)" % (beta, alpha))
        removed = _reading_order(remainder)[:a]
        height += len({r for r, _ in removed}) - 1
        remainder -= set(removed)
    assert not remainder
    return RibbonTuple(Ribbon(built[v]).normalize() for v in range(1, n + 1)), height


def ribbon_expansion(alpha):
    """The F expansion of P_alpha straight from the ribbon formula."""
    alpha = Composition(alpha)
    terms = []
    for beta in interval(runs_I(alpha), runs_C(alpha)):
        tup, height = build_D(beta, alpha)
        terms.append((beta, (-1) ** height * tup.sdr_count()))
    return FormalSum(qsym.F, terms)


def composite_expansion(alpha):
    """The F expansion of P_alpha through M (the authoritative path)."""
    return qsym.from_M(qsym.P_to_M(Composition(alpha), NATURAL_DESCENDING), qsym.F)


def P_to_F(alpha):
    """F expansion of P_alpha; both evaluation paths must agree."""
    alpha = Composition(alpha)
    composite = composite_expansion(alpha)
    ribbon = ribbon_expansion(alpha)
    if composite != ribbon:
        raise RuntimeError(
            "ribbon formula disagrees with the composite path at %s:\n"
            "  composite: %r\n  ribbon:    %r" % (alpha, composite, ribbon))
    return composite
