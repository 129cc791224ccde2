"""Finite-gap submonoids of N^d and their generator calculus."""

from __future__ import annotations

import itertools
import threading
from operator import add, sub
from typing import Optional

from .core import OrderSpec, Point, basis_point, check_dim

_CACHE_LOCK = threading.Lock()


class NotAMonoid(ValueError):
    """A claimed gap set whose complement is not closed under addition."""

    def __init__(self, h, a, b):
        super().__init__(
            f"complement not closed: {a} + {b} = {h} is a gap but neither part is")
        self.h = h
        self.a = a
        self.b = b


class NotAGap(ValueError):
    pass


class NotSpecialGap(ValueError):
    pass


class NotMinimalGenerator(ValueError):
    pass


def _degree_key(p):
    return (sum(p), p)


class GapSemigroup:
    """A submonoid of N^d with finite complement, stored as its gap set.

    Instances are meant to be immutable.  The generator and conductor caches
    fill at most once, under a lock; construction sites that already know
    the generators pass them in, and the tree engines use the trusted path
    to skip renormalization.  Closure of the complement is the caller's
    bargain on the trusted path; untrusted input goes through validate().
    """

    __slots__ = ("dim", "gaps", "_gens", "_conductor")

    def __init__(self, dim, gaps, generators=None, _trusted=False):
        if _trusted:
            self.dim = dim
            self.gaps = gaps
        else:
            check_dim(dim)
            norm = frozenset(tuple(h) for h in gaps)
            for h in norm:
                if len(h) != dim:
                    raise ValueError(f"gap {h} does not have dimension {dim}")
                if min(h, default=0) < 0 or not any(h):
                    raise ValueError(f"gap {h} must be nonzero with nonnegative entries")
            self.dim = dim
            self.gaps = norm
        self._gens = frozenset(generators) if generators is not None else None
        self._conductor = None

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def conductor(self) -> Point:
        """1 + the per-axis gap maxima; all zeros exactly when gap-free.

        Translating N^d by this vector lands inside the monoid, and every
        minimal generator fits below twice it.
        """
        c = self._conductor
        if c is None:
            if self.gaps:
                c = tuple(1 + max(h[s] for h in self.gaps) for s in range(self.dim))
            else:
                c = (0,) * self.dim
            self._conductor = c
        return c

    @property
    def generators(self) -> frozenset:
        gens = self._gens
        if gens is None:
            with _CACHE_LOCK:
                gens = self._gens
                if gens is None:
                    gens = _generators_from_scratch(self.dim, self.gaps)
                    self._gens = gens
        return gens

    def __eq__(self, other):
        return (isinstance(other, GapSemigroup)
                and self.dim == other.dim and self.gaps == other.gaps)

    def __hash__(self):
        return hash((self.dim, self.gaps))

    def __repr__(self):
        shown = ",".join(str(h) for h in sorted(self.gaps))
        return f"GapSemigroup(d={self.dim}, gaps=[{shown}])"

    def __getstate__(self):
        return (self.dim, self.gaps, self._gens)

    def __setstate__(self, state):
        self.dim, self.gaps, self._gens = state
        self._conductor = None


def _generators_from_scratch(dim, gaps):
    """Sieve the bounding box for points with no two-part split inside S.

    A coordinate at or above twice the conductor splits off conductor * e_i,
    so the box covers every minimal generator.  Points are sieved in graded
    order; only confirmed generators need probing, since any split can be
    rewritten to pass through one.
    """
    if not gaps:
        return frozenset(basis_point(dim, i) for i in range(1, dim + 1))
    cond = [1 + max(h[s] for h in gaps) for s in range(dim)]
    box = itertools.product(*(range(2 * c) for c in cond))
    pts = sorted((p for p in box if any(p) and p not in gaps), key=_degree_key)
    gens = []
    for p in pts:
        for a in gens:
            q = tuple(map(sub, p, a))
            if min(q) >= 0 and any(q) and q not in gaps:
                break
        else:
            gens.append(p)
    return frozenset(gens)


def _removal_generators(gens, n, child_gaps):
    """Generators of S minus {n}, from those of S.

    A generator that is new in the child has every split passing through n,
    which forces it into n + A, 2n + A, or {2n, 3n}.  Candidates are
    confirmed in ascending degree, so each probe list is complete by the
    time it is used: a missing higher-degree generator could only witness a
    split with a zero part.
    """
    base = [a for a in gens if a != n]
    two_n = tuple(map(add, n, n))
    cands = {tuple(map(add, n, a)) for a in base}
    cands.update(tuple(map(add, two_n, a)) for a in base)
    cands.add(two_n)
    cands.add(tuple(map(add, two_n, n)))
    probes = sorted(base, key=sum)
    out = list(base)
    for x in sorted(cands, key=_degree_key):
        for a in probes:
            q = tuple(map(sub, x, a))
            if min(q) >= 0 and q not in child_gaps:
                break
        else:
            out.append(x)
            probes.append(x)
    return frozenset(out)


def _extension_generators(gens, h, child_gaps):
    """Generators of S plus {h}, from those of S; h itself always is one."""
    out = [h]
    for a in gens:
        q = tuple(map(sub, a, h))
        if min(q) >= 0 and any(q) and q not in child_gaps:
            continue  # a = h + q now splits
        out.append(a)
    return frozenset(out)


def validate(gaps, d: int) -> GapSemigroup:
    """Build a semigroup after checking that the complement is closed.

    For each gap h and each split h = a + b into nonzero parts, a or b must
    again be a gap; the first violation is reported with its parts.
    """
    S = GapSemigroup(d, gaps)
    H = S.gaps
    for h in sorted(H):
        for a in itertools.product(*(range(c + 1) for c in h)):
            if not any(a) or a == h:
                continue
            if a in H:
                continue
            b = tuple(map(sub, h, a))
            if b not in H:
                raise NotAMonoid(h, a, b)
    return S


def contains(S: GapSemigroup, x: Point) -> bool:
    """Membership test for a point of the ambient N^d."""
    x = tuple(x)
    if len(x) != S.dim:
        raise ValueError(f"point {x} does not have dimension {S.dim}")
    if min(x, default=0) < 0:
        return False
    return x not in S.gaps


def minimal_generators(S: GapSemigroup) -> frozenset:
    """The unique minimal generating set: nonzero elements with no split."""
    return S.generators


def pseudo_frobenius(S: GapSemigroup) -> frozenset:
    """Gaps h with h + s in S for every nonzero s of S.

    Probing the minimal generators suffices: any s splits into generators
    and h + s lands back in S one summand at a time.
    """
    H = S.gaps
    gens = S.generators
    return frozenset(
        h for h in H if all(tuple(map(add, h, a)) not in H for a in gens))


def special_gaps(S: GapSemigroup) -> frozenset:
    """Pseudo-Frobenius gaps h with 2h in S: exactly the gaps whose
    adjunction keeps the complement closed."""
    H = S.gaps
    return frozenset(h for h in pseudo_frobenius(S)
                     if tuple(map(add, h, h)) not in H)


def extend(S: GapSemigroup, h: Point) -> GapSemigroup:
    """S with the special gap h adjoined."""
    h = tuple(h)
    if h not in S.gaps:
        raise NotAGap(f"{h} is not a gap of {S!r}")
    if h not in special_gaps(S):
        raise NotSpecialGap(
            f"adjoining {h} would leave the complement of the gaps unclosed")
    child_gaps = S.gaps - {h}
    gens = _extension_generators(S.generators, h, child_gaps)
    return GapSemigroup(S.dim, child_gaps, generators=gens, _trusted=True)


def remove_generator(S: GapSemigroup, n: Point) -> GapSemigroup:
    """S without the minimal generator n."""
    n = tuple(n)
    if n not in S.generators:
        raise NotMinimalGenerator(f"{n} is not a minimal generator of {S!r}")
    child_gaps = S.gaps | {n}
    gens = _removal_generators(S.generators, n, child_gaps)
    return GapSemigroup(S.dim, child_gaps, generators=gens, _trusted=True)


def frobenius_element(S: GapSemigroup, order: OrderSpec) -> Optional[Point]:
    """The largest gap under the order, or None when there are no gaps."""
    if not S.gaps:
        return None
    return max(S.gaps, key=order.key)


def multiplicity(S: GapSemigroup, order: OrderSpec) -> Point:
    """The least minimal generator under the order."""
    return min(S.generators, key=order.key)


def u_set(S: GapSemigroup, order: OrderSpec) -> frozenset:
    """Minimal generators beyond the Frobenius element.

    Removing one of these keeps every gap below the new maximum, so they
    are exactly the admissible tree moves.  With no gaps at all, every
    generator qualifies.
    """
    F = frobenius_element(S, order)
    if F is None:
        return S.generators
    key = order.key
    fk = key(F)
    return frozenset(a for a in S.generators if key(a) > fk)


def apery_in_box(S: GapSemigroup, n: Point, box) -> frozenset:
    """Elements x of S within the box such that x - n falls outside S.

    The box bounds each coordinate inclusively; the untruncated set is
    infinite for d >= 2, hence the window.
    """
    n = tuple(n)
    if len(n) != S.dim or not any(n) or min(n) < 0 or n in S.gaps:
        raise ValueError(f"{n} must be a nonzero element of the monoid")
    H = S.gaps
    out = []
    for x in itertools.product(*(range(b + 1) for b in box)):
        if x in H:
            continue
        q = tuple(map(sub, x, n))
        if min(q) < 0 or q in H:
            out.append(x)
    return frozenset(out)


def gap_span_dimension(S: GapSemigroup) -> int:
    """Number of coordinate axes touched by at least one gap."""
    touched = set()
    for h in S.gaps:
        for s, c in enumerate(h):
            if c:
                touched.add(s)
    return len(touched)
