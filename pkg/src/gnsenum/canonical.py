"""Canonical forms of gap semigroups under coordinate permutations.

Orbits are compared through profiles: the gap set sorted ascending under
the active order, compared position by position.  The orbit scan only ever
tries permutations that move some unit gap onto the least basis vector,
because once a profile starts with the least basis vector, no profile
starting elsewhere can undercut it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (EQUAL, GREATER, LESS, OrderSpec, Permutation, Point,
                   basis_index, min_basis_point, slot_sources,
                   slot_sources_by_last)
from .semigroup import GapSemigroup, NotMinimalGenerator


class GenusMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RepVerdict:
    """Outcome of a representative test.

    witness carries a permutation that strictly lowers the profile whenever
    the verdict is negative; filter_used names the pipeline stage that
    decided.
    """

    is_representative: bool
    witness: Optional[Permutation]
    filter_used: str


def permute_gns(perm: Permutation, S: GapSemigroup) -> GapSemigroup:
    """Apply the permutation to every gap (and to cached generators)."""
    if perm.dim != S.dim:
        raise ValueError("dimension mismatch")
    gaps = frozenset(perm.apply(h) for h in S.gaps)
    gens = S._gens
    if gens is not None:
        gens = frozenset(perm.apply(a) for a in gens)
    return GapSemigroup(S.dim, gaps, generators=gens, _trusted=True)


def _profile(gaps, key):
    return sorted(map(key, gaps))


def compare_R(S: GapSemigroup, T: GapSemigroup, order: OrderSpec) -> int:
    """Compare gap sets as sorted sequences at the first differing slot."""
    if S.dim != T.dim:
        raise ValueError("dimension mismatch")
    if S.genus != T.genus:
        raise GenusMismatch(f"genus {S.genus} vs {T.genus}")
    a = _profile(S.gaps, order.key)
    b = _profile(T.gaps, order.key)
    if a < b:
        return LESS
    if a > b:
        return GREATER
    return EQUAL


@lru_cache(maxsize=None)
def _orbit_minimal(x: Point, order: OrderSpec) -> bool:
    """Does x come first in its own coordinate orbit?"""
    key = order.key
    kx = key(x)
    return all(kx <= key(p) for p in itertools.permutations(x))


def _unit_slots(gaps):
    """Tuple slots carrying a unit-vector gap, sorted."""
    return sorted(h.index(1) for h in gaps if sum(h) == 1)


def _rep_scan(gaps, d, key, self_profile):
    """First rearrangement with a strictly smaller profile, as a slot map.

    Assumes the profile already starts at the least basis vector, so only
    maps with src[d-1] on a unit-gap slot can compete.
    """
    ident = tuple(range(d))
    groups = slot_sources_by_last(d)
    for s in _unit_slots(gaps):
        for src in groups[s]:
            if src == ident:
                continue
            prof = sorted(key(tuple(h[t] for t in src)) for h in gaps)
            if prof < self_profile:
                return src
    return None


def _graded_unit_defect(gaps, d):
    """For one-graded orders: basis indices of unit gaps, if not an initial
    segment 1..r; None when they are."""
    idx = sorted(basis_index(h) for h in gaps if sum(h) == 1)
    if idx == list(range(1, len(idx) + 1)):
        return None
    return idx


def _gapset_is_representative(gaps, d, order) -> bool:
    """Representative test on a bare gap set, without witness bookkeeping."""
    if not gaps:
        return True
    key = order.key
    if min(gaps, key=key) != min_basis_point(d, order):
        return False
    if order.one_graded and _graded_unit_defect(gaps, d) is not None:
        return False
    return _rep_scan(gaps, d, key, _profile(gaps, key)) is None


def is_representative(S: GapSemigroup, order: OrderSpec) -> RepVerdict:
    """Decide orbit minimality, cheapest filter first.

    Pipeline: the minimum-gap test (the least gap of a representative must
    be the least basis vector, and it is always a basis vector since any
    other point splits into smaller ones), then for one-graded orders the
    unit-gap prefix test, then the pruned orbit scan.
    """
    d = S.dim
    gaps = S.gaps
    if not gaps:
        return RepVerdict(True, None, "full-orbit-scan")
    key = order.key
    e1 = min_basis_point(d, order)
    mg = min(gaps, key=key)
    if mg != e1:
        # swapping the offending basis gap down strictly lowers slot one
        witness = Permutation.transposition(d, basis_index(e1), basis_index(mg))
        return RepVerdict(False, witness, "min-gap-lemma")
    if order.one_graded:
        idx = _graded_unit_defect(gaps, d)
        if idx is not None:
            # push the unit gaps onto 1..r; under a one-graded order they
            # fill the first profile slots, so the first defect decides
            images = {j: k for k, j in enumerate(idx, start=1)}
            free = [t for t in range(1, d + 1) if t not in set(images.values())]
            rest = [i for i in range(1, d + 1) if i not in images]
            images.update(zip(rest, free))
            witness = Permutation(images[i] for i in range(1, d + 1))
            return RepVerdict(False, witness, "graded-filter")
    src = _rep_scan(gaps, d, key, _profile(gaps, key))
    if src is not None:
        return RepVerdict(False, Permutation.from_slot_source(src), "full-orbit-scan")
    return RepVerdict(True, None, "full-orbit-scan")


def representative(S: GapSemigroup, order: OrderSpec) -> GapSemigroup:
    """The orbit's least element under the profile order."""
    d = S.dim
    gaps = S.gaps
    if not gaps:
        return S
    key = order.key
    best_prof = _profile(gaps, key)
    best_src = None
    ident = tuple(range(d))
    groups = slot_sources_by_last(d)
    # only maps putting a unit gap first can beat the identity baseline
    for s in _unit_slots(gaps):
        for src in groups[s]:
            if src == ident:
                continue
            prof = sorted(key(tuple(h[t] for t in src)) for h in gaps)
            if prof < best_prof:
                best_prof = prof
                best_src = src
    if best_src is None:
        return S
    return permute_gns(Permutation.from_slot_source(best_src), S)


def safe_child_generator(S: GapSemigroup, n: Point, order: OrderSpec) -> bool:
    """True when n comes first in its own orbit, in which case removing it
    from the representative S is guaranteed to yield a representative."""
    n = tuple(n)
    if n not in S.generators:
        raise NotMinimalGenerator(f"{n} is not a minimal generator of {S!r}")
    return _orbit_minimal(n, order)


def is_equivariant(S: GapSemigroup) -> bool:
    """Invariance under every coordinate permutation, via adjacent swaps."""
    gaps = S.gaps
    for s in range(S.dim - 1):
        for h in gaps:
            if h[s] != h[s + 1]:
                w = list(h)
                w[s], w[s + 1] = w[s + 1], w[s]
                if tuple(w) not in gaps:
                    return False
    return True


def isomorphism_between(S: GapSemigroup, T: GapSemigroup) -> Optional[Permutation]:
    """A permutation carrying S onto T, or None; identity tried first."""
    if S.dim != T.dim:
        raise ValueError("dimension mismatch")
    if S.genus != T.genus:
        return None
    tg = T.gaps
    for src in slot_sources(S.dim):
        if all(tuple(h[t] for t in src) in tg for h in S.gaps):
            return Permutation.from_slot_source(src)
    return None


def orbit_size(S: GapSemigroup) -> int:
    """Distinct gap sets among all coordinate rearrangements."""
    seen = set()
    for src in slot_sources(S.dim):
        seen.add(frozenset(tuple(h[t] for t in src) for h in S.gaps))
    return len(seen)
