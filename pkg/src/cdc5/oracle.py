"""Exhaustive double-cover search, used as an independent check on the
constructive engine.  Exponential in the cycle-space dimension; guarded."""

from __future__ import annotations

from typing import Optional

from .cover import Cdc
from .cyclespace import cycle_space_basis, enumerate_even_subgraphs
from .errors import CapacityError
from .graphs import EdgeSet, MultiGraph


def brute_force_cdc(
    g: MultiGraph, c0: EdgeSet, max_elements: int = 5, guard: int = 7
) -> Optional[Cdc]:
    """Exhaustively search for a CDC of at most max_elements nonempty even
    subgraphs, at least one containing c0.

    Candidates are all nonempty even subgraphs ordered by (size, edge ids);
    covers are multisets explored as nondecreasing index tuples in
    lexicographic order, so the first hit is the lexicographically least
    success.  Pruned by per-edge coverage bounds only, so the outcome is an
    independent ground truth for the constructive search.
    """
    basis = cycle_space_basis(g)
    if basis.dim > guard:
        raise CapacityError(f"cycle-space dimension {basis.dim} exceeds guard {guard}")
    if c0.host is not g:
        raise ValueError("c0 does not belong to the given graph")
    candidates = sorted(
        (s for s in enumerate_even_subgraphs(basis, guard) if s),
        key=lambda s: (len(s), s.ids()),
    )
    masks = [s.mask for s in candidates]
    full = EdgeSet.full(g).mask

    # Highest candidate index covering each edge: once the search position
    # passes it, a still-deficient edge can never be completed.
    last_cover = [-1] * g.m
    for i, mask in enumerate(masks):
        m = mask
        while m:
            low = m & -m
            m ^= low
            last_cover[low.bit_length() - 1] = i
    last_superset = -1
    for i, mask in enumerate(masks):
        if mask & c0.mask == c0.mask:
            last_superset = i

    chosen: list[int] = []

    def deficient_limit(once: int, none: int) -> int:
        """Max index still usable, or -1 when some edge is already dead."""
        limit = len(masks) - 1
        need = once | none
        while need:
            low = need & -need
            need ^= low
            limit = min(limit, last_cover[low.bit_length() - 1])
            if limit < 0:
                return -1
        return limit

    def search(start: int, once: int, twice: int, have_superset: bool) -> bool:
        # once/twice: masks of edges covered exactly one/two times so far.
        if twice == full and have_superset:
            return True
        slots = max_elements - len(chosen)
        if slots == 0:
            return False
        none_mask = full & ~(once | twice)
        if none_mask and slots < 2:
            return False
        limit = deficient_limit(once, none_mask)
        if limit < start:
            return False
        if not have_superset and last_superset < start:
            return False
        for j in range(start, limit + 1):
            mask = masks[j]
            if mask & twice:
                continue
            if not have_superset and slots == 1 and mask & c0.mask != c0.mask:
                continue
            new_twice = twice | (once & mask)
            new_once = (once | mask) & ~new_twice
            chosen.append(j)
            if search(
                j, new_once, new_twice, have_superset or mask & c0.mask == c0.mask
            ):
                return True
            chosen.pop()
        return False

    trivially_contained = c0.mask == 0
    if full == 0 and trivially_contained:
        return Cdc(g, ())
    if search(0, 0, 0, trivially_contained):
        return Cdc(g, tuple(candidates[j] for j in chosen))
    return None
