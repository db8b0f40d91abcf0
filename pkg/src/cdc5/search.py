"""Search for a ≤5-element cycle double cover containing a prescribed even
subgraph of a cubic graph.

The search space is a pair (C1, C2): C1 runs over the even subgraphs
containing c0 (an affine subspace of the cycle space), C2 over the whole
cycle space with the empty set allowed.  A pair is accepted when
M = C1 ∩ C2 is a matching and G - M still has a nowhere-zero 4-flow; the
cover is then assembled by completing around C1 and C2 on G - M.  Success
is therefore always certified, and a None return means the whole space was
exhausted, a definitive negative.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .certificates import Certificate, build_certificate
from .cover import extend_to_cdc
from .cyclespace import (
    cycle_space_basis,
    enumerate_circuits,
    enumerate_even_subgraphs,
    is_even_subgraph,
    solve_affine,
)
from .errors import CapacityError, PreconditionError
from .flows import has_nz4flow
from .graphs import (
    EdgeSet,
    MultiGraph,
    bridges,
    delete_edges,
    is_matching,
    petersen_graph,
    write_graph6,
)


@dataclass(frozen=True)
class SearchOptions:
    """Capacity guards.  dim_guard bounds the cycle-space dimension (the
    candidate lists grow as 2^dim); max_candidates and budget_ms bound the
    number of (C1, C2) pairs examined and the wall-clock time.  Hitting any
    guard raises CapacityError, which is never conflated with a negative."""

    dim_guard: int = 16
    max_candidates: Optional[int] = None
    budget_ms: Optional[int] = None


class FlowCache:
    """Memoizes has_nz4flow(G - D) per deleted edge set; one instance is
    meant to be shared across all searches on the same host graph."""

    def __init__(self, g: MultiGraph):
        self.g = g
        self._memo: dict[int, bool] = {}

    def minus(self, drop: EdgeSet) -> bool:
        if drop.host is not self.g:
            raise ValueError("edge set does not belong to the cached graph")
        got = self._memo.get(drop.mask)
        if got is None:
            got = has_nz4flow(delete_edges(self.g, drop).graph)
            self._memo[drop.mask] = got
        return got


def _check_search_host(g: MultiGraph) -> None:
    if not g.is_cubic():
        raise PreconditionError("graph must be cubic")
    if bridges(g):
        raise PreconditionError("graph has a bridge, so it has no cycle double cover")


def find_5cdc_containing(
    g: MultiGraph,
    c0: EdgeSet,
    options: Optional[SearchOptions] = None,
    flow_cache: Optional[FlowCache] = None,
) -> Optional[Certificate]:
    """First witness pair in canonical order, assembled and certified.

    C1 candidates are ordered by how much they add to c0, then by edge ids;
    C2 candidates by the size of their intersection with C1 (the empty set
    first, so graphs with a nowhere-zero 4-flow succeed immediately), then
    by position in the canonical even-subgraph list.  The order fixes which
    certificate is produced, never whether one exists.
    """
    opts = options or SearchOptions()
    _check_search_host(g)
    if c0.host is not g:
        raise ValueError("c0 does not belong to the given graph")
    if not is_even_subgraph(g, c0):
        raise PreconditionError("c0 is not an even subgraph")

    started = time.monotonic()
    deadline = None if opts.budget_ms is None else started + opts.budget_ms / 1000.0
    basis = cycle_space_basis(g)
    if basis.dim > opts.dim_guard:
        raise CapacityError(
            f"cycle-space dimension {basis.dim} exceeds guard {opts.dim_guard}"
        )
    cache = flow_cache or FlowCache(g)
    if cache.g is not g:
        raise ValueError("flow cache belongs to a different graph")

    sol = solve_affine(basis, c0, EdgeSet.empty(g))
    if sol is None:
        raise PreconditionError("c0 is not in the cycle space")
    c1_list = sorted(
        (sol.solution(k) for k in range(1 << sol.dimension)),
        key=lambda s: (len(s - c0), s.ids()),
    )
    canonical = sorted(
        enumerate_even_subgraphs(basis, opts.dim_guard), key=lambda s: (len(s), s.ids())
    )

    tried = 0
    for c1 in c1_list:
        order = sorted(range(len(canonical)), key=lambda i: (len(c1 & canonical[i]), i))
        for i in order:
            c2 = canonical[i]
            tried += 1
            if opts.max_candidates is not None and tried > opts.max_candidates:
                raise CapacityError("candidate guard exhausted", candidates_tried=tried - 1)
            if deadline is not None and time.monotonic() > deadline:
                raise CapacityError("time budget exhausted", candidates_tried=tried - 1)
            overlap = c1 & c2
            if len(overlap) * 2 > g.n or not is_matching(g, overlap):
                continue
            if not cache.minus(overlap):
                continue
            covers = [c for c in (c1, c2) if c]
            cdc = extend_to_cdc(g, covers)
            elapsed_ms = int((time.monotonic() - started) * 1000)
            return build_certificate(
                g, c0, c1, c2, overlap, cdc.elements, tried, elapsed_ms
            )
    return None


def has_5cdc(
    g: MultiGraph,
    options: Optional[SearchOptions] = None,
    flow_cache: Optional[FlowCache] = None,
) -> Optional[Certificate]:
    """Unconstrained existence: search with an empty prescribed subgraph."""
    return find_5cdc_containing(g, EdgeSet.empty(g), options, flow_cache)


@dataclass(frozen=True)
class CircuitOutcome:
    circuit: EdgeSet
    outcome: str  # "found" | "none" | "inconclusive"
    certificate: Optional[Certificate]
    detail: str = ""


@dataclass(frozen=True)
class SweepReport:
    host: MultiGraph
    entries: tuple[CircuitOutcome, ...]

    @property
    def found(self) -> int:
        return sum(1 for e in self.entries if e.outcome == "found")

    @property
    def none(self) -> int:
        return sum(1 for e in self.entries if e.outcome == "none")

    @property
    def inconclusive(self) -> int:
        return sum(1 for e in self.entries if e.outcome == "inconclusive")


def circuit_sweep(g: MultiGraph, options: Optional[SearchOptions] = None) -> SweepReport:
    """Run the search for every circuit of g.  A "none" entry would be a
    counterexample to the conjecture that every circuit of a bridgeless
    cubic graph lies in some 5-element cover; "inconclusive" records a
    per-circuit guard hit, never a negative."""
    opts = options or SearchOptions()
    _check_search_host(g)
    cache = FlowCache(g)
    entries = []
    for circuit in enumerate_circuits(g, opts.dim_guard):
        try:
            cert = find_5cdc_containing(g, circuit, opts, cache)
        except CapacityError as exc:
            entries.append(CircuitOutcome(circuit, "inconclusive", None, str(exc)))
            continue
        if cert is None:
            entries.append(
                CircuitOutcome(circuit, "none", None, "search space exhausted")
            )
        else:
            entries.append(CircuitOutcome(circuit, "found", cert))
    return SweepReport(g, tuple(entries))


@dataclass(frozen=True)
class ShortcutEntry:
    circuit: EdgeSet
    partner: Optional[EdgeSet]
    matching: Optional[EdgeSet]
    flowless_skips: tuple[tuple[EdgeSet, EdgeSet], ...]  # (partner, matching) pairs


@dataclass(frozen=True)
class ShortcutReport:
    entries: tuple[ShortcutEntry, ...]
    # Bridgeless-but-flowless pairs with a nonempty matching; empirically
    # this stays empty on the Petersen graph, and anything here is a finding
    # worth reporting, not an error.
    discrepancies: tuple[tuple[EdgeSet, EdgeSet, EdgeSet], ...]

    @property
    def complete(self) -> bool:
        return all(e.partner is not None for e in self.entries)


def petersen_shortcut_check(g: MultiGraph) -> ShortcutReport:
    """Test, on the Petersen graph, the shortcut that bridgelessness of
    G - M already implies the flow condition.

    For every circuit C, partner circuits C' are scanned in canonical order
    for M = C ∩ C' a matching with G - M bridgeless; each such pair is
    cross-validated with has_nz4flow(G - M) instead of trusting the
    shortcut.  Pairs with M = ∅ always fail the flow check here (G itself
    has no nowhere-zero 4-flow) and are recorded as skips; a failing pair
    with M nonempty would be a genuine discrepancy.
    """
    if not g.is_simple() or write_graph6(g) != write_graph6(petersen_graph()):
        raise PreconditionError("graph is not the canonical Petersen graph")
    cache = FlowCache(g)
    circuits = enumerate_circuits(g)
    entries = []
    discrepancies = []
    for c in circuits:
        partner = None
        matching = None
        skips = []
        for other in circuits:
            m_set = c & other
            if not is_matching(g, m_set):
                continue
            if bridges(delete_edges(g, m_set).graph):
                continue
            if cache.minus(m_set):
                partner, matching = other, m_set
                break
            skips.append((other, m_set))
            if m_set:
                discrepancies.append((c, other, m_set))
        entries.append(ShortcutEntry(c, partner, matching, tuple(skips)))
    return ShortcutReport(tuple(entries), tuple(discrepancies))
