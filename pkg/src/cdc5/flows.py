"""Nowhere-zero 4-flows over the Klein four-group and proper 3-edge-colorings.

Flow values are 1, 2, 3 (the nonzero elements 01, 10, 11 of Z2 x Z2) and the
group operation is integer XOR, so conservation at a vertex means the XOR of
the incident values vanishes; edge direction is irrelevant and loops cancel
themselves.  For 3-regular graphs a nowhere-zero 4-flow is the same thing as
a proper 3-edge-coloring, and the general degree-{2,3} case reduces to that
by suppressing degree-2 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InvariantViolationError, PreconditionError
from .graphs import EdgeSet, MultiGraph, SuppressionMap, bridges, components, suppress_degree2

EdgeColoring3 = tuple[int, ...]  # edge id -> color in {0, 1, 2}


@dataclass(frozen=True)
class Flow4:
    """Klein-group edge values, indexed by edge id; 0 never appears in a
    valid nowhere-zero flow."""

    host: MultiGraph
    values: tuple[int, ...]


def three_edge_color(g: MultiGraph) -> Optional[EdgeColoring3]:
    """First proper 3-edge-coloring in backtracking order, or None.

    Deterministic: edges are colored in identifier order and colors tried in
    ascending order, so the first success is a canonical one.  A loop makes
    a proper coloring impossible.  Parallel edges are fine.
    """
    for v in range(g.n):
        if g.degree(v) != 3:
            raise PreconditionError(
                f"vertex {v} has degree {g.degree(v)}; 3-edge-coloring needs a 3-regular graph"
            )
    if g.loop_mask():
        return None
    m = g.m
    colors = [-1] * m
    used = [0] * g.n
    endpoints = g.edges

    def go(e: int) -> bool:
        if e == m:
            return True
        u, v = endpoints[e]
        avail = ~(used[u] | used[v]) & 7
        while avail:
            low = avail & -avail
            avail ^= low
            colors[e] = low.bit_length() - 1
            used[u] |= low
            used[v] |= low
            if go(e + 1):
                return True
            used[u] ^= low
            used[v] ^= low
        colors[e] = -1
        return False

    return tuple(colors) if go(0) else None


def _component_subgraphs(g: MultiGraph):
    """Yield (subgraph, edge id map back to g) per connected component."""
    for comp in components(g):
        vmap = {v: i for i, v in enumerate(comp)}
        edge_ids = []
        edges = []
        for e, (u, v) in enumerate(g.edges):
            if u in vmap:
                edge_ids.append(e)
                edges.append((vmap[u], vmap[v]))
        yield MultiGraph(len(comp), edges), edge_ids


def _check_flow_host(g: MultiGraph) -> None:
    for v in range(g.n):
        if g.degree(v) not in (2, 3):
            raise PreconditionError(
                f"vertex {v} has degree {g.degree(v)}; flow decision needs degrees 2 or 3"
            )


def has_nz4flow(g: MultiGraph) -> bool:
    """Decide whether g (degrees 2 and 3) admits a nowhere-zero 4-flow.

    Chain: a bridge rules it out; components that are plain circuits always
    admit one; everything else is suppressed to a 3-regular graph and decided
    per component by 3-edge-colorability.
    """
    _check_flow_host(g)
    if bridges(g).mask:
        return False
    suppressed = suppress_degree2(g).suppressed_graph
    if suppressed.n == 0:
        return True
    for sub, _ in _component_subgraphs(suppressed):
        if three_edge_color(sub) is None:
            return False
    return True


def find_nz4flow(g: MultiGraph) -> Optional[Flow4]:
    """Construct a nowhere-zero 4-flow (same decision chain as has_nz4flow):
    color the suppressed graph, turn colors into Klein values, lift along the
    suppression paths."""
    _check_flow_host(g)
    if bridges(g).mask:
        return None
    smap = suppress_degree2(g)
    suppressed = smap.suppressed_graph
    colors = [-1] * suppressed.m
    for sub, edge_ids in _component_subgraphs(suppressed):
        col = three_edge_color(sub)
        if col is None:
            return None
        for local, e in enumerate(edge_ids):
            colors[e] = col[local]
    return lift_flow(coloring_to_flow(suppressed, tuple(colors)), smap, g)


def coloring_to_flow(g: MultiGraph, coloring: EdgeColoring3) -> Flow4:
    """Proper 3-edge-coloring to nowhere-zero 4-flow: colors 0, 1, 2 become
    the distinct Klein values 1, 2, 3, which XOR to zero at every vertex of
    a 3-regular graph."""
    if len(coloring) != g.m:
        raise PreconditionError("coloring length does not match the edge count")
    for v in range(g.n):
        seen = 0
        for e in g.incident(v):
            if g.is_loop(e):
                seen = 8  # a loop can never be properly colored
                break
            bit = 1 << coloring[e]
            if seen & bit:
                seen = 8
                break
            seen |= bit
        if seen == 8:
            raise PreconditionError(f"coloring is not proper at vertex {v}")
    return Flow4(g, tuple(c + 1 for c in coloring))


def lift_flow(flow: Flow4, smap: SuppressionMap, g: MultiGraph) -> Flow4:
    """Transport a flow on the suppressed graph back to the original: every
    edge of a suppression path inherits the suppressed edge's value, and
    circuit components get the constant value 1."""
    if flow.host is not smap.suppressed_graph:
        raise ValueError("flow does not live on the suppression's graph")
    values = [0] * g.m
    for e, path in enumerate(smap.path_of):
        for orig in path:
            values[orig] = flow.values[e]
    for circ in smap.circuit_components:
        for e in circ:
            values[e] = 1
    lifted = Flow4(g, tuple(values))
    if not verify_flow(g, lifted):
        raise InvariantViolationError("lifted flow fails verification")
    return lifted


def verify_flow(g: MultiGraph, flow: Flow4) -> bool:
    """Check value range and conservation (XOR of non-loop incident values
    vanishes at every vertex; a loop contributes its value twice, i.e. 0)."""
    if flow.host is not g:
        raise ValueError("flow does not belong to the given graph")
    if len(flow.values) != g.m:
        return False
    if any(val not in (1, 2, 3) for val in flow.values):
        return False
    for v in range(g.n):
        acc = 0
        for e in g.incident(v):
            if not g.is_loop(e):
                acc ^= flow.values[e]
        if acc:
            return False
    return True


def cdc_to_flow(g: MultiGraph, elements: Sequence[EdgeSet]) -> Flow4:
    """Turn a CDC with at most 4 elements into a nowhere-zero 4-flow.

    The elements are padded to four with empty sets and assigned the Klein
    values 0, 1, 2, 3 in order; each edge lies in exactly two elements and
    takes the XOR of their values, which is nonzero because the values are
    distinct.
    """
    if len(elements) > 4:
        raise PreconditionError(f"need at most 4 elements, got {len(elements)}")
    counts = [0] * g.m
    for s in elements:
        if s.host is not g:
            raise ValueError("CDC element does not belong to the given graph")
        for e in s:
            counts[e] += 1
    bad = [e for e, c in enumerate(counts) if c != 2]
    if bad:
        raise PreconditionError(f"not a double cover: edges {bad} have wrong coverage")
    values = [0] * g.m
    for value, s in enumerate(elements):
        for e in s:
            values[e] ^= value
    flow = Flow4(g, tuple(values))
    if not verify_flow(g, flow):
        raise InvariantViolationError("flow derived from a CDC fails verification")
    return flow
