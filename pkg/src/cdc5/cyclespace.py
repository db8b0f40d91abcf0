"""GF(2) cycle-space algebra over edge-set bit masks.

The cycle space of a graph is spanned by the fundamental cycles of any
spanning forest; its elements are exactly the even subgraphs (every vertex
incident to 0 or 2 member edges on the subcubic hosts this package works
with).  Loops are excluded throughout: a loop is not part of any 2-regular
subgraph, so loop edges never appear in basis vectors and are implicitly
forced to zero by solve_affine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .errors import CapacityError
from .graphs import EdgeSet, MultiGraph


@dataclass(frozen=True)
class CycleBasis:
    """Fundamental-cycle basis: vectors[i] is the cycle closed by chords[i]."""

    host: MultiGraph
    vectors: tuple[EdgeSet, ...]
    chords: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


def cycle_space_basis(g: MultiGraph) -> CycleBasis:
    """Basis of the cycle space from a lowest-edge-id spanning forest.

    Edges are scanned in ascending id; an edge joining two components
    becomes a tree edge, every other non-loop edge is a chord whose
    fundamental cycle (chord plus tree path) is a basis vector.  On
    loop-free hosts dim = m - n + #components.
    """
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    tree_edges = []
    chords = []
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            chords.append(e)
        else:
            parent[ru] = rv
            tree_edges.append(e)

    # path_mask[v]: edges on the forest path from v to its component root
    adj = [[] for _ in range(g.n)]
    for e in tree_edges:
        u, v = g.endpoints(e)
        adj[u].append((e, v))
        adj[v].append((e, u))
    path_mask = [None] * g.n
    for root in range(g.n):
        if path_mask[root] is not None:
            continue
        path_mask[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for e, w in adj[v]:
                if path_mask[w] is None:
                    path_mask[w] = path_mask[v] ^ (1 << e)
                    queue.append(w)

    vectors = []
    for e in chords:
        u, v = g.endpoints(e)
        vectors.append(EdgeSet(g, (1 << e) ^ path_mask[u] ^ path_mask[v]))
    return CycleBasis(g, tuple(vectors), tuple(chords))


def is_even_subgraph(g: MultiGraph, s: EdgeSet) -> bool:
    """True iff s has no loop and every vertex meets 0 or 2 of its edges."""
    if s.host is not g:
        raise ValueError("EdgeSet does not belong to the given graph")
    if s.mask & g.loop_mask():
        return False
    for v in range(g.n):
        if (s.mask & g.vertex_mask(v)).bit_count() not in (0, 2):
            return False
    return True


def edge_set_connected(g: MultiGraph, s: EdgeSet) -> bool:
    """True iff the member edges induce a connected subgraph (vacuously for ∅)."""
    if not s.mask:
        return True
    first = (s.mask & -s.mask).bit_length() - 1
    root = g.endpoints(first)[0]
    seen_edges = 0
    seen_vertices = {root}
    queue = [root]
    while queue:
        v = queue.pop()
        for e in g.incident(v):
            if e not in s:
                continue
            if not seen_edges >> e & 1:
                seen_edges |= 1 << e
            w = g.other_end(e, v)
            if w not in seen_vertices:
                seen_vertices.add(w)
                queue.append(w)
    return seen_edges == s.mask


def is_circuit(g: MultiGraph, s: EdgeSet) -> bool:
    """True iff s is a nonempty connected even subgraph."""
    return bool(s.mask) and is_even_subgraph(g, s) and edge_set_connected(g, s)


def enumerate_even_subgraphs(basis: CycleBasis, guard: int = 24) -> Iterator[EdgeSet]:
    """Yield all 2^dim cycle-space elements.

    Order is deterministic: Gray-code over the basis coefficients, so
    element k differs from element k-1 by the basis vector indexed by the
    lowest set bit of k.  The empty set comes first.
    """
    if basis.dim > guard:
        raise CapacityError(
            f"cycle-space dimension {basis.dim} exceeds enumeration guard {guard}"
        )
    host = basis.host
    masks = [v.mask for v in basis.vectors]
    cur = 0
    yield EdgeSet(host, 0)
    for k in range(1, 1 << basis.dim):
        cur ^= masks[(k & -k).bit_length() - 1]
        yield EdgeSet(host, cur)


def enumerate_circuits(g: MultiGraph, guard: int = 24) -> list[EdgeSet]:
    """All circuits of g, sorted by cardinality then ascending edge-id tuple."""
    basis = cycle_space_basis(g)
    out = [
        s
        for s in enumerate_even_subgraphs(basis, guard)
        if s.mask and is_even_subgraph(g, s) and edge_set_connected(g, s)
    ]
    out.sort(key=lambda s: (len(s), s.ids()))
    return out


def sym_diff(sets: Sequence[EdgeSet]) -> EdgeSet:
    """GF(2) sum (symmetric difference) of the given edge sets."""
    if not sets:
        raise ValueError("sym_diff needs at least one edge set")
    host = sets[0].host
    mask = 0
    for s in sets:
        if s.host is not host:
            raise ValueError("EdgeSet operands belong to different host graphs")
        mask ^= s.mask
    return EdgeSet(host, mask)


def coordinates_of(basis: CycleBasis, s: EdgeSet) -> Optional[int]:
    """Coefficient mask expressing s over the basis, or None if s is not in
    the span.  With a fundamental-cycle basis the coefficient of a vector is
    simply whether s contains its chord."""
    if s.host is not basis.host:
        raise ValueError("EdgeSet does not belong to the basis host")
    coeffs = 0
    combo = 0
    for i, e in enumerate(basis.chords):
        if e in s:
            coeffs |= 1 << i
            combo ^= basis.vectors[i].mask
    return coeffs if combo == s.mask else None


@dataclass(frozen=True)
class AffineSolution:
    """One solution of an affine containment problem plus its free part.

    ``particular`` and the ``kernel`` vectors are coefficient masks over the
    basis; the full solution set is particular XOR any kernel combination,
    so the solution-space dimension is len(kernel).
    """

    basis: CycleBasis
    particular: int
    kernel: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    def combine(self, coeffs: int) -> EdgeSet:
        mask = 0
        for i, vec in enumerate(self.basis.vectors):
            if coeffs >> i & 1:
                mask ^= vec.mask
        return EdgeSet(self.basis.host, mask)

    def particular_set(self) -> EdgeSet:
        return self.combine(self.particular)

    def solution(self, k: int) -> EdgeSet:
        """k-th solution: particular XOR the kernel combination selected by
        the bits of k (0 <= k < 2**dimension)."""
        coeffs = self.particular
        for i, vec in enumerate(self.kernel):
            if k >> i & 1:
                coeffs ^= vec
        return self.combine(coeffs)


def solve_affine(
    basis: CycleBasis, forced_one: EdgeSet, forced_zero: EdgeSet
) -> Optional[AffineSolution]:
    """Find a cycle-space element containing every forced_one edge and no
    forced_zero edge, or None when the constraints are infeasible.

    Deterministic: constraint rows are consumed in ascending edge id, each
    pivot is the lowest available coefficient index, and the particular
    solution zeroes all free coefficients.
    """
    host = basis.host
    if forced_one.host is not host or forced_zero.host is not host:
        raise ValueError("constraint sets must live on the basis host")
    if forced_one.mask & forced_zero.mask:
        return None
    # column e of the coefficient matrix: which basis vectors contain edge e
    rows = []
    for e in sorted((forced_one | forced_zero).ids()):
        lhs = 0
        for i, vec in enumerate(basis.vectors):
            if e in vec:
                lhs |= 1 << i
        rows.append((lhs, 1 if e in forced_one else 0))

    pivots: dict[int, tuple[int, int]] = {}
    for lhs, rhs in rows:
        while lhs:
            v = (lhs & -lhs).bit_length() - 1
            if v not in pivots:
                break
            plhs, prhs = pivots[v]
            lhs ^= plhs
            rhs ^= prhs
        if lhs == 0:
            if rhs:
                return None
            continue
        pivots[(lhs & -lhs).bit_length() - 1] = (lhs, rhs)

    particular = 0
    for v in sorted(pivots, reverse=True):
        lhs, rhs = pivots[v]
        if rhs ^ ((lhs & particular).bit_count() & 1):
            particular |= 1 << v
    kernel = []
    for f in range(basis.dim):
        if f in pivots:
            continue
        vec = 1 << f
        for v in sorted(pivots, reverse=True):
            lhs, _ = pivots[v]
            if (lhs & vec).bit_count() & 1:
                vec |= 1 << v
        kernel.append(vec)
    return AffineSolution(basis, particular, tuple(kernel))
