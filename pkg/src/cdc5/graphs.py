"""Multigraph core: dense edge identifiers, bit-mask edge sets, graph6 I/O,
bridges, components, and suppression of degree-2 vertices.

Vertices are 0..n-1.  Edges carry dense identifiers 0..m-1 in construction
order and are unordered pairs; loops and parallel edges are allowed
everywhere except graph6 output.  Every set-like result is an EdgeSet (an
integer bit mask over edge identifiers), so the GF(2) algebra downstream is
plain integer XOR.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import Graph6Error, InvariantViolationError, PreconditionError, UnsupportedFormatError


class MultiGraph:
    """Immutable multigraph over vertices 0..n-1 with a dense edge list."""

    __slots__ = ("n", "_edges", "_incident", "_degrees", "_vertex_masks", "_loop_mask")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        edge_list = tuple((int(u), int(v)) for u, v in edges)
        incident = [[] for _ in range(n)]
        degrees = [0] * n
        vertex_masks = [0] * n
        loop_mask = 0
        for e, (u, v) in enumerate(edge_list):
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {e} endpoint out of range: ({u}, {v})")
            incident[u].append(e)
            degrees[u] += 1
            vertex_masks[u] |= 1 << e
            if v == u:
                degrees[u] += 1
                loop_mask |= 1 << e
            else:
                incident[v].append(e)
                degrees[v] += 1
                vertex_masks[v] |= 1 << e
        self.n = n
        self._edges = edge_list
        self._incident = tuple(tuple(x) for x in incident)
        self._degrees = tuple(degrees)
        self._vertex_masks = tuple(vertex_masks)
        self._loop_mask = loop_mask

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def endpoints(self, e: int) -> tuple[int, int]:
        return self._edges[e]

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge identifiers at v; a loop appears once (but counts 2 toward degree)."""
        return self._incident[v]

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def vertex_mask(self, v: int) -> int:
        return self._vertex_masks[v]

    def loop_mask(self) -> int:
        return self._loop_mask

    def is_loop(self, e: int) -> bool:
        u, v = self._edges[e]
        return u == v

    def other_end(self, e: int, v: int) -> int:
        u, w = self._edges[e]
        return w if u == v else u

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self._degrees)

    def is_simple(self) -> bool:
        if self._loop_mask:
            return False
        seen = set()
        for u, v in self._edges:
            key = (u, v) if u < v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


class EdgeSet:
    """Subset of a host graph's edges, stored as an integer bit mask."""

    __slots__ = ("host", "mask")

    def __init__(self, host: MultiGraph, mask: int = 0):
        if mask < 0 or mask >> host.m:
            raise ValueError(f"mask {mask:#x} outside host edge range (m={host.m})")
        self.host = host
        self.mask = mask

    @classmethod
    def of(cls, host: MultiGraph, ids: Iterable[int]) -> "EdgeSet":
        mask = 0
        for e in ids:
            if not 0 <= e < host.m:
                raise ValueError(f"edge id {e} out of range (m={host.m})")
            mask |= 1 << e
        return cls(host, mask)

    @classmethod
    def empty(cls, host: MultiGraph) -> "EdgeSet":
        return cls(host, 0)

    @classmethod
    def full(cls, host: MultiGraph) -> "EdgeSet":
        return cls(host, (1 << host.m) - 1)

    def _check_host(self, other: "EdgeSet") -> None:
        if self.host is not other.host:
            raise ValueError("EdgeSet operands belong to different host graphs")

    def __or__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_host(other)
        return EdgeSet(self.host, self.mask | other.mask)

    def __and__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_host(other)
        return EdgeSet(self.host, self.mask & other.mask)

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_host(other)
        return EdgeSet(self.host, self.mask ^ other.mask)

    def __sub__(self, other: "EdgeSet") -> "EdgeSet":
        self._check_host(other)
        return EdgeSet(self.host, self.mask & ~other.mask)

    def __le__(self, other: "EdgeSet") -> bool:
        self._check_host(other)
        return self.mask & ~other.mask == 0

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.host.m and self.mask >> e & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, EdgeSet)
            and self.host is other.host
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((id(self.host), self.mask))

    def ids(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"EdgeSet({list(self)})"


def is_matching(g: MultiGraph, s: EdgeSet) -> bool:
    """True iff s contains no loop and no two of its edges share an endpoint."""
    if s.host is not g:
        raise ValueError("EdgeSet does not belong to the given graph")
    if s.mask & g.loop_mask():
        return False
    return all((s.mask & vm).bit_count() <= 1 for vm in g._vertex_masks)


# ---------------------------------------------------------------------------
# graph6 (short form, n <= 62)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> MultiGraph:
    """Parse one graph6 line into a MultiGraph.

    Edge identifiers follow the column-major upper-triangle order of the
    encoding: (0,1), (0,2), (1,2), (0,3), ...  Only the short form is
    accepted (n <= 62); malformed input raises Graph6Error with the byte
    offset of the problem.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII byte in graph6 text", offset=exc.start) from None
    if not data:
        raise Graph6Error("empty graph6 string", offset=0)
    head = data[0]
    if head == 126:
        raise UnsupportedFormatError("long-form graph6 (n > 62) is not supported")
    if not 63 <= head <= 125:
        raise Graph6Error(f"header byte {head} outside graph6 range", offset=0)
    n = head - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error(
            f"expected {need} payload bytes for n={n}, got {len(data) - 1}",
            offset=min(len(data), need + 1),
        )
    stream = 0
    for i in range(1, len(data)):
        val = data[i] - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"payload byte {data[i]} outside graph6 range", offset=i)
        stream = stream << 6 | val
    pad = 6 * need - nbits
    if pad and stream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", offset=len(data) - 1)
    edges = []
    bit = 6 * need - 1
    for v in range(1, n):
        for u in range(v):
            if stream >> bit & 1:
                edges.append((u, v))
            bit -= 1
    return MultiGraph(n, edges)


def write_graph6(g: MultiGraph) -> str:
    """Encode a simple graph with n <= 62 as a graph6 line.

    parse_graph6(write_graph6(g)) recovers g up to edge-id order, and
    write_graph6(parse_graph6(s)) == s byte for byte.
    """
    if g.n > 62:
        raise UnsupportedFormatError(f"graph6 short form needs n <= 62, got {g.n}")
    if not g.is_simple():
        raise UnsupportedFormatError("graph6 cannot represent loops or parallel edges")
    present = set()
    for u, v in g.edges:
        present.add((u, v) if u < v else (v, u))
    nbits = g.n * (g.n - 1) // 2
    need = (nbits + 5) // 6
    stream = 0
    for v in range(1, g.n):
        for u in range(v):
            stream = stream << 1 | ((u, v) in present)
    stream <<= 6 * need - nbits
    out = [g.n + 63]
    for k in range(need - 1, -1, -1):
        out.append((stream >> 6 * k & 63) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# structural operations


@dataclass(frozen=True)
class EdgeDeletion:
    """Result of delete_edges: the reduced graph plus both relabeling maps."""

    graph: MultiGraph
    old_to_new: tuple[Optional[int], ...]
    kept: tuple[int, ...]  # new edge id -> old edge id

    def to_new(self, s: EdgeSet) -> EdgeSet:
        """Translate an edge set of the original graph; members must survive."""
        mask = 0
        for e in s:
            new = self.old_to_new[e]
            if new is None:
                raise ValueError(f"edge {e} was deleted and cannot be translated")
            mask |= 1 << new
        return EdgeSet(self.graph, mask)

    def to_old(self, host: MultiGraph, s: EdgeSet) -> EdgeSet:
        """Translate an edge set of the reduced graph back to the original."""
        mask = 0
        for e in s:
            mask |= 1 << self.kept[e]
        return EdgeSet(host, mask)


def delete_edges(g: MultiGraph, drop: EdgeSet) -> EdgeDeletion:
    """Remove the given edges, keeping all vertices; ids are renumbered densely."""
    if drop.host is not g:
        raise ValueError("EdgeSet does not belong to the given graph")
    old_to_new: list[Optional[int]] = [None] * g.m
    kept = []
    new_edges = []
    for e, (u, v) in enumerate(g.edges):
        if e in drop:
            continue
        old_to_new[e] = len(new_edges)
        kept.append(e)
        new_edges.append((u, v))
    return EdgeDeletion(MultiGraph(g.n, new_edges), tuple(old_to_new), tuple(kept))


def bridges(g: MultiGraph) -> EdgeSet:
    """All bridges of g, found with one depth-first lowlink pass.

    Loops are never bridges, and a parallel copy of the tree edge acts as a
    back edge, so only the entering edge identifier is skipped at each step.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    out = 0
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, ein, i = frame
            inc = g.incident(v)
            if i < len(inc):
                frame[2] += 1
                e = inc[i]
                if e == ein or g.is_loop(e):
                    continue
                x = g.other_end(e, v)
                if disc[x] == -1:
                    disc[x] = low[x] = timer
                    timer += 1
                    stack.append([x, e, 0])
                elif disc[x] < low[v]:
                    low[v] = disc[x]
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] > disc[p]:
                        out |= 1 << ein
    return EdgeSet(g, out)


def components(g: MultiGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = [root]
        while queue:
            v = queue.pop()
            for e in g.incident(v):
                x = g.other_end(e, v)
                if not seen[x]:
                    seen[x] = True
                    comp.append(x)
                    queue.append(x)
        out.append(sorted(comp))
    return out


@dataclass(frozen=True)
class SuppressionMap:
    """Result of suppress_degree2.

    ``path_of[e]`` lists, in walk order, the original edges that were fused
    into suppressed edge e.  Components consisting solely of degree-2
    vertices cannot be suppressed to anything 3-regular and are returned
    separately in ``circuit_components`` (edge sets over the original graph).
    The suppressed edges' paths plus the circuit components partition the
    original edge set.
    """

    suppressed_graph: MultiGraph
    path_of: tuple[tuple[int, ...], ...]
    circuit_components: tuple[EdgeSet, ...]
    vertex_map: tuple[int, ...]  # suppressed vertex id -> original vertex id


def suppress_degree2(g: MultiGraph) -> SuppressionMap:
    """Contract every maximal path through degree-2 vertices to a single edge.

    Requires every degree to be 2 or 3.  The output graph is 3-regular; it
    may contain loops (a cycle attached at one degree-3 vertex) or parallel
    edges (two degree-3 vertices joined by several paths).
    """
    for v in range(g.n):
        if g.degree(v) not in (2, 3):
            raise PreconditionError(
                f"vertex {v} has degree {g.degree(v)}; suppression needs degrees 2 or 3"
            )
    keep = [v for v in range(g.n) if g.degree(v) == 3]
    new_id = {v: i for i, v in enumerate(keep)}
    used = bytearray(g.m)
    new_edges = []
    paths = []
    for v in keep:
        for e in g.incident(v):
            if used[e]:
                continue
            used[e] = 1
            if g.is_loop(e):
                new_edges.append((new_id[v], new_id[v]))
                paths.append((e,))
                continue
            path = [e]
            cur = g.other_end(e, v)
            while g.degree(cur) == 2:
                nxt = next(f for f in g.incident(cur) if f != path[-1])
                used[nxt] = 1
                path.append(nxt)
                cur = g.other_end(nxt, cur)
            new_edges.append((new_id[v], new_id[cur]))
            paths.append(tuple(path))
    circuits = []
    for comp in components(g):
        if all(g.degree(v) == 2 for v in comp):
            mask = 0
            for v in comp:
                mask |= g.vertex_mask(v)
            circuits.append(EdgeSet(g, mask))
    covered = 0
    for path in paths:
        for e in path:
            covered |= 1 << e
    for c in circuits:
        covered |= c.mask
    if covered != (1 << g.m) - 1 or sum(len(p) for p in paths) + sum(
        len(c) for c in circuits
    ) != g.m:
        raise InvariantViolationError("suppression paths and circuits do not partition the edges")
    suppressed = MultiGraph(len(keep), new_edges)
    if not suppressed.is_cubic():
        raise InvariantViolationError("suppressed graph is not 3-regular")
    return SuppressionMap(suppressed, tuple(paths), tuple(circuits), tuple(keep))


def petersen_graph() -> MultiGraph:
    """The Petersen graph in its canonical labeling: outer cycle 0..4
    (i ~ i+1 mod 5), spokes i ~ i+5, inner edges 5+i ~ 5+((i+2) mod 5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, edges)
