"""Cycle double covers: verification, extension, and witness extraction.

A CDC is a multiset of nonempty even subgraphs covering every edge exactly
twice.  The constructions here revolve around one mechanism: if a graph has
a nowhere-zero 4-flow, then any prescribed even subgraph c' sits inside a
double cover by at most four even subgraphs, found by sweeping candidates A
over the cycle space and solving a GF(2) affine system for a partner B so
that {c', A, B, c' ^ A ^ B} covers everything exactly twice.  Extending a
family C1..Ck whose pairwise overlaps form a matching M then reduces to that
mechanism on G - M.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .cyclespace import (
    cycle_space_basis,
    enumerate_even_subgraphs,
    is_even_subgraph,
    solve_affine,
    sym_diff,
)
from .errors import ConditionError, FlowMissingError, InvariantViolationError, PreconditionError
from .flows import cdc_to_flow, has_nz4flow
from .graphs import EdgeSet, MultiGraph, delete_edges, is_matching


@dataclass(frozen=True)
class Cdc:
    """An ordered family of nonempty even subgraphs over a common host.
    Construction functions only return instances that pass verify_cdc."""

    host: MultiGraph
    elements: tuple[EdgeSet, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i: int) -> EdgeSet:
        return self.elements[i]


@dataclass(frozen=True)
class CdcReport:
    """Outcome of verify_cdc; invalidity is data, not an exception."""

    valid: bool
    empty: tuple[int, ...]  # indices of empty elements
    non_even: tuple[int, ...]  # indices failing the even-subgraph check
    coverage: tuple[int, ...]  # per-edge cover counts
    coverage_errors: tuple[int, ...]  # edge ids covered != 2 times


CdcLike = Union[Cdc, Sequence[EdgeSet]]


def _element_seq(s: CdcLike) -> Sequence[EdgeSet]:
    return s.elements if isinstance(s, Cdc) else s


def verify_cdc(g: MultiGraph, s: CdcLike) -> CdcReport:
    """Check the double-cover property: every element a nonempty even
    subgraph, every edge covered exactly twice (repeats count)."""
    elements = _element_seq(s)
    counts = [0] * g.m
    empty = []
    non_even = []
    for i, el in enumerate(elements):
        if el.host is not g:
            raise ValueError("element does not belong to the given graph")
        if not el:
            empty.append(i)
        if not is_even_subgraph(g, el):
            non_even.append(i)
        for e in el:
            counts[e] += 1
    errors = tuple(e for e, c in enumerate(counts) if c != 2)
    valid = not empty and not non_even and not errors
    return CdcReport(valid, tuple(empty), tuple(non_even), tuple(counts), errors)


def contains_element_superset(s: CdcLike, c0: EdgeSet) -> Optional[int]:
    """Least index of an element with c0 as a subset, or None.  The empty
    c0 is contained in the first element (or nothing, if s is empty)."""
    for i, el in enumerate(_element_seq(s)):
        c0._check_host(el)
        if c0 <= el:
            return i
    return None


def four_cdc_containing(g: MultiGraph, c_prime: EdgeSet, guard: int = 24) -> Cdc:
    """Double cover of g by at most 4 even subgraphs, one equal to c_prime
    (which is dropped like any other empty member if it is empty).

    Requires a nowhere-zero 4-flow on g; under that hypothesis a cover
    always exists, so running out of candidates is an internal bug, not a
    negative answer.  Candidates A run over the cycle space in enumeration
    order; the partner B must pick up every edge outside c_prime and A
    (forced in) while avoiding c_prime's overlap with A (forced out), which
    makes each edge land in exactly two of c_prime, A, B, c_prime ^ A ^ B.
    The first feasible A wins and B is the canonical affine solution, so the
    result is deterministic.
    """
    if c_prime.host is not g:
        raise ValueError("c_prime does not belong to the given graph")
    if g.loop_mask():
        raise PreconditionError("a loop lies in no even subgraph, so no double cover exists")
    if not is_even_subgraph(g, c_prime):
        raise PreconditionError("c_prime is not an even subgraph")
    if not has_nz4flow(g):
        raise FlowMissingError("graph has no nowhere-zero 4-flow")
    basis = cycle_space_basis(g)
    full = EdgeSet.full(g)
    for a in enumerate_even_subgraphs(basis, guard):
        sol = solve_affine(basis, full - (c_prime | a), c_prime & a)
        if sol is None:
            continue
        b = sol.particular_set()
        d = c_prime ^ a ^ b
        elements = tuple(x for x in (c_prime, a, b, d) if x)
        cdc = Cdc(g, elements)
        report = verify_cdc(g, cdc)
        if not report.valid:
            raise InvariantViolationError(
                f"constructed cover fails verification: {report}"
            )
        return cdc
    raise InvariantViolationError(
        "no cover found although a nowhere-zero 4-flow exists"
    )


def _matching_conflicts(g: MultiGraph, s: EdgeSet) -> tuple[int, ...]:
    """Edges of s that are loops or share an endpoint with another edge of s."""
    bad = set()
    for e in s:
        if g.is_loop(e):
            bad.add(e)
    for v in range(g.n):
        here = [e for e in g.incident(v) if e in s and not g.is_loop(e)]
        if len(here) > 1:
            bad.update(here)
    return tuple(sorted(bad))


def extend_to_cdc(g: MultiGraph, covers: Sequence[EdgeSet]) -> Cdc:
    """Extend even subgraphs C1..Ck to a double cover of at most k+3
    elements that keeps every Ci as an element.

    Three conditions are enforced, each reported by number on failure:
    1. no edge lies in more than two of the Ci;
    2. the edges lying in exactly two form a matching M;
    3. G - M has a nowhere-zero 4-flow.

    The overlap M is deleted, the symmetric difference of the Ci (exactly
    the once-covered edges) is completed to a ≤4-element cover of G - M,
    and that cover's symmetric-difference member is replaced by C1..Ck.
    """
    if not g.is_cubic():
        raise PreconditionError("host graph must be cubic")
    for i, c in enumerate(covers):
        if c.host is not g:
            raise ValueError(f"covers[{i}] does not belong to the given graph")
        if not is_even_subgraph(g, c):
            raise PreconditionError(f"covers[{i}] is not an even subgraph")

    counts = [0] * g.m
    for c in covers:
        for e in c:
            counts[e] += 1
    over = tuple(e for e, cnt in enumerate(counts) if cnt > 2)
    if over:
        raise ConditionError(1, "some edge lies in more than two covers", over)
    m_set = EdgeSet.of(g, (e for e, cnt in enumerate(counts) if cnt == 2))
    if not is_matching(g, m_set):
        raise ConditionError(
            2, "twice-covered edges do not form a matching", _matching_conflicts(g, m_set)
        )
    deletion = delete_edges(g, m_set)
    if not has_nz4flow(deletion.graph):
        raise ConditionError(
            3, "graph minus the matching has no nowhere-zero 4-flow", m_set.ids()
        )

    if covers:
        c_prime = deletion.to_new(sym_diff(covers))
    else:
        c_prime = EdgeSet.empty(deletion.graph)
    inner = four_cdc_containing(deletion.graph, c_prime)
    lifted = [deletion.to_old(g, el) for el in inner]
    if c_prime:
        lifted.remove(deletion.to_old(g, c_prime))
    elements = tuple(lifted) + tuple(c for c in covers if c)
    cdc = Cdc(g, elements)
    report = verify_cdc(g, cdc)
    if not report.valid:
        raise InvariantViolationError(f"extended cover fails verification: {report}")
    return cdc


def extract_witness(
    g: MultiGraph, s: CdcLike, c0: EdgeSet
) -> tuple[EdgeSet, EdgeSet, EdgeSet]:
    """From a ≤5-element CDC with an element containing c0, recover the
    triple (M, C1, C2): C1 the containing element, C2 the first other
    element (empty if there is none), M their intersection.

    In a valid CDC of a cubic graph two elements always intersect in a
    matching (a second shared edge at a vertex would leave the third edge
    there uncoverable), and the remaining elements together with C1 ^ C2
    double-cover G - M, which therefore has a nowhere-zero 4-flow.  Both
    facts are re-checked; a failure means the inputs were inconsistent in a
    way verify_cdc cannot see, or a genuine bug.
    """
    elements = tuple(_element_seq(s))
    if not g.is_cubic():
        raise PreconditionError("host graph must be cubic")
    if len(elements) > 5:
        raise PreconditionError(f"need at most 5 elements, got {len(elements)}")
    if not verify_cdc(g, elements).valid:
        raise PreconditionError("not a valid cycle double cover")
    idx = contains_element_superset(elements, c0)
    if idx is None:
        raise PreconditionError("no element contains the prescribed subgraph")
    c1 = elements[idx]
    rest = [el for i, el in enumerate(elements) if i != idx]
    c2 = rest[0] if rest else EdgeSet.empty(g)
    m_set = c1 & c2
    if not is_matching(g, m_set):
        raise InvariantViolationError("element intersection is not a matching")

    # Residual double cover of G - M certifies the flow condition.
    deletion = delete_edges(g, m_set)
    residual = [deletion.to_new(el) for el in rest[1:]]
    if c1 ^ c2:
        residual.append(deletion.to_new(c1 ^ c2))
    if len(residual) > 4:
        raise InvariantViolationError("residual cover has too many elements")
    try:
        cdc_to_flow(deletion.graph, residual)
    except PreconditionError as exc:
        raise InvariantViolationError(f"residual cover is not a double cover: {exc}") from exc
    if not has_nz4flow(deletion.graph):
        raise InvariantViolationError("graph minus the matching has no nowhere-zero 4-flow")
    return m_set, c1, c2
