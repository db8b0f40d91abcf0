"""Self-contained JSON records of successful searches.

A certificate carries the graph (both as graph6 and as an explicit edge
list, so a third party need not reimplement edge numbering), the prescribed
subgraph c0, the witness pair (c1, c2) with their matching intersection,
the final cover, a per-edge coverage tally, which construction path fired,
and search statistics.  verify_certificate re-derives everything from the
document alone; it never trusts stored claims it can recompute.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .cover import contains_element_superset, verify_cdc
from .cyclespace import is_even_subgraph
from .errors import Graph6Error, InvariantViolationError, UnsupportedFormatError
from .flows import has_nz4flow
from .graphs import EdgeSet, MultiGraph, delete_edges, is_matching, parse_graph6, write_graph6

PATH_THEOREM = "theorem2"
PATH_M_EMPTY = "m-empty"


@dataclass(frozen=True)
class Certificate:
    graph6: str
    n: int
    m: int
    edges: tuple[tuple[int, int], ...]
    c0: tuple[int, ...]
    c1: tuple[int, ...]
    c2: tuple[int, ...]
    matching: tuple[int, ...]
    cdc: tuple[tuple[int, ...], ...]
    coverage: tuple[int, ...]
    path: str
    candidates_tried: int
    elapsed_ms: int

    def to_doc(self) -> dict[str, Any]:
        """Plain-data document; key order is part of the format."""
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "edges": [list(pair) for pair in self.edges],
            "c0": list(self.c0),
            "c1": list(self.c1),
            "c2": list(self.c2),
            "matching": list(self.matching),
            "cdc": [list(el) for el in self.cdc],
            "coverage": list(self.coverage),
            "path": self.path,
            "stats": {
                "candidates_tried": self.candidates_tried,
                "elapsed_ms": self.elapsed_ms,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), indent=2) + "\n"

    @classmethod
    def from_doc(cls, doc: dict[str, Any]) -> "Certificate":
        problems = _structural_problems(doc)
        if problems:
            raise ValueError("; ".join(problems))
        return cls(
            graph6=doc["graph6"],
            n=doc["n"],
            m=doc["m"],
            edges=tuple((pair[0], pair[1]) for pair in doc["edges"]),
            c0=tuple(doc["c0"]),
            c1=tuple(doc["c1"]),
            c2=tuple(doc["c2"]),
            matching=tuple(doc["matching"]),
            cdc=tuple(tuple(el) for el in doc["cdc"]),
            coverage=tuple(doc["coverage"]),
            path=doc["path"],
            candidates_tried=doc["stats"]["candidates_tried"],
            elapsed_ms=doc["stats"]["elapsed_ms"],
        )

    def host_graph(self) -> MultiGraph:
        return parse_graph6(self.graph6)


def build_certificate(
    g: MultiGraph,
    c0: EdgeSet,
    c1: EdgeSet,
    c2: EdgeSet,
    matching: EdgeSet,
    elements: tuple[EdgeSet, ...],
    candidates_tried: int,
    elapsed_ms: int,
) -> Certificate:
    """Assemble and fully re-verify a certificate; a verification failure
    here means the search produced inconsistent data."""
    cert = Certificate(
        graph6=write_graph6(g),
        n=g.n,
        m=g.m,
        edges=g.edges,
        c0=c0.ids(),
        c1=c1.ids(),
        c2=c2.ids(),
        matching=matching.ids(),
        cdc=tuple(el.ids() for el in elements),
        coverage=tuple(verify_cdc(g, elements).coverage),
        path=PATH_M_EMPTY if not matching else PATH_THEOREM,
        candidates_tried=candidates_tried,
        elapsed_ms=elapsed_ms,
    )
    problems = verify_certificate(cert.to_doc())
    if problems:
        raise InvariantViolationError(
            "constructed certificate fails verification: " + "; ".join(problems)
        )
    return cert


def _is_id_array(value: Any) -> bool:
    return isinstance(value, list) and all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    )


def _structural_problems(doc: Any) -> list[str]:
    problems: list[str] = []
    if not isinstance(doc, dict):
        return ["document is not an object"]
    for key, kind in (
        ("graph6", str),
        ("n", int),
        ("m", int),
        ("edges", list),
        ("c0", list),
        ("c1", list),
        ("c2", list),
        ("matching", list),
        ("cdc", list),
        ("coverage", list),
        ("path", str),
        ("stats", dict),
    ):
        if key not in doc:
            problems.append(f"missing field '{key}'")
        elif not isinstance(doc[key], kind):
            problems.append(f"field '{key}' has the wrong type")
    if problems:
        return problems
    for key in ("c0", "c1", "c2", "matching", "coverage"):
        if not _is_id_array(doc[key]):
            problems.append(f"field '{key}' must be an array of integers")
    if not all(
        isinstance(pair, list) and len(pair) == 2 and _is_id_array(pair)
        for pair in doc["edges"]
    ):
        problems.append("field 'edges' must be an array of endpoint pairs")
    if not all(_is_id_array(el) for el in doc["cdc"]):
        problems.append("field 'cdc' must be an array of edge-id arrays")
    stats = doc["stats"]
    for key in ("candidates_tried", "elapsed_ms"):
        if not isinstance(stats.get(key), int) or isinstance(stats.get(key), bool):
            problems.append(f"stats field '{key}' must be an integer")
    return problems


def _ordered_ids(name: str, ids: list[int], m: int, problems: list[str]) -> bool:
    ok = True
    for x in ids:
        if not 0 <= x < m:
            problems.append(f"{name} contains out-of-range edge id {x}")
            ok = False
    if ids != sorted(set(ids)):
        problems.append(f"{name} must list edge ids strictly increasing")
        ok = False
    return ok


def verify_certificate(doc: dict[str, Any]) -> list[str]:
    """Re-verify a certificate document from scratch.  Returns a list of
    problems; empty means the certificate is sound."""
    problems = _structural_problems(doc)
    if problems:
        return problems

    try:
        parsed = parse_graph6(doc["graph6"])
    except (Graph6Error, UnsupportedFormatError) as exc:
        return [f"graph6 field does not parse: {exc}"]
    if parsed.n != doc["n"]:
        problems.append(f"n is {doc['n']} but the graph has {parsed.n} vertices")
    if parsed.m != len(doc["edges"]):
        problems.append(f"graph6 has {parsed.m} edges but {len(doc['edges'])} are listed")
    if len(doc["edges"]) != doc["m"]:
        problems.append(f"m is {doc['m']} but {len(doc['edges'])} edges are listed")
    if problems:
        return problems

    # The edges field fixes the edge numbering all id arrays refer to; the
    # graph6 field must describe the same labeled graph, but its own edge
    # order is irrelevant.
    try:
        g = MultiGraph(doc["n"], [(pair[0], pair[1]) for pair in doc["edges"]])
    except ValueError as exc:
        return [f"edges field is not a valid edge list: {exc}"]
    def normalize(pairs):
        return sorted(tuple(sorted(p)) for p in pairs)

    if normalize(g.edges) != normalize(parsed.edges):
        problems.append("edges field does not describe the graph6 graph")
        return problems
    if not g.is_cubic():
        problems.append("graph is not cubic")

    ok = True
    for name in ("c0", "c1", "c2", "matching"):
        ok &= _ordered_ids(name, doc[name], g.m, problems)
    for i, el in enumerate(doc["cdc"]):
        ok &= _ordered_ids(f"cdc[{i}]", el, g.m, problems)
    if not ok:
        return problems

    c0 = EdgeSet.of(g, doc["c0"])
    c1 = EdgeSet.of(g, doc["c1"])
    c2 = EdgeSet.of(g, doc["c2"])
    matching = EdgeSet.of(g, doc["matching"])
    elements = [EdgeSet.of(g, el) for el in doc["cdc"]]

    for name, s in (("c0", c0), ("c1", c1), ("c2", c2)):
        if not is_even_subgraph(g, s):
            problems.append(f"{name} is not an even subgraph")
    if not c0 <= c1:
        problems.append("c0 is not a subset of c1")
    if (c1 & c2) != matching:
        problems.append("matching is not the intersection of c1 and c2")
    if not is_matching(g, matching):
        problems.append("matching edges share an endpoint")

    if len(elements) > 5:
        problems.append(f"cover has {len(elements)} elements, more than 5")
    report = verify_cdc(g, elements)
    for i in report.empty:
        problems.append(f"cdc[{i}] is empty")
    for i in report.non_even:
        problems.append(f"cdc[{i}] is not an even subgraph")
    for e in report.coverage_errors:
        problems.append(f"edge {e} is covered {report.coverage[e]} times, expected 2")
    if list(report.coverage) != doc["coverage"]:
        stored = doc["coverage"]
        wrong = [e for e in range(min(len(stored), g.m)) if stored[e] != report.coverage[e]]
        detail = f" at edges {wrong}" if wrong else ""
        problems.append("coverage field does not match the recomputed tally" + detail)
    if c1 and c1 not in elements:
        problems.append("c1 is not an element of the cover")
    if c2 and c2 not in elements:
        problems.append("c2 is not an element of the cover")
    if contains_element_superset(elements, c0) is None:
        problems.append("no cover element contains c0")

    if doc["path"] not in (PATH_THEOREM, PATH_M_EMPTY):
        problems.append(f"unknown path '{doc['path']}'")
    elif (doc["path"] == PATH_M_EMPTY) != (not matching):
        problems.append("path field is inconsistent with the matching")

    if g.is_cubic() and is_matching(g, matching):
        if not has_nz4flow(delete_edges(g, matching).graph):
            problems.append("graph minus the matching has no nowhere-zero 4-flow")

    if doc["stats"]["candidates_tried"] < 1:
        problems.append("candidates_tried must be at least 1")
    if doc["stats"]["elapsed_ms"] < 0:
        problems.append("elapsed_ms must be nonnegative")
    return problems
