"""Command-line front end: certificate verification, single searches,
batch conjecture sweeps over graph6 catalogs, and catalog statistics.

Exit codes are a stable contract: 0 success, 1 definitive negative (or a
sweep counterexample), 2 usage or input error, 3 inconclusive (a capacity
guard stopped the search before an answer was reached).
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
import time
from typing import Any, Optional

from .certificates import verify_certificate
from .cyclespace import cycle_space_basis, enumerate_circuits, is_even_subgraph
from .errors import CapacityError, Graph6Error, UnsupportedFormatError
from .flows import has_nz4flow
from .graphs import EdgeSet, MultiGraph, bridges, parse_graph6
from .search import FlowCache, SearchOptions, find_5cdc_containing

WORKERS_ENV = "CDC5_WORKERS"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class _Fail(Exception):
    """Abort the current command with an exit code and a message."""

    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            value = int(env)
        except ValueError:
            value = 0
        if value > 0:
            return value
    return os.cpu_count() or 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdc5",
        description="Search and verify 5-element cycle double covers of cubic "
        "graphs containing a prescribed circuit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="re-verify a certificate file")
    p_verify.add_argument("certificate", help="certificate JSON file")

    p_find = sub.add_parser("find", help="search one graph for one prescribed subgraph")
    p_find.add_argument("--graph", required=True, help="graph6 file")
    p_find.add_argument("--index", type=int, default=0, help="graph line index (default 0)")
    p_find.add_argument(
        "--circuit",
        help="prescribed circuit as a closed vertex sequence 'v0,v1,...'; "
        "omitted means no prescription",
    )
    p_find.add_argument(
        "--edge-ids",
        action="store_true",
        help="interpret --circuit as comma-separated edge identifiers "
        "(any even subgraph; exact for multigraphs)",
    )
    p_find.add_argument("--out", default=".", help="output directory (default .)")
    p_find.add_argument("--dim-guard", type=_positive_int, default=16)
    p_find.add_argument("--budget-ms", type=_positive_int, default=None)
    p_find.add_argument("--format", choices=("json", "table"), default="table")

    p_sweep = sub.add_parser("sweep", help="run every circuit of every graph in a file")
    p_sweep.add_argument("--graph", required=True, help="graph6 file, one graph per line")
    p_sweep.add_argument("--out", default=".", help="output directory (default .)")
    p_sweep.add_argument("--dim-guard", type=_positive_int, default=16)
    p_sweep.add_argument("--budget-ms", type=_positive_int, default=None)
    p_sweep.add_argument(
        "--workers",
        type=_positive_int,
        default=None,
        help=f"worker processes (default: ${WORKERS_ENV} or the core count)",
    )
    p_sweep.add_argument(
        "--keep-going",
        action="store_true",
        help="do not stop at the first graph with a definitive negative",
    )
    p_sweep.add_argument("--format", choices=("json", "table"), default="table")

    p_stats = sub.add_parser("stats", help="summarize the graphs in a file")
    p_stats.add_argument("--graph", required=True, help="graph6 file")
    p_stats.add_argument("--dim-guard", type=_positive_int, default=16)
    p_stats.add_argument("--format", choices=("json", "table"), default="table")
    return parser


def _graph_lines(path: str) -> list[str]:
    """Graph lines of a graph6 file; comments start '>' but a '>>graph6<<'
    header glued to the first graph is data, not a comment."""
    try:
        with open(path, "r", encoding="ascii") as handle:
            raw = handle.read()
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot read {path}: {exc}") from exc
    lines = []
    for line in raw.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(">") and not line.startswith(">>graph6<<"):
            continue
        lines.append(line)
    return lines


def _parse_vertex_circuit(g: MultiGraph, spec: str) -> EdgeSet:
    try:
        verts = [int(part) for part in spec.split(",")]
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, f"bad circuit spec '{spec}': {exc}") from exc
    if len(verts) < 3:
        raise _Fail(EXIT_USAGE, "a vertex circuit needs at least 3 vertices")
    if len(set(verts)) != len(verts):
        raise _Fail(EXIT_USAGE, "circuit vertices must be distinct")
    for v in verts:
        if not 0 <= v < g.n:
            raise _Fail(EXIT_USAGE, f"vertex {v} out of range (graph has {g.n} vertices)")
    ids = []
    for u, v in zip(verts, verts[1:] + verts[:1]):
        here = [e for e in g.incident(u) if not g.is_loop(e) and g.other_end(e, u) == v]
        if not here:
            raise _Fail(EXIT_USAGE, f"no edge between {u} and {v}")
        if len(here) > 1:
            raise _Fail(
                EXIT_USAGE,
                f"parallel edges between {u} and {v}; use --edge-ids to disambiguate",
            )
        ids.append(here[0])
    return EdgeSet.of(g, ids)


def _parse_edge_ids(g: MultiGraph, spec: str) -> EdgeSet:
    try:
        ids = [int(part) for part in spec.split(",")] if spec else []
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, f"bad edge-id spec '{spec}': {exc}") from exc
    for e in ids:
        if not 0 <= e < g.m:
            raise _Fail(EXIT_USAGE, f"edge id {e} out of range (graph has {g.m} edges)")
    s = EdgeSet.of(g, ids)
    if not is_even_subgraph(g, s):
        raise _Fail(EXIT_USAGE, "edge ids do not form an even subgraph")
    return s


def _load_graph(path: str, index: int) -> MultiGraph:
    lines = _graph_lines(path)
    if not 0 <= index < len(lines):
        raise _Fail(
            EXIT_USAGE, f"graph index {index} out of range ({len(lines)} graphs in {path})"
        )
    try:
        return parse_graph6(lines[index])
    except (Graph6Error, UnsupportedFormatError) as exc:
        raise _Fail(EXIT_USAGE, f"{path}:{index}: {exc}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        with open(args.certificate, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise _Fail(EXIT_USAGE, f"cannot read {args.certificate}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _Fail(EXIT_USAGE, f"{args.certificate} is not valid JSON: {exc}") from exc
    problems = verify_certificate(doc)
    if problems:
        print(f"certificate {args.certificate} is INVALID:")
        for problem in problems:
            print(f"  - {problem}")
        return EXIT_NEGATIVE
    print(
        f"certificate OK: graph {doc['graph6']} (n={doc['n']}, m={doc['m']}), "
        f"{len(doc['cdc'])} elements, path {doc['path']}"
    )
    return EXIT_OK


def cmd_find(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph, args.index)
    if not g.is_cubic():
        raise _Fail(EXIT_USAGE, "graph is not cubic")
    if args.circuit is None:
        c0 = EdgeSet.empty(g)
    elif args.edge_ids:
        c0 = _parse_edge_ids(g, args.circuit)
    else:
        c0 = _parse_vertex_circuit(g, args.circuit)
    if bridges(g):
        print("none: the graph has a bridge, so it has no cycle double cover")
        return EXIT_NEGATIVE

    options = SearchOptions(dim_guard=args.dim_guard, budget_ms=args.budget_ms)
    try:
        cert = find_5cdc_containing(g, c0, options)
    except CapacityError as exc:
        print(f"inconclusive: {exc}")
        return EXIT_INCONCLUSIVE
    if cert is None:
        print("none: the search space was exhausted without a cover")
        return EXIT_NEGATIVE

    os.makedirs(args.out, exist_ok=True)
    path = os.path.join(args.out, "certificate.json")
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(cert.to_json())
    if args.format == "json":
        print(
            json.dumps(
                {
                    "outcome": "found",
                    "certificate": path,
                    "elements": len(cert.cdc),
                    "matching": list(cert.matching),
                    "path": cert.path,
                    "candidates_tried": cert.candidates_tried,
                    "elapsed_ms": cert.elapsed_ms,
                }
            )
        )
    else:
        print(
            f"found: {len(cert.cdc)}-element cover, matching {list(cert.matching)}, "
            f"{cert.candidates_tried} candidates, certificate {path}"
        )
    return EXIT_OK


# Per-process state for sweep workers: host graph and flow memo per graph6
# line, so circuits of the same graph share work within a worker.
_WORKER_GRAPHS: dict[str, tuple[MultiGraph, FlowCache]] = {}


def _sweep_task(task: tuple) -> tuple[int, int, str, Optional[dict], str]:
    gi, ci, g6, ids, dim_guard, budget_ms = task
    state = _WORKER_GRAPHS.get(g6)
    if state is None:
        g = parse_graph6(g6)
        state = (g, FlowCache(g))
        _WORKER_GRAPHS[g6] = state
    g, cache = state
    c0 = EdgeSet.of(g, ids)
    options = SearchOptions(dim_guard=dim_guard, budget_ms=budget_ms)
    try:
        cert = find_5cdc_containing(g, c0, options, cache)
    except CapacityError as exc:
        return gi, ci, "inconclusive", None, str(exc)
    if cert is None:
        return gi, ci, "none", None, "search space exhausted"
    return gi, ci, "found", cert.to_doc(), ""


def _run_tasks(tasks: list[tuple], pool, workers: int) -> list[tuple]:
    if pool is None:
        return [_sweep_task(task) for task in tasks]
    chunk = max(1, len(tasks) // (workers * 4))
    return list(pool.imap(_sweep_task, tasks, chunksize=chunk))


def cmd_sweep(args: argparse.Namespace) -> int:
    started = time.monotonic()
    lines = _graph_lines(args.graph)
    workers = args.workers if args.workers is not None else _default_workers()
    os.makedirs(args.out, exist_ok=True)

    graph_reports: list[dict[str, Any]] = []
    counts = {"found": 0, "none": 0, "inconclusive": 0}
    had_error = False
    aborted = False
    pool = multiprocessing.Pool(workers) if workers > 1 else None
    try:
        for gi, line in enumerate(lines):
            if aborted:
                graph_reports.append({"index": gi, "graph6": line, "status": "skipped"})
                continue
            entry: dict[str, Any] = {"index": gi, "graph6": line}
            try:
                g = parse_graph6(line)
            except (Graph6Error, UnsupportedFormatError) as exc:
                entry.update(status="error", reason=str(exc))
                graph_reports.append(entry)
                had_error = True
                continue
            if not g.is_cubic():
                entry.update(status="rejected", reason="graph is not cubic")
                graph_reports.append(entry)
                had_error = True
                continue
            if bridges(g):
                entry.update(status="rejected", reason="graph has a bridge")
                graph_reports.append(entry)
                had_error = True
                continue
            try:
                circuits = enumerate_circuits(g, args.dim_guard)
            except CapacityError as exc:
                entry.update(status="inconclusive", reason=str(exc))
                graph_reports.append(entry)
                counts["inconclusive"] += 1
                continue

            tasks = [
                (gi, ci, line, c.ids(), args.dim_guard, args.budget_ms)
                for ci, c in enumerate(circuits)
            ]
            results = _run_tasks(tasks, pool, workers)
            circuit_rows = []
            local = {"found": 0, "none": 0, "inconclusive": 0}
            for (_, ci, outcome, doc, detail), circuit in zip(results, circuits):
                row: dict[str, Any] = {
                    "index": ci,
                    "edges": list(circuit.ids()),
                    "outcome": outcome,
                }
                if outcome == "found":
                    name = f"cert_g{gi:03d}_c{ci:03d}.json"
                    with open(os.path.join(args.out, name), "w", encoding="utf-8") as f:
                        f.write(json.dumps(doc, indent=2) + "\n")
                    row["certificate"] = name
                elif detail:
                    row["detail"] = detail
                local[outcome] += 1
                circuit_rows.append(row)
            entry.update(status="ok", circuits=circuit_rows, counts=local)
            graph_reports.append(entry)
            for key in counts:
                counts[key] += local[key]
            if local["none"] and not args.keep_going:
                aborted = True
    finally:
        if pool is not None:
            pool.close()
            pool.join()

    report = {
        "command": "sweep",
        "input": args.graph,
        "options": {"dim_guard": args.dim_guard, "budget_ms": args.budget_ms},
        "graphs": graph_reports,
        "counts": counts,
        "aborted": aborted,
        "total_ms": int((time.monotonic() - started) * 1000),
    }
    with open(os.path.join(args.out, "report.json"), "w", encoding="utf-8") as handle:
        handle.write(json.dumps(report, indent=2) + "\n")

    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for entry in graph_reports:
            if entry["status"] == "ok":
                c = entry["counts"]
                print(
                    f"graph {entry['index']} ({entry['graph6']}): "
                    f"{c['found']} found, {c['none']} none, "
                    f"{c['inconclusive']} inconclusive"
                )
                for row in entry["circuits"]:
                    if row["outcome"] == "none":
                        print(
                            f"  COUNTEREXAMPLE: circuit {row['edges']} has no "
                            f"5-element cover containing it"
                        )
            elif entry["status"] == "skipped":
                print(f"graph {entry['index']}: skipped (earlier counterexample)")
            else:
                print(
                    f"graph {entry['index']}: {entry['status']} "
                    f"({entry.get('reason', '')})"
                )
        print(
            f"total: {counts['found']} found, {counts['none']} none, "
            f"{counts['inconclusive']} inconclusive"
        )

    if counts["none"]:
        return EXIT_NEGATIVE
    if had_error:
        return EXIT_USAGE
    if counts["inconclusive"]:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    lines = _graph_lines(args.graph)
    rows = []
    had_error = False
    for gi, line in enumerate(lines):
        row: dict[str, Any] = {"index": gi, "graph6": line}
        try:
            g = parse_graph6(line)
        except (Graph6Error, UnsupportedFormatError) as exc:
            row.update(error=str(exc))
            rows.append(row)
            had_error = True
            continue
        basis = cycle_space_basis(g)
        row.update(
            n=g.n,
            m=g.m,
            simple=g.is_simple(),
            cubic=g.is_cubic(),
            bridges=len(bridges(g)),
            cyclespace_dim=basis.dim,
            even_subgraphs=1 << basis.dim,
        )
        row["circuits"] = (
            len(enumerate_circuits(g, args.dim_guard)) if basis.dim <= args.dim_guard else None
        )
        flow_domain = all(g.degree(v) in (2, 3) for v in range(g.n))
        row["nz4flow"] = has_nz4flow(g) if flow_domain else None
        rows.append(row)

    if args.format == "json":
        print(json.dumps({"command": "stats", "input": args.graph, "graphs": rows}, indent=2))
    else:
        for row in rows:
            if "error" in row:
                print(f"graph {row['index']}: unreadable ({row['error']})")
                continue
            circ = "n/a" if row["circuits"] is None else row["circuits"]
            flow = "n/a" if row["nz4flow"] is None else ("yes" if row["nz4flow"] else "no")
            print(
                f"graph {row['index']} ({row['graph6']}): n={row['n']} m={row['m']} "
                f"cubic={'yes' if row['cubic'] else 'no'} bridges={row['bridges']} "
                f"dim={row['cyclespace_dim']} circuits={circ} nz4flow={flow}"
            )
    return EXIT_USAGE if had_error else EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handlers = {
        "verify": cmd_verify,
        "find": cmd_find,
        "sweep": cmd_sweep,
        "stats": cmd_stats,
    }
    try:
        return handlers[args.command](args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
