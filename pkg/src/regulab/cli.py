"""Command-line front door.

Subcommands: analyze, reg, betti, colon-graph, classify, catalog, verify.
JSON on stdout by default; --pretty switches to aligned text.  Exit codes:
0 success, 1 verification failure, 2 usage error (including malformed
input files, with line-numbered diagnostics).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from . import catalog
from .betti import FieldSpec, SIZE_WALL, SizeWallError, betti_table, froberg_linear_check
from .evenconn import SFoldProduct, colon_graph
from .graph import (
    SimpleGraph,
    clique_number,
    contains_induced,
    graph_to_text,
    is_bipartite,
    is_chordal,
    is_diamond_free,
    is_gap_free,
    parse_graph_text,
)
from .ideals import edge_ideal, parse_ideal_text
from .structure import (
    PreconditionError,
    check_structure_lemmas,
    classify_gap_diamond_free,
    dominating_clique,
)
from .suites import SUITES, run_suite


class UsageError(Exception):
    pass


def _load_graph(spec: str) -> SimpleGraph:
    if spec.startswith("catalog:"):
        try:
            return catalog.get(spec[len("catalog:"):])
        except catalog.CatalogError as e:
            raise UsageError(str(e))
    if os.path.exists(spec):
        with open(spec) as fh:
            text = fh.read()
        try:
            return parse_graph_text(text)
        except ValueError as e:
            raise UsageError(f"{spec}: {e}")
    try:
        return catalog.get(spec)
    except catalog.CatalogError:
        raise UsageError(f"--graph {spec!r}: no such file, and not a catalog name")


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        for line in _pretty_lines(payload):
            print(line)
    else:
        print(json.dumps(payload, sort_keys=True))


def _pretty_lines(payload: dict, indent: int = 0) -> list:
    pad = "  " * indent
    out = []
    for k in sorted(payload):
        v = payload[k]
        if isinstance(v, dict):
            out.append(f"{pad}{k}:")
            out.extend(_pretty_lines(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            out.append(f"{pad}{k}:")
            for item in v:
                out.extend(_pretty_lines(item, indent + 1))
                out.append("")
        else:
            out.append(f"{pad}{k:<24} {v}")
    return out


def cmd_reg(args) -> int:
    g = _load_graph(args.graph)
    fld = FieldSpec(args.char)
    t0 = time.monotonic()
    ideal = edge_ideal(g).power(args.power) if args.power > 1 else edge_ideal(g)
    if args.power == 1 and froberg_linear_check(g):
        reg = 2
    else:
        table = betti_table(ideal, fld)
        reg = table.regularity()
    _emit(
        {
            "graph": args.graph,
            "power": args.power,
            "regularity": reg,
            "field": args.char,
            "walltime": round(time.monotonic() - t0, 3),
        },
        args.pretty,
    )
    return 0


def cmd_betti(args) -> int:
    try:
        with open(args.ideal_file) as fh:
            ideal = parse_ideal_text(fh.read())
    except OSError as e:
        raise UsageError(str(e))
    except ValueError as e:
        raise UsageError(f"{args.ideal_file}: {e}")
    fld = FieldSpec(args.char)
    t0 = time.monotonic()
    table = betti_table(ideal, fld)
    _emit(
        {
            "betti": [[i, j, b] for (i, j), b in sorted(table.as_dict().items())],
            "regularity": table.regularity(),
            "field": args.char,
            "walltime": round(time.monotonic() - t0, 3),
        },
        args.pretty,
    )
    return 0


def cmd_analyze(args) -> int:
    g = _load_graph(args.graph)
    payload: dict = {
        "graph": args.graph,
        "vertices": g.n,
        "edges": g.num_edges(),
        "gap_free": is_gap_free(g),
        "diamond_free": is_diamond_free(g),
        "bipartite": is_bipartite(g).is_bipartite,
        "clique_number": clique_number(g),
        "complement_chordal": is_chordal(g.complement()).is_chordal,
        "has_induced_c5": contains_induced(g, "Cycle", 5) is not None,
        "linear_resolution": g.num_edges() > 0 and froberg_linear_check(g),
    }
    try:
        clique = dominating_clique(g)
        payload["dominating_clique"] = sorted(clique) if clique else None
    except PreconditionError:
        payload["dominating_clique"] = "not applicable"
    payload["lemmas"] = [
        {"lemma": r.lemma, "applicable": r.applicable, "pass": r.passed,
         **({"details": r.details} if r.details else {})}
        for r in check_structure_lemmas(g)
    ]
    res = classify_gap_diamond_free(g) if _connected(g) else "disconnected"
    if isinstance(res, str):
        payload["classification"] = res
    else:
        payload["classification"] = {
            "base": res.base,
            "multiplicities": res.multiplicities,
        }
    _emit(payload, args.pretty)
    return 0


def _connected(g: SimpleGraph) -> bool:
    import math

    from .graph import distance_partition

    if g.n == 0:
        return False
    return all(d < math.inf for d in distance_partition(g, [g.vertices[0]]).values())


def _parse_edges(g: SimpleGraph, text: str) -> list:
    edges = []
    for i, chunk in enumerate(text.split(","), start=1):
        token = chunk.strip()
        for sep in ("-", "*"):
            token = token.replace(sep, " ")
        parts = token.split()
        if len(parts) != 2:
            raise UsageError(
                f"--edges entry {i} ({chunk.strip()!r}): want two endpoints "
                "separated by space, '-' or '*'"
            )
        u, v = parts
        if not g.has_edge(u, v):
            raise UsageError(f"--edges entry {i}: ({u}, {v}) is not an edge of the graph")
        edges.append((u, v))
    if not edges:
        raise UsageError("--edges: empty edge list")
    return edges


def cmd_colon_graph(args) -> int:
    g = _load_graph(args.graph)
    m = SFoldProduct(g, _parse_edges(g, args.edges))
    result = colon_graph(g, m)
    payload = {
        "graph": args.graph,
        "product": str(m.product()),
        "s": m.s,
        "new_edges": [list(e) for e in result.new_edges],
        "squares": list(result.squares),
        "colon_graph_text": graph_to_text(result.graph),
    }
    _emit(payload, args.pretty)
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    try:
        res = classify_gap_diamond_free(g)
    except PreconditionError as e:
        raise UsageError(str(e))
    if isinstance(res, str):
        _emit({"graph": args.graph, "status": res}, args.pretty)
        return 0
    _emit(
        {
            "graph": args.graph,
            "status": "classified",
            "base": res.base,
            "multiplicities": res.multiplicities,
            "witness": res.witness,
        },
        args.pretty,
    )
    return 0


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit({"names": catalog.names()}, args.pretty)
        return 0
    if not args.name:
        raise UsageError("catalog show needs a name")
    try:
        g = catalog.get(args.name)
    except catalog.CatalogError as e:
        raise UsageError(str(e))
    sys.stdout.write(graph_to_text(g))
    return 0


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(
            f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}"
        )
    report = run_suite(
        args.suite,
        characteristic=args.char,
        jobs=args.jobs,
        timeout_secs=args.timeout_secs,
    )
    payload = report.as_dict()
    if not args.verbose:
        payload["cases"] = [c for c in payload["cases"] if not c["pass"] or c.get("skipped")]
    _emit(payload, args.pretty)
    return 0 if report.passed() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regulab",
        description="Exact regularity computations for edge ideals of finite simple graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph=True):
        if graph:
            p.add_argument("--graph", required=True,
                           help="graph file or catalog name (catalog:NAME or NAME)")
        p.add_argument("--char", type=int, default=0, metavar="p",
                       help="field characteristic (0 or a prime; default 0)")
        p.add_argument("--pretty", action="store_true", help="aligned text instead of JSON")

    p = sub.add_parser("analyze", help="structure predicates, lemma report, classification")
    add_common(p)
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("reg", help="regularity of I(G)^s")
    add_common(p)
    p.add_argument("--power", type=int, default=1, metavar="s")
    p.set_defaults(fn=cmd_reg)

    p = sub.add_parser("betti", help="Betti table of a monomial ideal file")
    p.add_argument("ideal_file")
    add_common(p, graph=False)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("colon-graph", help="colon graph of I^{s+1} by an edge product")
    add_common(p)
    p.add_argument("--edges", required=True,
                   help='comma-separated edges, e.g. "u_1 u_2, u_2 u_3"')
    p.set_defaults(fn=cmd_colon_graph)

    p = sub.add_parser("classify", help="recognize a vertex-multiplied catalog base")
    add_common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("catalog", help="list or print built-in graphs")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--char", type=int, default=0, metavar="p")
    p.add_argument("--jobs", type=int, default=None, metavar="N",
                   help="worker processes (default: REGULAB_JOBS or 1)")
    p.add_argument("--timeout-secs", type=float, default=None, metavar="T")
    p.add_argument("--pretty", action="store_true")
    p.add_argument("--verbose", action="store_true", help="include passing cases in output")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if getattr(args, "char", 0) != 0:
        try:
            FieldSpec(args.char)
        except ValueError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    if getattr(args, "power", 1) < 1:
        print("error: --power must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except SizeWallError as e:
        print(f"error: {e} (size wall: {SIZE_WALL} polarized variables)", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
