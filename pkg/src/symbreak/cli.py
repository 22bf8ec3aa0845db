"""Command-line interface: gen, dist, label, verify, survey, conjecture.

Exit codes: 0 success, 1 error, 2 bound violation outside documented exceptions.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import constructive as con
from .distinguish import distinguishing
from .errors import IncompleteLabeling, ParseError, SymbreakError
from .families import (
    enumerate_graphs,
    enumerate_halin_structures,
    enumerate_mops,
    gen_standard,
    halin_from_plane_tree,
    k4_core_graph,
    mycielski_sequence,
    plane_tree,
)
from .graph import EdgeLabeling, Graph, VertexLabeling, build_graph
from .graph6 import from_graph6, to_graph6
from .group import preserving_automorphism
from .survey import FAMILIES, RunConfig, conjecture_report, rows_to_csv, rows_to_json, run_survey, summary

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    return a, b


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _read_graph(arg: str) -> Graph:
    text = sys.stdin.read() if arg == "-" else arg
    return from_graph6(text.strip())


def _read_json(arg: str):
    path = Path(arg)
    text = path.read_text() if path.exists() else arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from None


# -- gen -------------------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "mop":
        graphs = enumerate_mops(args.all)
    elif fam == "halin":
        structs = enumerate_halin_structures(args.all)
        if args.format == "json":
            _emit("\n".join(json.dumps(h.to_json_dict(), sort_keys=True) for h in structs), args.out)
            return EXIT_OK
        graphs = [h.graph for h in structs]
    elif fam == "mycielski":
        graphs = [mycielski_sequence(args.iterate)]
    elif fam == "connected":
        graphs = enumerate_graphs(args.all)
    elif fam == "clique4":
        graphs = [k4_core_graph(args.seed)]
    else:
        graphs = [gen_standard(fam, *args.params)]
    _emit("\n".join(to_graph6(g) for g in graphs), args.out)
    return EXIT_OK


# -- dist ------------------------------------------------------------------------


def cmd_dist(args) -> int:
    g = _read_graph(args.graph)
    res = distinguishing(g, args.kind, args.max_d)
    _emit(json.dumps(res.to_json_dict(g), sort_keys=True), args.out)
    return EXIT_OK


# -- label -----------------------------------------------------------------------

_GRAPH_CONSTRUCTIONS = {
    "clique4": con.clique4_bfs_labeling,
    "unique-hamiltonian": con.unique_hamiltonian_labeling,
    "mop-vertex": con.mop_vertex_labeling,
    "mop-edge": con.mop_edge_labeling,
}
CONSTRUCTIONS = sorted([*_GRAPH_CONSTRUCTIONS, "cycle-vertex", "cycle-edge", "halin-vertex",
                        "halin-edge", "mycielskian-vertex", "mycielskian-edge", "mycielski-iterate"])


def _halin_from_json(data: dict):
    tree = build_graph(data["n"] if "n" in data else 1 + len(data["tree_edges"]),
                       [tuple(e) for e in data["tree_edges"]])
    rotation = {int(v): order for v, order in data["child_order"].items()}
    return halin_from_plane_tree(plane_tree(tree, rotation, data.get("root")))


def cmd_label(args) -> int:
    c = args.construction
    if c in _GRAPH_CONSTRUCTIONS:
        cert = _GRAPH_CONSTRUCTIONS[c](_read_graph(args.graph))
    elif c in ("cycle-vertex", "cycle-edge"):
        n = args.n if args.n is not None else _read_graph(args.graph).n
        cert = (con.cycle_vertex_labeling if c == "cycle-vertex" else con.cycle_edge_labeling)(n)
    elif c in ("halin-vertex", "halin-edge"):
        if not args.halin:
            raise SymbreakError("--halin JSON (tree_edges, child_order) required")
        h = _halin_from_json(_read_json(args.halin))
        cert = (con.halin_vertex_labeling if c == "halin-vertex" else con.halin_edge_labeling)(h)
    elif c == "mycielski-iterate":
        cert = con.mycielski_iterate_labeling(args.iterate, args.kind)
    else:
        g = _read_graph(args.graph)
        kind = "vertex" if c == "mycielskian-vertex" else "edge"
        if args.base:
            base = _labeling_for(g, _read_json(args.base), kind)
        else:
            base = distinguishing(g, kind).witness
        fn = con.mycielskian_extend_vertex if kind == "vertex" else con.mycielskian_extend_edge
        cert = fn(g, base)
    payload = cert.to_json_dict()
    payload["graph6"] = to_graph6(cert.graph)
    _emit(json.dumps(payload, sort_keys=True), args.out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def _labeling_for(g: Graph, data, kind: str) -> VertexLabeling | EdgeLabeling:
    if isinstance(data, dict) and "labeling" in data:
        data = data["labeling"]
    if kind == "vertex":
        if isinstance(data, list):
            if len(data) != g.n:
                raise IncompleteLabeling(f"expected {g.n} vertex labels, got {len(data)}")
            return VertexLabeling(tuple(data))
        return VertexLabeling.from_mapping(g, data)
    if isinstance(data, list):
        if len(data) != g.m:
            raise IncompleteLabeling(f"expected {g.m} edge labels, got {len(data)}")
        return EdgeLabeling.for_graph(g, data)
    return EdgeLabeling.from_mapping(g, data)


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    lab = _labeling_for(g, _read_json(args.labeling), args.kind)
    witness = preserving_automorphism(g, lab)
    report = {"graph6": to_graph6(g), "kind": args.kind, "distinguishing": witness is None}
    if witness is not None:
        report["counterexample"] = list(witness)
    _emit(json.dumps(report, sort_keys=True), args.out)
    return EXIT_OK if witness is None else EXIT_VIOLATION


# -- survey / conjecture ---------------------------------------------------------


def cmd_survey(args) -> int:
    lo, hi = args.n
    cfg = RunConfig(args.family, lo, hi, workers=args.workers, seed=args.seed, count=args.count)
    rows = run_survey(cfg)
    stats = summary(rows)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        stem = f"{cfg.family}_{lo}_{hi}"
        (out / f"{stem}.csv").write_text(rows_to_csv(rows))
        (out / f"{stem}.json").write_text(rows_to_json(rows, cfg) + "\n")
    elif args.format == "json":
        _emit(rows_to_json(rows, cfg), None)
    else:
        _emit(rows_to_csv(rows), None)
    print(json.dumps(stats, sort_keys=True), file=sys.stderr)
    if stats["errors"]:
        return EXIT_ERROR
    return EXIT_VIOLATION if stats["violations"] else EXIT_OK


def cmd_conjecture(args) -> int:
    lo, hi = args.n
    _emit(conjecture_report(lo, hi), args.out)
    return EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symbreak", description="Distinguishing numbers and indices of graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate graphs as graph6 lines")
    g.add_argument("family", help="path|cycle|complete|complete_bipartite|star|wheel|mop|halin|mycielski|connected|clique4")
    g.add_argument("params", nargs="*", type=int)
    g.add_argument("--all", type=int, metavar="N", help="all graphs of order N (mop, halin, connected)")
    g.add_argument("--iterate", type=int, metavar="I", help="M_I for the mycielski family")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--format", choices=["graph6", "json"], default="graph6")
    g.add_argument("--out")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("dist", help="exact D or D' with a witness")
    d.add_argument("graph", help="graph6 string, or - for stdin")
    d.add_argument("--kind", choices=["vertex", "edge"], default="vertex")
    d.add_argument("--max-d", type=int)
    d.add_argument("--out")
    d.set_defaults(func=cmd_dist)

    lab = sub.add_parser("label", help="build and certify a constructive labeling")
    lab.add_argument("construction", choices=CONSTRUCTIONS)
    lab.add_argument("graph", nargs="?", default=None, help="graph6 string, or - for stdin")
    lab.add_argument("--n", type=int, help="cycle order for cycle-*")
    lab.add_argument("--iterate", type=int, default=4)
    lab.add_argument("--kind", choices=["vertex", "edge"], default="vertex")
    lab.add_argument("--halin", help="HalinStructure JSON (file or literal), as written by gen halin --format json")
    lab.add_argument("--base", help="base labeling JSON for mycielskian-*; default is an exact witness")
    lab.add_argument("--out")
    lab.set_defaults(func=cmd_label)

    v = sub.add_parser("verify", help="check that a labeling is distinguishing")
    v.add_argument("graph")
    v.add_argument("labeling", help="JSON list, {vertex: label} or {\"u-v\": label}; file or literal")
    v.add_argument("--kind", choices=["vertex", "edge"], default="vertex")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("survey", help="check bounds over a family enumeration")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=_range, required=True, help="N or A..B (iteration range for mycielski)")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=20, help="instances for the seeded clique4 family")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.add_argument("--out", help="directory for <family>_<lo>_<hi>.csv/.json")
    s.set_defaults(func=cmd_survey)

    c = sub.add_parser("conjecture", help="compare D, D' of G and its Mycielskian over connected graphs")
    c.add_argument("--n", type=_range, default=(3, 7))
    c.add_argument("--out")
    c.set_defaults(func=cmd_conjecture)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "label" and args.graph is None and args.construction in _GRAPH_CONSTRUCTIONS:
        parser.error(f"{args.construction} needs a graph6 argument")
    try:
        return args.func(args)
    except (SymbreakError, ValueError, KeyError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
