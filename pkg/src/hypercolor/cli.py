"""Command-line front end.

Subcommands: analyze, color, verify, oracle, gen, search.  Exit codes are a
stable contract:

    0  success
    1  verification failure (verify found monochromatic edges)
    2  input error (malformed file or arguments)
    3  infeasible precondition (1-intersection graph not bipartite /
       not 4-colorable)
    4  exact-solver size cap exceeded

All randomness requires an explicit --seed, and every command is
deterministic: identical inputs produce byte-identical outputs.  JSON
outputs carry a versioned top-level "schema" field.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gen
from .color import four_color, greedy_color, two_color
from .core import Hypergraph, RecoloringTrace, is_proper, one_intersection_graph
from .errors import (
    HypercolorError,
    LimitExceeded,
    NotBipartiteIntersection,
    NotFourColorableIntersection,
)
from .exact import (
    GRAPH_CAP,
    VERTEX_CAP,
    OddCycle,
    bipartition,
    graph_chromatic_number,
    graph_k_coloring,
    hypergraph_chromatic_number,
)
from .formats import emit_coloring, emit_hypergraph, read_coloring, read_hypergraph
from .search import SearchConfig, run_search

ANALYZE_SCHEMA = "hypercolor.analyze/1"
ORACLE_SCHEMA = "hypercolor.oracle/1"
TRACE_SCHEMA = "hypercolor.trace/1"


def _write_output(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def _trace_rounds(trace: RecoloringTrace) -> list[dict]:
    return [
        {
            "inserted_edge": r.inserted_edge,
            "initial_queue": list(r.initial_queue),
            "steps": [
                {
                    "step": s.step,
                    "edge": s.edge,
                    "vertex": s.vertex,
                    "became_monochromatic": list(s.became_monochromatic),
                    "queue_after": list(s.queue_after),
                }
                for s in r.steps
            ],
        }
        for r in trace.rounds
    ]


def cmd_analyze(args: argparse.Namespace) -> int:
    h = read_hypergraph(args.file)
    g = one_intersection_graph(h)
    split = bipartition(g)
    bipartite = not isinstance(split, OddCycle)
    notes: list[str] = []
    chi_ig: int | None
    try:
        chi_ig = graph_chromatic_number(g, cap=args.cap_ig)
    except LimitExceeded as exc:
        chi_ig = None
        notes.append(str(exc))
    sizes: dict[int, int] = {}
    for e in h.edges:
        sizes[len(e)] = sizes.get(len(e), 0) + 1
    if args.format == "json":
        doc = {
            "schema": ANALYZE_SCHEMA,
            "n": h.n,
            "m": h.m,
            "edge_size_histogram": [
                {"size": s, "count": c} for s, c in sorted(sizes.items())
            ],
            "intersection_edge_count": g.edge_count,
            "bipartite": bipartite,
            "odd_cycle": list(split.edges) if isinstance(split, OddCycle) else None,
            "chromatic_number_intersection": chi_ig,
            "notes": notes,
        }
        _write_output(args.out, json.dumps(doc, indent=2) + "\n")
    else:
        lines = [
            f"vertices:                  {h.n}",
            f"hyperedges:                {h.m}",
            "edge sizes:                "
            + (", ".join(f"{s}:{c}" for s, c in sorted(sizes.items())) or "-"),
            f"1-intersection edges:      {g.edge_count}",
            f"bipartite:                 {'yes' if bipartite else 'no'}",
        ]
        if isinstance(split, OddCycle):
            lines.append(
                "odd cycle:                 " + " -> ".join(map(str, split.edges))
            )
        lines.append(
            f"chromatic (intersection):  {chi_ig if chi_ig is not None else 'above cap'}"
        )
        lines.extend(f"note: {n}" for n in notes)
        _write_output(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    if args.trace is not None and args.method == "greedy":
        print("error: --trace is only available for methods two and four", file=sys.stderr)
        return 2
    h = read_hypergraph(args.file)
    trace_doc: dict | None = None
    if args.method == "two":
        coloring, trace = two_color(h)
        trace_doc = {
            "schema": TRACE_SCHEMA,
            "method": "two",
            "rounds": _trace_rounds(trace),
        }
    elif args.method == "four":
        result = four_color(h, cap=args.cap_ig)
        coloring = result.coloring
        trace_doc = {
            "schema": TRACE_SCHEMA,
            "method": "four",
            "edge_classes": list(result.edge_classes.classes),
            "low": {"rounds": _trace_rounds(result.low_trace)},
            "high": {"rounds": _trace_rounds(result.high_trace)},
        }
    else:  # greedy
        g = one_intersection_graph(h)
        k = graph_chromatic_number(g, cap=args.cap_ig)
        classes = graph_k_coloring(g, max(k, 1), cap=args.cap_ig)
        assert classes is not None  # feasible at the chromatic number
        coloring = greedy_color(h, classes)
    _write_output(args.out, emit_coloring(coloring))
    if args.trace is not None and trace_doc is not None:
        _write_output(args.trace, json.dumps(trace_doc, indent=2) + "\n")
    print(f"colors used: {coloring.k}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    h = read_hypergraph(args.hypergraph)
    coloring = read_coloring(args.coloring)
    if len(coloring) != h.n:
        print(
            f"error: coloring covers {len(coloring)} vertices, hypergraph has {h.n}",
            file=sys.stderr,
        )
        return 2
    ok, witnesses = is_proper(h, coloring)
    if ok:
        print("proper")
        return 0
    print("improper; monochromatic hyperedges:")
    for i in witnesses:
        print(f"  edge {i}: {' '.join(map(str, h.edges[i]))}")
    return 1


def cmd_oracle(args: argparse.Namespace) -> int:
    h = read_hypergraph(args.file)
    chi_ig = graph_chromatic_number(one_intersection_graph(h), cap=args.cap_ig)
    chi_h, witness = hypergraph_chromatic_number(h, cap=args.cap_n)
    if args.format == "json":
        doc = {
            "schema": ORACLE_SCHEMA,
            "chromatic_number_intersection": chi_ig,
            "chromatic_number_hypergraph": chi_h,
            "witness": list(witness.colors),
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        print(f"chromatic number (1-intersection graph): {chi_ig}")
        print(f"chromatic number (hypergraph):           {chi_h}")
    if args.out is not None:
        _write_output(args.out, emit_coloring(witness))
    return 0


def cmd_gen(args: argparse.Namespace) -> int:
    h: Hypergraph
    if args.family == "complete":
        h = gen.complete_graph(args.n)
    elif args.family == "complete-plus-triple":
        h = gen.complete_plus_triple(args.n)
    elif args.family == "universal":
        h = gen.universal_vertex_family(args.m, args.size)
    elif args.family == "fano":
        h = gen.fano_plane()
    else:  # random
        h = gen.random_hypergraph(
            args.n, args.m, args.min_size, args.max_size, seed=args.seed
        )
    _write_output(args.out, emit_hypergraph(h))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    cfg = SearchConfig(
        n_range=tuple(args.n_range),
        m_range=tuple(args.m_range),
        size_range=tuple(args.size_range),
        trials=args.trials,
        base_seed=args.seed,
        parity_filter=args.parity,
        min_edge_size_filter=args.min_edge_size,
        mode=args.mode,
    )
    report = run_search(cfg, jobs=args.jobs, cap_vertices=args.cap_n, cap_graph=args.cap_ig)
    if args.format == "json":
        sys.stdout.write(report.to_json())
    else:
        sys.stdout.write(report.render_text())
    if args.report is not None:
        _write_output(args.report, report.to_json())
    if args.violations_dir is not None and report.violations:
        directory = Path(args.violations_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for v in report.violations:
            header = (
                f"# violation: kind={v.kind} trial={v.trial} seed={v.seed}\n"
                f"# chromatic_intersection={v.chromatic_intersection} "
                f"chromatic_hypergraph={v.chromatic_hypergraph}\n"
            )
            path = directory / f"violation-{v.seed}.hg"
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(header + emit_hypergraph(v.hypergraph()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercolor",
        description="Color hypergraphs through their 1-intersection graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural report on a hypergraph file")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.add_argument("--cap-ig", type=int, default=GRAPH_CAP, metavar="N",
                   help="exact-solver cap on 1-intersection graph vertices")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("color", help="run a constructive colorer")
    p.add_argument("file")
    p.add_argument("--method", choices=("two", "four", "greedy"), required=True)
    p.add_argument("--out", default=None, help="coloring file (default stdout)")
    p.add_argument("--trace", default=None, metavar="PATH",
                   help="dump the recoloring trace as JSON (methods two/four)")
    p.add_argument("--cap-ig", type=int, default=GRAPH_CAP, metavar="N")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a hypergraph file")
    p.add_argument("hypergraph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="exact chromatic numbers plus a witness coloring")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="write the witness coloring here")
    p.add_argument("--cap-n", type=int, default=VERTEX_CAP, metavar="N",
                   help="exact-oracle cap on hypergraph vertices")
    p.add_argument("--cap-ig", type=int, default=GRAPH_CAP, metavar="N")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="emit a named family or a seeded random instance")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("complete", help="all pairs on n vertices")
    f.add_argument("n", type=int)
    f = fam.add_parser("complete-plus-triple", help="complete graph on even n plus the 3-edge {0,1,2}")
    f.add_argument("n", type=int)
    f = fam.add_parser("universal", help="m edges sharing exactly one universal vertex")
    f.add_argument("m", type=int)
    f.add_argument("--size", type=int, default=3)
    fam.add_parser("fano", help="the 7 lines of the Fano plane")
    f = fam.add_parser("random", help="seeded random hypergraph")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--min-size", type=int, default=2)
    f.add_argument("--max-size", type=int, default=3)
    f.add_argument("--seed", type=int, required=True)
    for f in fam.choices.values():
        f.add_argument("--out", default=None, help="output file (default stdout)")
        f.set_defaults(func=cmd_gen)

    p = sub.add_parser("search", help="randomized audit for chromatic-gap counterexamples")
    p.add_argument("--mode", choices=(
        "conjecture_audit", "theorem_audit_3uniform", "two_color_stress", "four_color_stress"
    ), default="conjecture_audit")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n-range", type=int, nargs=2, default=(4, 12), metavar=("LO", "HI"))
    p.add_argument("--m-range", type=int, nargs=2, default=(1, 12), metavar=("LO", "HI"))
    p.add_argument("--size-range", type=int, nargs=2, default=(2, 4), metavar=("LO", "HI"))
    p.add_argument("--parity", choices=("even", "odd", "any"), default="even")
    p.add_argument("--min-edge-size", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report", default=None, metavar="PATH", help="also write the JSON report here")
    p.add_argument("--violations-dir", default=None, metavar="DIR",
                   help="write each violating instance as a hypergraph file named by its seed")
    p.add_argument("--cap-n", type=int, default=VERTEX_CAP, metavar="N")
    p.add_argument("--cap-ig", type=int, default=GRAPH_CAP, metavar="N")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.func(args)
    except NotBipartiteIntersection as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except NotFourColorableIntersection as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except LimitExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 4
    except (HypercolorError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(argv=None))


if __name__ == "__main__":
    entry()
