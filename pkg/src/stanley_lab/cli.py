"""Command-line interface.

Subcommands: analyze, construct, verify, sdepth, depth, certify, sweep,
question.  Graphs are JSON files or presets (path:k, cycle:k, star:k,
complete:k, joined with '+').  Exit codes: 0 success, 1 verification or
claim failure, 2 input error, 3 budget exceeded.  Reports embed the tool
version and the full invocation so certificates are reproducible artifacts.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .bounds import (
    FAILS,
    KIND_S_MOD,
    KINDS,
    analytic_spread_edge,
    conjecture_check_s_mod,
    module_for,
    stanley_verdict,
)
from .constructions import (
    decompose_layer,
    decompose_power_general,
    decompose_s_mod_power,
)
from .depth import depth_by_trung, homology_profile, scan_corner
from .errors import (
    BudgetExceededError,
    ContradictionError,
    InputError,
    UndefinedValueError,
)
from .graphs import parse_graph
from .monomials import iter_box
from .sdepth import DEFAULT_BUDGET, build_poset, sdepth_exact, search_partition
from .sdepth import partition_to_decomposition
from .stanley import ModulePresentation, StanleyDecomposition, verify
from .sweeps import QUESTION_GRAPHS, question_report, run_sweep

EXIT_OK = 0
EXIT_CLAIM = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _default_budget() -> int:
    raw = os.environ.get("STANLEY_LAB_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise InputError(f"STANLEY_LAB_BUDGET must be an integer, got {raw!r}") from exc


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _emit(args: argparse.Namespace, result: dict, lines: list[str]) -> None:
    if args.json:
        payload = {
            "tool": "stanley-lab",
            "version": __version__,
            "invocation": sys.argv[1:] if args.argv is None else args.argv,
            "seed": args.seed,
            "result": result,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = parse_graph(args.graph)
    comps = graph.components()
    details = []
    for comp in comps:
        details.append(
            {
                "vertices": list(comp),
                "bipartite": graph.is_bipartite_component(comp),
                "tree": graph.is_tree(comp),
                "edges": len(graph.induced_edges(comp)),
            }
        )
    p = graph.bipartite_component_count()
    result = {
        "n": graph.num_vertices,
        "ambient": graph.n,
        "edges": [list(e) for e in graph.edges],
        "components": details,
        "bipartite_components": p,
        "analytic_spread": analytic_spread_edge(graph),
    }
    lines = [
        f"n = {graph.num_vertices}",
        f"edges = {len(graph.edges)}",
        f"components = {len(comps)}",
    ]
    for i, d in enumerate(details, 1):
        lines.append(
            f"  component {i}: vertices {d['vertices']}, "
            f"bipartite = {'yes' if d['bipartite'] else 'no'}, "
            f"tree = {'yes' if d['tree'] else 'no'}"
        )
    lines.append(f"p = {p}")
    lines.append(f"l(I) = {result['analytic_spread']}")
    _emit(args, result, lines)
    return EXIT_OK


def _construct(kind: str, graph, k: int, budget: int) -> StanleyDecomposition:
    if kind == "layer":
        return decompose_layer(graph, k, budget)
    if kind == "s-mod-power":
        return decompose_s_mod_power(graph, k, budget)
    return decompose_power_general(graph, k, budget)


def cmd_construct(args: argparse.Namespace) -> int:
    graph = parse_graph(args.graph)
    dec = _construct(args.kind, graph, args.k, args.budget)
    report = verify(dec)
    cert = dec.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(cert, fh, indent=2, sort_keys=True)
    result = {"certificate": cert, "sdepth": report.sdepth, "spaces": len(dec.spaces)}
    lines = [
        f"constructed {args.kind} certificate: {len(dec.spaces)} spaces, "
        f"sdepth {report.sdepth}"
        + (f", written to {args.out}" if args.out else "")
    ]
    _emit(args, result, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    dec = StanleyDecomposition.from_json(_load_json(args.certificate))
    report = verify(dec)
    result = report.to_json()
    if report.valid:
        _emit(args, result, [f"valid, sdepth {report.sdepth}"])
        return EXIT_OK
    _emit(
        args,
        result,
        [f"INVALID: {report.failure} at {list(report.witness)}"],
    )
    return EXIT_CLAIM


def _module_from_args(args: argparse.Namespace) -> ModulePresentation:
    if args.module:
        return ModulePresentation.from_json(_load_json(args.module))
    if args.graph and args.k is not None:
        return module_for(parse_graph(args.graph), args.k, args.kind)
    raise InputError("provide --module, or --graph with --k")


def cmd_sdepth(args: argparse.Namespace) -> int:
    module = _module_from_args(args)
    if args.target is not None:
        poset = build_poset(module)
        outcome = search_partition(poset, args.target, args.budget)
        result = {"target": args.target, "status": outcome.status,
                  "nodes": outcome.nodes}
        if outcome.status == "found":
            result["value"] = outcome.partition.value(poset)
        _emit(args, result, [f"target {args.target}: {outcome.status}"])
        return EXIT_BUDGET if outcome.status == "exceeded" else EXIT_OK
    res = sdepth_exact(module, args.budget)
    result = {"sdepth": res.value, "exact": res.exact}
    if args.cert:
        dec = partition_to_decomposition(res.poset, res.partition, module)
        with open(args.cert, "w", encoding="utf-8") as fh:
            json.dump(dec.to_json(), fh, indent=2, sort_keys=True)
        result["certificate"] = args.cert
    flag = "exact" if res.exact else "lower-bound only"
    _emit(args, result, [f"sdepth = {res.value} ({flag})"])
    return EXIT_OK if res.exact else EXIT_BUDGET


def cmd_depth(args: argparse.Namespace) -> int:
    result: dict = {}
    lines = []
    if args.module:
        module = ModulePresentation.from_json(_load_json(args.module))
        profile = homology_profile(module)
        result["depth"] = profile.depth
        result["homology_ranks"] = list(profile.ranks)
        lines.append(f"depth = {profile.depth}")
        if args.debug:
            from .depth import koszul_rank

            table = []
            for a in iter_box(scan_corner(module)):
                ranks = [koszul_rank(module, a, i) for i in range(module.n + 1)]
                if any(ranks):
                    table.append({"degree": list(a), "ranks": ranks})
                    lines.append(f"  degree {list(a)}: ranks {ranks}")
            result["degree_table"] = table
    if args.trung:
        graph = parse_graph(args.trung[0])
        k = int(args.trung[1])
        value = depth_by_trung(graph, k)
        result["limit_depth_formula"] = value
        lines.append(
            f"limit-depth formula: {value if value is not None else 'not applicable (k < n-1)'}"
        )
    if not result:
        raise InputError("provide --module and/or --trung")
    _emit(args, result, lines)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    graph = parse_graph(args.graph)
    report = stanley_verdict(args.kind, graph, args.k, args.budget)
    reports = [report]
    if args.kind == KIND_S_MOD:
        reports.append(conjecture_check_s_mod(graph, args.k))
    result = {"reports": [r.to_json() for r in reports]}
    lines = []
    for r in reports:
        lines.append(
            f"{r.claim}: verdict {r.verdict} "
            f"(bound {r.bound}, oracle {r.oracle})"
        )
    _emit(args, result, lines)
    return EXIT_CLAIM if any(r.verdict == FAILS for r in reports) else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    results = run_sweep(args.nmax, args.kmax, args.budget, args.jobs)
    summary = {}
    lines = [f"{'claim':34} {'instances':>9} {'failures':>8}"]
    failures = 0
    for claim, rows in results.items():
        bad = sum(1 for r in rows if not r["ok"])
        failures += bad
        summary[claim] = {"instances": len(rows), "failures": bad}
        lines.append(f"{claim:34} {len(rows):>9} {bad:>8}")
    result = {"summary": summary}
    if args.full:
        result["rows"] = results
    lines.append("all claims hold" if failures == 0 else f"{failures} FAILURES")
    _emit(args, result, lines)
    return EXIT_CLAIM if failures else EXIT_OK


def cmd_question(args: argparse.Namespace) -> int:
    rows = question_report(args.graphs, args.k, args.budget)
    result = {"rows": rows}
    lines = [f"{'graph':12} {'k':>2} {'sdepth':>6} {'exact':>6} verdict"]
    for r in rows:
        lines.append(
            f"{r['graph']:12} {r['k']:>2} {r['sdepth']:>6} "
            f"{str(r['exact']):>6} {r['verdict']}"
        )
    _emit(args, result, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanley-lab",
        description="Stanley depth of edge-ideal powers: oracles, bounds, certificates",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed recorded in reports")
    parser.set_defaults(argv=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument(
            "--budget",
            type=int,
            default=None,
            help="search node budget (default: STANLEY_LAB_BUDGET or built-in)",
        )

    p = sub.add_parser("analyze", help="graph invariants: components, p, l(I)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a decomposition certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=("layer", "s-mod-power", "power"), required=True)
    p.add_argument("--out")
    add_budget(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate JSON")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sdepth", help="exact Stanley depth of a module")
    p.add_argument("--module")
    p.add_argument("--graph")
    p.add_argument("--k", type=int)
    p.add_argument("--kind", choices=KINDS, default=KIND_S_MOD)
    p.add_argument("--target", type=int)
    p.add_argument("--cert", help="write the witnessing certificate JSON here")
    add_budget(p)
    p.set_defaults(func=cmd_sdepth)

    p = sub.add_parser("depth", help="exact depth of a module")
    p.add_argument("--module")
    p.add_argument("--trung", nargs=2, metavar=("GRAPH", "K"),
                   help="also evaluate the large-power closed form")
    p.add_argument("--debug", action="store_true",
                   help="dump per-degree homology ranks")
    p.set_defaults(func=cmd_depth)

    p = sub.add_parser("certify", help="verdict report for one instance")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, required=True)
    add_budget(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="check every claim on all small graphs")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--full", action="store_true", help="include per-instance rows")
    add_budget(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("question", help="bipartite power evidence report")
    p.add_argument("--graphs", nargs="+", default=list(QUESTION_GRAPHS))
    p.add_argument("--k", type=int, nargs="+", default=[1, 2])
    add_budget(p)
    p.set_defaults(func=cmd_question)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.argv = list(argv) if argv is not None else None
    if getattr(args, "budget", None) is None and hasattr(args, "budget"):
        try:
            args.budget = _default_budget()
        except InputError as exc:
            print(f"input error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except UndefinedValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ContradictionError as exc:
        print(f"CLAIM FAILURE: {exc}", file=sys.stderr)
        return EXIT_CLAIM


if __name__ == "__main__":
    sys.exit(main())
