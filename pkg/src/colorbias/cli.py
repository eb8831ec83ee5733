"""Command-line front end: gen | verify-balance | analyze | search | amplify | bowties.

Every command emits a JSON run report (stdout by default).  Reports are
byte-identical across runs for fixed inputs and seeds; timing is only
included with --timing.  Exit codes: 0 = pass/complete, 2 = checked failure
(balance or certificate), 1 = error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from .bowtie import (
    Bowtie,
    amplifier_swap,
    enumerate_bowties,
    greedy_disjoint_bad_packing,
    strip_bad_bowties,
)
from .constructions import ConstructionSpec, build, counterexample_min_degree
from .errors import BudgetExceeded, ColorBiasError, NotHamiltonian, ParameterError
from .graph import ColoredGraph, min_degree, read_graph_file, save_graph
from .hamilton import DEFAULT_NODE_BUDGET, bias_spectrum
from .report import digest_bytes, make_report, render_report
from .structure import (
    INCONCLUSIVE,
    certificate_report_to_json,
    check_certificate,
    default_s,
    diagnostics_thresholds,
    global_dichotomy,
    recover_partition,
)


def _emit(args, report: dict, started: float, to_stdout: bool = False) -> None:
    if getattr(args, "timing", False):
        report["timing_seconds"] = round(time.perf_counter() - started, 6)
    text = render_report(report)
    if not to_stdout and getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_graph(path: str) -> tuple[ColoredGraph, str]:
    data = Path(path).read_bytes()
    g = read_graph_file(path)
    return g, digest_bytes(data)


# -- gen ---------------------------------------------------------------------


def _cmd_gen(args) -> int:
    started = time.perf_counter()
    spec = ConstructionSpec(kind=args.kind, n=args.n, r=args.r, t=args.t)
    g, parts, labels = build(spec)
    ecg_path = Path(args.out)
    text = save_graph(g)
    ecg_path.write_text(text, newline="\n")
    sidecar = ecg_path.with_suffix(".partition.json")
    partition = {
        "kind": spec.kind,
        "n": spec.n,
        "r": g.r,
        "t": spec.t,
        "labels": list(labels),
        "parts": [list(p) for p in parts],
    }
    if spec.kind == "counterexample2":
        partition["min_degree"] = counterexample_min_degree(spec.n, spec.t or 0)
    sidecar.write_text(json.dumps(partition, sort_keys=True, indent=2) + "\n")
    results = {
        "files": [str(ecg_path), str(sidecar)],
        "num_edges": g.num_edges,
        "min_degree": min_degree(g),
        "part_sizes": [len(p) for p in parts],
    }
    if spec.kind == "counterexample2":
        results["min_degree_note"] = counterexample_min_degree(spec.n, spec.t or 0)
    report = make_report(
        "gen",
        digest_bytes(text.encode()),
        {"kind": spec.kind, "n": spec.n, "r": g.r, "t": spec.t},
        results,
    )
    # gen's --out names the .ecg artifact, so the report goes to stdout
    _emit(args, report, started, to_stdout=True)
    return 0


# -- verify-balance ------------------------------------------------------------


def _cmd_verify_balance(args) -> int:
    started = time.perf_counter()
    g, digest = _read_graph(args.graph)
    spectrum = bias_spectrum(g, node_budget=args.budget)
    passed = spectrum.max_scaled <= args.max_bias_scaled
    report = make_report(
        "verify-balance",
        digest,
        {"max_bias_scaled": args.max_bias_scaled, "budget": args.budget},
        {
            "cycle_count": spectrum.cycle_count,
            "min_scaled": spectrum.min_scaled,
            "max_scaled": spectrum.max_scaled,
            "min_color_counts": list(spectrum.min_color_counts),
            "max_color_counts": list(spectrum.max_color_counts),
            "nodes_visited": spectrum.nodes_visited,
            "passed": passed,
        },
    )
    _emit(args, report, started)
    return 0 if passed else 2


# -- analyze -------------------------------------------------------------------


def _cmd_analyze(args) -> int:
    started = time.perf_counter()
    if args.m < 1:
        raise ParameterError("m must be at least 1")
    if args.s is not None and args.s < 1:
        raise ParameterError("s must be at least 1")
    g, digest = _read_graph(args.graph)
    stripped = strip_bad_bowties(g)
    dichotomy = global_dichotomy(stripped.graph)
    s = args.s if args.s is not None else default_s(g.r, args.m)
    results: dict = {
        "removed": list(stripped.removed),
        "t": stripped.t,
        "packing": [list(b.vertices()) for b in stripped.packing.bowties],
        "mode": dichotomy.mode,
        "k": dichotomy.k,
        "diagnostics": diagnostics_thresholds(g.r, args.m),
    }
    parameters = {"m": args.m, "s": s}
    if dichotomy.mode == INCONCLUSIVE:
        results["nonconforming"] = list(dichotomy.nonconforming)
        results["detail"] = dichotomy.detail
        results["residual_bad_bowtie"] = (
            list(dichotomy.bad_bowtie.vertices()) if dichotomy.bad_bowtie else None
        )
        report = make_report("analyze", digest, parameters, results)
        _emit(args, report, started)
        return 2
    cert = recover_partition(g, stripped.graph, stripped.removed, args.m, dichotomy)
    checked = check_certificate(g, cert, s)
    results["certificate"] = certificate_report_to_json(checked)
    report = make_report("analyze", digest, parameters, results)
    _emit(args, report, started)
    return 0 if checked.passed else 2


# -- search --------------------------------------------------------------------


def _sample_colored_graph(
    n: int, r: int, p: float, min_deg: int, rng: random.Random
) -> ColoredGraph:
    """Random coloring of G(n, p), repaired by adding edges until delta >= min_deg."""
    if min_deg > n - 1:
        raise ParameterError(f"min degree {min_deg} impossible on {n} vertices")
    colors: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                colors[(u, v)] = rng.randint(1, r)
    adj = [set() for _ in range(n)]
    for u, v in colors:
        adj[u].add(v)
        adj[v].add(u)
    while True:
        deficient = [v for v in range(n) if len(adj[v]) < min_deg]
        if not deficient:
            break
        v = deficient[0]
        candidates = [u for u in range(n) if u != v and u not in adj[v]]
        u = candidates[rng.randrange(len(candidates))]
        e = (min(u, v), max(u, v))
        colors[e] = rng.randint(1, r)
        adj[u].add(v)
        adj[v].add(u)
    return ColoredGraph(n, r, [(u, v, c) for (u, v), c in sorted(colors.items())])


def _run_search_sample(task: tuple) -> dict:
    n, r, p, min_deg, seed, index, budget = task
    rng = random.Random(f"{seed}:{index}")
    g = _sample_colored_graph(n, r, p, min_deg, rng)
    row: dict = {
        "sample": index,
        "num_edges": g.num_edges,
        "min_degree": min_degree(g),
        "skipped": False,
        "reason": None,
        "spectrum": None,
    }
    try:
        spectrum = bias_spectrum(g, node_budget=budget)
    except BudgetExceeded:
        row["skipped"] = True
        row["reason"] = "budget exceeded"
        return row
    except NotHamiltonian:
        row["skipped"] = True
        row["reason"] = "not hamiltonian"
        return row
    row["spectrum"] = {
        "cycle_count": spectrum.cycle_count,
        "min_scaled": spectrum.min_scaled,
        "max_scaled": spectrum.max_scaled,
    }
    row["graph_ecg"] = save_graph(g)
    return row


def _cmd_search(args) -> int:
    started = time.perf_counter()
    if args.samples < 0:
        raise ParameterError("samples must be non-negative")
    if args.jobs < 1:
        raise ParameterError("jobs must be at least 1")
    if not (0.0 <= args.p <= 1.0):
        raise ParameterError("p must lie in [0, 1]")
    tasks = [
        (args.n, args.r, args.p, args.min_degree, args.seed, i, args.budget)
        for i in range(args.samples)
    ]
    if args.jobs > 1 and tasks:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_search_sample, tasks))
    else:
        rows = [_run_search_sample(t) for t in tasks]
    completed = [row for row in rows if not row["skipped"]]
    summary: dict = {
        "samples": args.samples,
        "completed": len(completed),
        "skipped": len(rows) - len(completed),
    }
    if completed:
        best = max(completed, key=lambda row: row["spectrum"]["max_scaled"])
        summary["max_scaled_overall"] = best["spectrum"]["max_scaled"]
        summary["min_scaled_overall"] = min(
            row["spectrum"]["min_scaled"] for row in completed
        )
        summary["extremal_sample"] = best["sample"]
        summary["extremal_graph_ecg"] = best["graph_ecg"]
    # keep per-row graphs only for the extremal finding; drop the rest to keep
    # reports small
    for row in rows:
        if "graph_ecg" in row and row["sample"] != summary.get("extremal_sample"):
            del row["graph_ecg"]
    report = make_report(
        "search",
        None,
        {
            "n": args.n,
            "r": args.r,
            "p": args.p,
            "min_degree": args.min_degree,
            "samples": args.samples,
            "seed": args.seed,
            "budget": args.budget,
            "jobs": args.jobs,
        },
        {"samples": rows, "summary": summary},
    )
    _emit(args, report, started)
    return 0


# -- amplify ---------------------------------------------------------------------


def _cmd_amplify(args) -> int:
    started = time.perf_counter()
    g, digest = _read_graph(args.graph)
    lines = [
        line.strip()
        for line in Path(args.bowties).read_text().splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    bows = [Bowtie.from_line(line) for line in lines]
    result = amplifier_swap(g, bows, args.color)
    report = make_report(
        "amplify",
        digest,
        {"color": args.color, "bowties": [list(b.vertices()) for b in bows]},
        {
            "h1": result.h1.to_line(),
            "h2": result.h2.to_line(),
            "h1_color_counts": list(result.h1.color_counts),
            "h2_color_counts": list(result.h2.color_counts),
            "delta": result.delta,
            "f_values": list(result.f_values),
            "f_sum": sum(result.f_values),
            "identity_ok": result.delta == sum(result.f_values),
        },
    )
    _emit(args, report, started)
    return 0


# -- bowties ----------------------------------------------------------------------


def _cmd_bowties(args) -> int:
    started = time.perf_counter()
    g, digest = _read_graph(args.graph)
    if args.pack:
        packing = greedy_disjoint_bad_packing(g)
        results = {
            "bowties": [list(b.vertices()) for b in packing.bowties],
            "V0": list(packing.covered),
            "t": packing.t,
        }
    else:
        bows = list(enumerate_bowties(g, only_bad=args.bad_only, cap=args.cap))
        if args.plain:
            text = "".join(b.to_line() + "\n" for b in bows)
            if args.out:
                Path(args.out).write_text(text)
            else:
                sys.stdout.write(text)
            return 0
        results = {
            "bowties": [list(b.vertices()) for b in bows],
            "count": len(bows),
        }
    report = make_report(
        "bowties",
        digest,
        {"bad_only": args.bad_only, "cap": args.cap, "pack": args.pack},
        results,
    )
    _emit(args, report, started)
    return 0


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorbias",
        description="Color-bias toolkit for Hamilton cycles in edge-colored graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a reference construction")
    p.add_argument("kind", choices=["general-r", "tripartite3", "counterexample2"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2, help="colors (general-r only)")
    p.add_argument("--t", type=int, default=None, help="bridge size (counterexample2)")
    p.add_argument("--out", required=True, help="output .ecg path")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify-balance", help="exact bias spectrum vs a bound")
    p.add_argument("graph")
    p.add_argument("--max-bias-scaled", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_verify_balance)

    p = sub.add_parser("analyze", help="strip, classify, recover, and certify")
    p.add_argument("graph")
    p.add_argument("--m", type=int, required=True, help="bias parameter")
    p.add_argument("--s", type=int, default=None, help="override matching threshold")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("search", help="random graphs with a degree floor")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--min-degree", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="edge probability before repair")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser(
        "amplify", help="two Hamilton cycles whose color counts differ by the bowtie sum"
    )
    p.add_argument("graph")
    p.add_argument("bowties", help="file of 'v1 v2 v3 v4 v5' lines")
    p.add_argument("--color", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_amplify)

    p = sub.add_parser("bowties", help="enumerate bowties or pack bad ones")
    p.add_argument("graph")
    p.add_argument("--bad-only", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--pack", action="store_true")
    p.add_argument("--plain", action="store_true", help="raw lines instead of JSON")
    p.add_argument("--out")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=_cmd_bowties)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ColorBiasError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
