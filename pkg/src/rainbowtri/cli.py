"""Command-line interface.

Exit status: 0 when every verdict is satisfied or vacuous, 1 on usage or I/O
errors, 2 when some bound is violated.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from collections import Counter
from multiprocessing import Pool
from typing import Optional, Sequence

from rainbowtri import generators
from rainbowtri.bounds import proposition1_sum
from rainbowtri.census import count_rainbow_bruteforce, count_rainbow_fast
from rainbowtri.ecg import parse_ecg, parse_ecg_metadata, write_ecg
from rainbowtri.friendship import find_friendship
from rainbowtri.graph import EdgeColoredGraph, GraphError
from rainbowtri.reduction import check_minimal_structure, edge_minimalize
from rainbowtri.report import GraphSummary, Report, report_serialize
from rainbowtri.verify import evaluate, resolve_names

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2

FAMILIES = [
    "rainbow-complete", "rainbow-turan", "proper-bipartite", "example2",
    "example3", "friendship", "gnp", "high-cdeg",
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _need(value, flag: str, family: str):
    if value is None:
        raise UsageError(f"--{flag} is required for family {family}")
    return value


def generate(args: argparse.Namespace) -> tuple[EdgeColoredGraph, dict[str, str]]:
    fam = args.family
    meta = {"family": fam}
    if fam == "rainbow-complete":
        g = generators.rainbow_complete(_need(args.n, "n", fam))
    elif fam == "rainbow-turan":
        g = generators.rainbow_turan(_need(args.n, "n", fam), _need(args.k, "k", fam))
    elif fam == "proper-bipartite":
        g = generators.proper_complete_bipartite(_need(args.m, "m", fam))
    elif fam == "example2":
        g = generators.example2(_need(args.n, "n", fam))
    elif fam == "example3":
        g = generators.example3(_need(args.n, "n", fam))
        meta["note"] = generators.EXAMPLE3_MODULUS_NOTE
    elif fam == "friendship":
        g = generators.friendship_underlying(_need(args.k, "k", fam))
    elif fam == "gnp":
        n = _need(args.n, "n", fam)
        p = args.p if args.p is not None else 0.5
        colors = args.colors if args.colors is not None else max(1, n * n)
        g = generators.random_colored(n, p, colors, args.seed)
    else:
        n = _need(args.n, "n", fam)
        target = args.target if args.target is not None else math.ceil((n + 1) / 2)
        g = generators.random_high_color_degree(n, target, args.seed, args.colors)
    params = {k: getattr(args, k) for k in ("n", "k", "m", "p", "colors", "target", "seed")}
    meta["params"] = " ".join(f"{k}={v}" for k, v in params.items() if v is not None)
    return g, meta


def _load(path: str) -> tuple[EdgeColoredGraph, dict[str, str]]:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_ecg(text), parse_ecg_metadata(text)


def _notes(meta: dict[str, str]) -> list[str]:
    notes = []
    if meta.get("family") == "example3":
        notes.append(generators.EXAMPLE3_MODULUS_NOTE)
    return notes


def _provenance(argv: Sequence[str], seed: Optional[int] = None) -> dict:
    return {"command": "rainbowtri " + " ".join(argv), "seed": seed}


def _emit(report: Report, as_json: bool, text_lines: list[str]) -> None:
    if as_json:
        print(report_serialize(report))
    else:
        print("\n".join(text_lines))


def _summary_lines(s: GraphSummary) -> list[str]:
    return [
        f"n={s.n} e={s.e} colors={s.num_colors}",
        f"min color degree={s.min_color_degree} sigma2c={s.sigma2c} max mono degree={s.max_mono_degree}",
    ]


def _verdict_line(v) -> str:
    tag = {"checked": "PASS", "vacuous": "VACUOUS", "violated": "VIOLATED"}[v.status]
    if v.tight:
        tag += " (tight)"
    params = " ".join(f"{k}={v.parameters[k]}" for k in ("k", "vertex") if k in v.parameters)
    line = f"{v.theorem_id.value:<13} {tag:<15} bound={v.bound} observed={v.observed} {params}".rstrip()
    if v.reasons:
        line += "  [" + "; ".join(v.reasons) + "]"
    return line


def cmd_gen(args, argv) -> int:
    g, meta = generate(args)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(write_ecg(g, meta))
    print(f"wrote {args.family}: n={g.n} e={g.num_edges} -> {args.out}")
    return EXIT_OK


def cmd_analyze(args, argv) -> int:
    g, meta = _load(args.file)
    census = count_rainbow_bruteforce(g) if args.brute else count_rainbow_fast(g)
    report = Report(
        graph_summary=GraphSummary.of(g),
        census=census,
        minimality=check_minimal_structure(g),
        notes=_notes(meta),
        provenance=_provenance(argv),
    )
    lines = _summary_lines(report.graph_summary)
    lines.append(f"rainbow triangles={census.total}")
    lines.append("per vertex=" + " ".join(map(str, census.per_vertex)))
    lines.append(f"edge-minimal={report.minimality.is_minimal}")
    lines += [f"note: {n}" for n in report.notes]
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_verify(args, argv) -> int:
    g, meta = _load(args.file)
    try:
        names = resolve_names(args.theorems)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdicts = evaluate(g, names, reduce=args.reduce_first, k=args.k)
    report = Report(
        graph_summary=GraphSummary.of(g),
        census=count_rainbow_fast(g),
        verdicts=verdicts,
        notes=_notes(meta),
        provenance=_provenance(argv),
    )
    lines = _summary_lines(report.graph_summary)
    lines.append(f"rainbow triangles={report.census.total}")
    lines += [_verdict_line(v) for v in verdicts]
    lines += [f"note: {n}" for n in report.notes]
    _emit(report, args.json, lines)
    return EXIT_VIOLATION if any(v.status == "violated" for v in verdicts) else EXIT_OK


def cmd_reduce(args, argv) -> int:
    g, meta = _load(args.file)
    h = edge_minimalize(g)
    with open(args.out, "w", encoding="utf-8") as f:
        f.write(write_ecg(h, meta))
    before = [g.color_degree(v) for v in range(g.n)]
    after = [h.color_degree(v) for v in range(h.n)]
    ok = before == after
    print(f"edges: {g.num_edges} -> {h.num_edges} (removed {g.num_edges - h.num_edges})")
    print("color degrees before: " + " ".join(map(str, before)))
    print("color degrees after:  " + " ".join(map(str, after)))
    print(f"color degrees preserved: {ok}")
    print(f"edge-minimal: {check_minimal_structure(h).is_minimal}")
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_friendship(args, argv) -> int:
    g, _ = _load(args.file)
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    w = find_friendship(g, args.k)
    if args.json:
        report = Report(graph_summary=GraphSummary.of(g), witness=w, provenance=_provenance(argv))
        print(report_serialize(report))
    elif w is None:
        print(f"no rainbow F_{args.k} found")
    else:
        tris = " ".join(f"({w.center},{a},{b})" for a, b in w.triangles)
        print(f"center={w.center} triangles={tris}")
    return EXIT_OK


def _trial(job: tuple) -> dict:
    model, seed, n_fixed, n_min, n_max, p, colors, target, names, reduce = job
    rng = random.Random(seed)
    n = n_fixed if n_fixed is not None else rng.randint(n_min, n_max)
    if model == "gnp":
        g = generators.random_colored(n, p, colors if colors is not None else max(1, n * n), seed)
    else:
        t = target if target is not None else math.ceil((n + 1) / 2)
        g = generators.random_high_color_degree(n, t, seed, colors)
    counts: Counter = Counter()
    for v in evaluate(g, names, reduce=reduce):
        counts[(v.theorem_id.value, v.status)] += 1
    counts[("PROP1", "checked" if proposition1_sum(g) == 0 else "violated")] += 1
    return {"seed": seed, "n": n, "counts": counts}


def cmd_experiment(args, argv) -> int:
    try:
        names = resolve_names(args.theorems)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.n is None and args.n_min > args.n_max:
        raise UsageError("--n-min must not exceed --n-max")
    jobs = [
        (args.model, args.seed + i, args.n, args.n_min, args.n_max, args.p, args.colors,
         args.target, names, args.reduce_first)
        for i in range(args.trials)
    ]
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            results = pool.map(_trial, jobs)
    else:
        results = [_trial(j) for j in jobs]
    total: Counter = Counter()
    for r in results:
        total.update(r["counts"])
    theorems = list(dict.fromkeys(t for t, _ in sorted(total)))
    table = {t: {s: total[(t, s)] for s in ("checked", "vacuous", "violated")} for t in theorems}
    violated = [(r["seed"], t) for r in results for (t, s), c in r["counts"].items() if s == "violated"]
    if args.json:
        print(json.dumps({
            "format_version": "1",
            "provenance": _provenance(argv, args.seed),
            "trials": args.trials,
            "table": table,
            "violations": [{"seed": s, "theorem": t} for s, t in violated],
        }, indent=2))
    else:
        print(f"{'theorem':<13} {'checked':>8} {'vacuous':>8} {'violated':>8}")
        for t, row in table.items():
            print(f"{t:<13} {row['checked']:>8} {row['vacuous']:>8} {row['violated']:>8}")
        for s, t in violated:
            print(f"violation: {t} at seed {s}")
    return EXIT_VIOLATION if violated else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rainbowtri", description="Rainbow triangles in edge-colored graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write a generated graph to an .ecg file")
    p.add_argument("--family", required=True, choices=FAMILIES)
    for flag in ("n", "k", "m", "colors", "target", "seed"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="summary statistics and rainbow-triangle census")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--fast", action="store_true", help="forward counter (default)")
    mode.add_argument("--brute", action="store_true", help="all-triples reference counter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="evaluate lower-bound theorems on a graph")
    p.add_argument("file")
    p.add_argument("--theorems", required=True, help="comma-separated names or 'all'")
    p.add_argument("--reduce-first", action="store_true", help="edge-minimalize where minimality is assumed")
    p.add_argument("--k", type=int, help="k for main2/topk/friendship (default: several)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="edge-minimalize, keeping every color degree")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("friendship", help="find k rainbow triangles sharing one vertex")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_friendship)

    p = sub.add_parser("experiment", help="seeded random trials with a pass/fail table")
    p.add_argument("--model", required=True, choices=["gnp", "high-cdeg"])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--colors", type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--theorems", default="all")
    p.add_argument("--reduce-first", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"rainbowtri: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
