"""Command-line front end: recognize, check, gen, bench.

Exit codes: 0 for a successful evaluation, 2 for input errors. With
--exit-verdict, recognize maps YES to 0, NO to 1 and errors to 2; check
exits 1 when a disagreement is found.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bench import ratio_spread, run_bench
from .errors import GraphParseError, IsolatedVertexError, OracleLimitError
from .families import FamilySpec, gen_random_graph, gen_random_split, mutate_edge
from .graph import Graph, parse_graph, serialize_graph, strip_isolated
from .matchings import find_witness_matchings
from .recognition import decide
from .split import split_partition
from .verify import check_exhaustive, check_files, check_random

REPORT_SCHEMA = "equisplit.report/1"
CHECK_SCHEMA = "equisplit.check-report/1"


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> tuple[Graph, float]:
    text = _read_input(path)
    t0 = time.perf_counter()
    g = parse_graph(text)
    return g, time.perf_counter() - t0


def cmd_recognize(args: argparse.Namespace) -> int:
    try:
        g, parse_s = _load_graph(args.path)
    except (OSError, GraphParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    stripped_count = 0
    if args.strip_isolated:
        g, stripped_count = strip_isolated(g)
    if g.n == 0:
        print("error: graph has no vertices left to recognize", file=sys.stderr)
        return 2
    try:
        t0 = time.perf_counter()
        result = decide(g)
        recognize_s = time.perf_counter() - t0
    except (IsolatedVertexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    witness = None
    if args.witness:
        witness = _build_witness(g, result)

    report = {
        "schema": REPORT_SCHEMA,
        "input": args.path,
        "n": g.n,
        "m": g.m,
        "stripped_isolated": stripped_count,
        "split": split_partition(g) is not None,
        "equimatchable_split": result.is_yes,
        "condition": result.condition,
        "reason": result.reason,
        "witness": witness,
        "timings": {"parse_s": parse_s, "recognize_s": recognize_s},
    }
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        print(_human_verdict(result, witness))
    if args.exit_verdict:
        return 0 if result.is_yes else 1
    return 0


def _human_verdict(result, witness) -> str:
    if result.is_yes:
        line = f"YES (condition {result.condition})" if result.condition else "YES (small case)"
    else:
        line = f"NO (reason: {result.reason})"
    if witness is None:
        return line
    if witness["type"] == "pair":
        return f"{line}; witness pair x={witness['x']} y={witness['y']}"
    return (
        f"{line}; witness matchings of sizes "
        f"{len(witness['smaller'])} and {len(witness['larger'])}"
    )


def _build_witness(g: Graph, result) -> dict | None:
    if result.is_yes:
        if result.profile is not None:
            return {"type": "pair", "x": result.profile.x, "y": result.profile.y}
        return None
    try:
        pair = find_witness_matchings(g)
    except OracleLimitError:
        return None  # too large for the brute-force certificate; verdict stands alone
    if pair is None:
        return None  # equimatchable but not split: no two-size certificate exists
    smaller, larger = pair
    return {
        "type": "matchings",
        "smaller": [list(e) for e in smaller.canonical()],
        "larger": [list(e) for e in larger.canonical()],
    }


def cmd_check(args: argparse.Namespace) -> int:
    modes = sum([bool(args.paths), args.all_n is not None, args.count is not None])
    if modes != 1:
        print("error: pick exactly one of: input paths, --all-n, --count", file=sys.stderr)
        return 2
    try:
        if args.all_n is not None:
            if not 1 <= args.all_n <= 6:
                print("error: --all-n supports 1..6", file=sys.stderr)
                return 2
            report = check_exhaustive(args.all_n, workers=args.workers)
        elif args.count is not None:
            report = check_random(args.count, seed=args.seed, workers=args.workers)
        else:
            graphs = []
            for path in args.paths:
                g = parse_graph(_read_input(path))
                if args.strip_isolated:
                    g, _ = strip_isolated(g)
                graphs.append((path, g))
            report = check_files(graphs)
    except (OSError, GraphParseError, OracleLimitError, IsolatedVertexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        payload = json.loads(report.to_json())
        payload["schema"] = CHECK_SCHEMA
        print(json.dumps(payload, sort_keys=True))
    else:
        print(
            f"checked {report.count} graphs"
            f" ({report.skipped_isolated} isolated-vertex graphs skipped):"
            f" {report.disagreements} disagreements"
        )
        if report.first_disagreement:
            print(f"first disagreement: {report.first_disagreement}")
    return 0 if report.ok else 1


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        if args.family in ("i", "ii", "iii", "iv", "v"):
            spec = FamilySpec(args.family, args.n, r=args.r, a=args.a, b=args.b, c=args.c)
            g = spec.build()
        elif args.family == "random":
            g = gen_random_graph(args.n, args.p, args.seed)
        elif args.family == "split":
            if args.clique_size is None:
                print("error: gen split requires --clique-size", file=sys.stderr)
                return 2
            g = gen_random_split(args.n, args.clique_size, args.p, args.seed)
        elif args.family == "mutate":
            if args.input is None:
                print("error: gen mutate requires --input", file=sys.stderr)
                return 2
            g = mutate_edge(parse_graph(_read_input(args.input)), args.seed)
        else:
            print(f"error: unknown generator {args.family!r}", file=sys.stderr)
            return 2
    except (OSError, GraphParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    text = serialize_graph(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = []
    if args.sizes:
        try:
            sizes = [int(tok) for tok in args.sizes.split(",") if tok]
        except ValueError:
            print(f"error: --sizes must be comma-separated integers, got {args.sizes!r}", file=sys.stderr)
            return 2
    try:
        rows = run_bench(args.family, sizes, repeats=args.repeats)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = {
            "family": args.family,
            "rows": [
                {
                    "n": row.n,
                    "m": row.m,
                    "build_s": row.build_s,
                    "recognize_s": row.recognize_s,
                    "per_unit_ns": row.per_unit_s * 1e9,
                }
                for row in rows
            ],
            "per_unit_spread": ratio_spread(rows),
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{'n':>9} {'m':>12} {'build_s':>10} {'recognize_s':>12} {'ns/(n+m)':>10}")
        for row in rows:
            print(
                f"{row.n:>9} {row.m:>12} {row.build_s:>10.6f}"
                f" {row.recognize_s:>12.6f} {row.per_unit_s * 1e9:>10.1f}"
            )
        if len(rows) >= 2:
            print(f"per-unit spread across sizes: {ratio_spread(rows):.2f}x")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equisplit",
        description="Decide whether graphs are equimatchable split graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognize", help="decide one graph (file path or - for stdin)")
    p_rec.add_argument("path")
    p_rec.add_argument("--json", action="store_true", help="emit a JSON report")
    p_rec.add_argument("--strip-isolated", action="store_true", help="drop degree-0 vertices first")
    p_rec.add_argument(
        "--exit-verdict", action="store_true", help="exit 0 for YES, 1 for NO, 2 for errors"
    )
    p_rec.add_argument(
        "--witness",
        action="store_true",
        help="attach a certificate: two different-size maximal matchings for NO"
        " (graphs up to 16 vertices), the (x, y) pair for conditions iv and v",
    )
    p_rec.set_defaults(func=cmd_recognize)

    p_chk = sub.add_parser("check", help="cross-check the recognizer against brute-force oracles")
    p_chk.add_argument("paths", nargs="*", help="graph files to check")
    p_chk.add_argument("--all-n", type=int, help="exhaustively check all labeled graphs on k<=6 vertices")
    p_chk.add_argument("--count", type=int, help="number of seeded random graphs (n in 7..12)")
    p_chk.add_argument("--seed", type=int, default=0)
    p_chk.add_argument("--workers", type=int, default=1, help="worker processes")
    p_chk.add_argument("--strip-isolated", action="store_true")
    p_chk.add_argument("--json", action="store_true")
    p_chk.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="write a generated graph in the edge-list format")
    p_gen.add_argument(
        "family",
        choices=["i", "ii", "iii", "iv", "v", "random", "split", "mutate"],
    )
    p_gen.add_argument("--n", type=int, default=0)
    p_gen.add_argument("--r", type=int, help="pendant count (families iii and iv)")
    p_gen.add_argument("--a", type=int, help="family v: vertices adjacent to both x and y")
    p_gen.add_argument("--b", type=int, help="family v: clique vertices missing x")
    p_gen.add_argument("--c", type=int, help="family v: clique vertices missing y")
    p_gen.add_argument("--p", type=float, default=0.5, help="edge/attach probability")
    p_gen.add_argument("--clique-size", type=int, help="random split: clique size")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--input", help="graph file to mutate")
    p_gen.add_argument("--out", default="-", help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="time ingest+decide across instance sizes")
    p_bench.add_argument("--family", default="iii", choices=["i", "ii", "iii", "iv", "v"])
    p_bench.add_argument("--sizes", default="", help="comma-separated vertex counts")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
