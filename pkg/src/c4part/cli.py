"""Command-line driver: solve, generators, oracle wrappers, cross-validation, bench.

Exit codes: 0 feasible/success, 2 four-cycle found, 3 degree violation,
4 diagnostic, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from . import oracle as oracle_mod
from .constructions import er_polarity, named_graph, random_c4_free
from .formats import (
    FormatError,
    SolveReport,
    demand_summary,
    detect_and_parse,
    encode_graph6,
    format_edge_list,
    parse_demands,
)
from .graph import Graph, GraphError, find_four_cycle
from .solver import (
    C4Witness,
    Certificate,
    DegreeViolation,
    Diagnostic,
    FeasiblePartition,
    disjoint_cycles,
    k_way,
    solve_with_stats,
    verify_feasible,
)

EXIT_OK = 0
EXIT_C4 = 2
EXIT_DEGREE = 3
EXIT_DIAGNOSTIC = 4
EXIT_USAGE = 64

_STATUS_EXIT = {
    "feasible": EXIT_OK,
    "c4": EXIT_C4,
    "degree_violation": EXIT_DEGREE,
    "diagnostic": EXIT_DIAGNOSTIC,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: A003 - argparse API
        raise _UsageError(message)


def _read_graph(path: str, stdin: str | None = None) -> Graph:
    if path == "-":
        text = stdin if stdin is not None else sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    return detect_and_parse(text)


def _load_demands(args, n: int) -> tuple[list[int], list[int]]:
    doc: dict = {}
    if args.demands:
        with open(args.demands, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    if args.a_const is not None:
        doc["a_const"] = args.a_const
        doc.pop("a", None)
    if args.b_const is not None:
        doc["b_const"] = args.b_const
        doc.pop("b", None)
    if args.a_file:
        with open(args.a_file, "r", encoding="utf-8") as fh:
            doc["a"] = json.load(fh)
        doc.pop("a_const", None)
    if args.b_file:
        with open(args.b_file, "r", encoding="utf-8") as fh:
            doc["b"] = json.load(fh)
        doc.pop("b_const", None)
    return parse_demands(doc, n)


def _demand_args(sub) -> None:
    sub.add_argument("--a-const", type=int, default=None, help="constant demand for the a-side")
    sub.add_argument("--b-const", type=int, default=None, help="constant demand for the b-side")
    sub.add_argument("--demands", default=None, help="JSON demand document with a/b or a_const/b_const")
    sub.add_argument("--a-file", default=None, help="JSON array of per-vertex a demands")
    sub.add_argument("--b-file", default=None, help="JSON array of per-vertex b demands")


def _certificate_report(g: Graph, a, b, cert: Certificate, stats, elapsed_ms: float) -> SolveReport:
    rep = SolveReport(
        status=cert.status,
        n=g.n,
        m=g.m,
        demand_summary=demand_summary(a, b),
        stats=stats.as_dict(),
        wall_time_ms=elapsed_ms,
    )
    if isinstance(cert, FeasiblePartition):
        rep.partition = {"a": list(cert.a_side), "b": list(cert.b_side)}
    elif isinstance(cert, C4Witness):
        rep.witness = list(cert.cycle.vertices)
    elif isinstance(cert, DegreeViolation):
        rep.violation = {"vertex": cert.vertex, "degree": cert.degree, "required": cert.required}
    elif isinstance(cert, Diagnostic):
        rep.diagnostic = {"reason": cert.reason, "trace_tail": list(cert.trace)[-50:]}
    return rep


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    a, b = _load_demands(args, g.n)
    t0 = time.perf_counter()
    cert, stats = solve_with_stats(g, a, b)
    elapsed = (time.perf_counter() - t0) * 1000.0
    rep = _certificate_report(g, a, b, cert, stats, elapsed)
    if isinstance(cert, Diagnostic) and args.fallback == "oracle" and g.n <= 24:
        found = oracle_mod.exists_feasible(g, a, b)
        if found is not None:
            rep.status = "feasible"
            rep.partition = {"a": sorted(found[0]), "b": sorted(found[1])}
            rep.fallback = {"used": "oracle", "note": "partition found by exhaustive search after a diagnostic"}
        else:
            rep.fallback = {"used": "oracle", "note": "exhaustive search found no feasible partition"}
    print(rep.to_json())
    print(f"c4part solve: {rep.status} (n={g.n}, m={g.m})", file=sys.stderr)
    return _STATUS_EXIT[rep.status]


def _cmd_check_c4(args) -> int:
    g = _read_graph(args.graph)
    cyc = find_four_cycle(g)
    out = {"n": g.n, "m": g.m, "four_cycle": list(cyc.vertices) if cyc else None}
    print(json.dumps(out, sort_keys=True))
    return EXIT_C4 if cyc else EXIT_OK


def _cmd_gen(args) -> int:
    if args.family == "polarity":
        if args.q is None:
            raise _UsageError("gen polarity needs --q")
        g = er_polarity(args.q).graph
    elif args.family == "named":
        if not args.name:
            raise _UsageError("gen named needs a graph name")
        g = named_graph(args.name)
    elif args.family == "random":
        if args.n is None or args.m is None:
            raise _UsageError("gen random needs --n and --m")
        g = random_c4_free(args.n, args.m, args.seed)
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown family {args.family}")
    if args.format == "edgelist":
        sys.stdout.write(format_edge_list(g))
    else:
        print(encode_graph6(g))
    return EXIT_OK


def _cmd_kway(args) -> int:
    g = _read_graph(args.graph)
    sizes = [int(s) for s in args.sizes.split(",") if s]
    res = k_way(g, sizes)
    if isinstance(res, list):
        print(json.dumps({"status": "ok", "parts": [sorted(p) for p in res]}, sort_keys=True))
        return EXIT_OK
    print(json.dumps({"status": res.status}, sort_keys=True))
    return _STATUS_EXIT[res.status]


def _cmd_cycles(args) -> int:
    g = _read_graph(args.graph)
    res = disjoint_cycles(g, args.k)
    if isinstance(res, list):
        print(json.dumps({"status": "ok", "cycles": res}, sort_keys=True))
        return EXIT_OK
    print(json.dumps({"status": res.status}, sort_keys=True))
    return _STATUS_EXIT[res.status]


def _cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    a, b = _load_demands(args, g.n)
    found = oracle_mod.exists_feasible(g, a, b)
    out = {
        "n": g.n,
        "m": g.m,
        "feasible": found is not None,
        "partition": {"a": sorted(found[0]), "b": sorted(found[1])} if found else None,
    }
    print(json.dumps(out, sort_keys=True))
    return EXIT_OK


def _cmd_tightness(args) -> int:
    g = _read_graph(args.graph)
    if args.search:
        found = oracle_mod.search_tight_functions(g)
        out = {
            "n": g.n,
            "instances": len(found),
            "examples": [{"a": list(t.a), "b": list(t.b)} for t in found[:5]],
        }
        print(json.dumps(out, sort_keys=True))
        return EXIT_OK
    a, b = _load_demands(args, g.n)
    inst = oracle_mod.TightnessInstance(graph=g, a=tuple(a), b=tuple(b))
    tight = oracle_mod.verify_tightness(inst)
    print(json.dumps({"n": g.n, "tight": tight}, sort_keys=True))
    return EXIT_OK


def _cmd_crosscheck(args) -> int:
    grid = []
    for tok in args.grid.replace(";", " ").split():
        av, bv = tok.split(",")
        grid.append((int(av), int(bv)))
    t0 = time.perf_counter()
    rep = oracle_mod.crosscheck(n_max=args.n_max, grid=grid, allow_n8=args.allow_n8, workers=args.workers)
    elapsed = (time.perf_counter() - t0) * 1000.0
    out = {"report": rep.as_dict(), "timing": {"wall_time_ms": round(elapsed, 3)}}
    print(json.dumps(out, sort_keys=True, indent=2))
    print(
        f"c4part crosscheck: {rep.c4_free_count} C4-free graphs, "
        f"{rep.discrepancy_count} discrepancies",
        file=sys.stderr,
    )
    return EXIT_OK if rep.discrepancy_count == 0 else 1


def _cmd_bench(args) -> int:
    rows = []
    worst = EXIT_OK
    for tok in args.q.split(","):
        q = int(tok)
        pg = er_polarity(q)
        g = pg.graph
        a_val = args.a_const if args.a_const is not None else -(-q // 2)  # ceil(q/2)
        b_val = args.b_const if args.b_const is not None else -(-q // 2)
        if a_val < 2 or b_val < 2 or a_val + b_val - 1 > q:
            raise _UsageError(
                f"bench demands a={a_val}, b={b_val} invalid for q={q}: need a,b >= 2 and a+b-1 <= q"
            )
        t0 = time.perf_counter()
        cert, stats = solve_with_stats(g, [a_val] * g.n, [b_val] * g.n)
        elapsed = (time.perf_counter() - t0) * 1000.0
        verified = isinstance(cert, FeasiblePartition) and verify_feasible(
            g, [a_val] * g.n, [b_val] * g.n, (cert.a_side, cert.b_side)
        )
        rows.append(
            {
                "q": q,
                "n": g.n,
                "m": g.m,
                "a": a_val,
                "b": b_val,
                "status": cert.status,
                "verified": verified,
                "stats": stats.as_dict(),
                "wall_time_ms": round(elapsed, 3),
            }
        )
        worst = max(worst, _STATUS_EXIT[cert.status])
    print(json.dumps({"seed": args.seed, "runs": rows}, sort_keys=True, indent=2))
    return worst


def _build_parser() -> _Parser:
    p = _Parser(prog="c4part", description="Degree-constrained bipartitioning of C4-free graphs, with certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one instance and emit a report")
    sp.add_argument("--graph", default="-", help="graph file (graph6 or edge list); '-' for stdin")
    _demand_args(sp)
    sp.add_argument("--fallback", choices=["oracle"], default=None, help="on a diagnostic, fall back to exhaustive search (n <= 24)")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("check-c4", help="report the first 4-cycle, if any")
    sp.add_argument("--graph", default="-")
    sp.set_defaults(func=_cmd_check_c4)

    sp = sub.add_parser("gen", help="emit a generated graph")
    sp.add_argument("family", choices=["polarity", "named", "random"])
    sp.add_argument("name", nargs="?", default=None, help="graph name for 'named'")
    sp.add_argument("--q", type=int, default=None, help="prime order for 'polarity'")
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--m", type=int, default=None, help="target edge count for 'random'")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("kway", help="split into k parts with given minimum degrees")
    sp.add_argument("--graph", default="-")
    sp.add_argument("--sizes", required=True, help="comma-separated demands, e.g. 3,3,3")
    sp.set_defaults(func=_cmd_kway)

    sp = sub.add_parser("cycles", help="k vertex-disjoint cycles")
    sp.add_argument("--graph", default="-")
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=_cmd_cycles)

    sp = sub.add_parser("oracle", help="exhaustive feasibility search (n <= 24)")
    sp.add_argument("--graph", default="-")
    _demand_args(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("tightness", help="verify or search tight demand functions")
    sp.add_argument("--graph", default="-")
    sp.add_argument("--search", action="store_true", help="search all tight demand pairs (n <= 16)")
    _demand_args(sp)
    sp.set_defaults(func=_cmd_tightness)

    sp = sub.add_parser("crosscheck", help="solver vs oracle over all small C4-free graphs")
    sp.add_argument("--n-max", type=int, default=5)
    sp.add_argument("--grid", default="2,2", help="space- or ';'-separated a,b pairs")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--allow-n8", action="store_true")
    sp.set_defaults(func=_cmd_crosscheck)

    sp = sub.add_parser("bench", help="time solve on polarity graphs")
    sp.add_argument("--q", required=True, help="comma-separated primes")
    sp.add_argument("--a-const", type=int, default=None)
    sp.add_argument("--b-const", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0, help="echoed into the report for provenance")
    sp.set_defaults(func=_cmd_bench)
    return p


def run_cli(argv: Sequence[str], stdin: str | None = None) -> int:
    """Entry point as a function; returns the exit status. An explicit
    `stdin` string stands in for the process stream (used by tests)."""
    import io

    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        if stdin is None:
            return args.func(args)
        real = sys.stdin
        sys.stdin = io.StringIO(stdin)
        try:
            return args.func(args)
        finally:
            sys.stdin = real
    except _UsageError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, GraphError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
