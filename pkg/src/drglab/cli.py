"""Command-line front end.

Subcommands: analyze, scan, catalog, verify, walk.  Exit codes: 0 success,
1 usage or unreadable input, 2 a verdict failure (non-realizable array,
catalog mismatch, verification mismatch, walk estimate off target).

JSON output carries a top-level  "schema": 1  and is byte-stable: fixed key
order, fixed enumeration order, exact fractions as strings, decimals
rendered half-even to six places.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from .arrays import (
    IntersectionArray,
    LengthMismatch,
    MalformedInput,
    check_divisibility,
    compute_distance_distribution,
    diameter_head_bound,
    parse_intersection_array,
    validate_basic,
)
from .catalog import catalog, recompute_entry
from .circuits import (
    all_pairs_by_distance,
    build_harmonic_function,
    check_harmonicity,
    effective_resistance_oracle,
    measure_current,
    representative_pairs,
)
from .graphs import (
    BadParams,
    ExplicitGraph,
    NotConnected,
    UnknownFamily,
    bfs_distances,
    construct_named_graph,
    from_edge_list,
    verify_distance_regular,
)
from .potentials import potentials_recursive
from .rational import decimal_string
from .resistance import BiggsClass, classify_biggs, resistance_profile
from .scanner import QueryTooLarge, ScanQuery, scan
from .walks import commute_time, simulate_hitting_time, spectral_check, walk_bounds

SCHEMA = 1


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message: str):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fr(value) -> str:
    return str(Fraction(value))


def _num(value: Fraction):
    """Whole rationals as JSON numbers, everything else as 'p/q' strings."""
    f = Fraction(value)
    return int(f) if f.denominator == 1 else str(f)


def _range(text: str) -> tuple[int, int]:
    parts = text.split("..")
    if len(parts) == 1:
        lo = hi = int(parts[0])
    elif len(parts) == 2:
        lo, hi = int(parts[0]), int(parts[1])
    else:
        raise ValueError(text)
    return lo, hi


def _emit(payload: dict, table_lines: list[str], args) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = "\n".join(table_lines) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _verdict_json(verdict) -> dict:
    return {
        "array": str(verdict.array),
        "ratio_fraction": _fr(verdict.ratio),
        "ratio_decimal": decimal_string(verdict.ratio),
        "class": verdict.category.value,
        "matched_extremal": verdict.matched_extremal,
    }


# ---------------------------------------------------------------------- analyze


def _cmd_analyze(args) -> int:
    try:
        arr = parse_intersection_array(args.array)
    except (MalformedInput, LengthMismatch) as exc:
        print(f"analyze: {exc}", file=sys.stderr)
        return 1
    if arr.k <= 2:
        print("analyze: the resistance classification covers valency >= 3 only", file=sys.stderr)
        return 1

    report = validate_basic(arr)
    dist = compute_distance_distribution(arr)
    divisibility = check_divisibility(arr)
    head = diameter_head_bound(arr)

    payload = {
        "schema": SCHEMA,
        "command": "analyze",
        "array": str(arr),
        "validation": {
            "overall": report.overall,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in report.checks],
        },
        "distribution": {
            "shells": [_num(x) for x in dist.k_sizes],
            "n": _num(dist.n),
            "m": _num(dist.m),
            "edge_counts": [_num(x) for x in dist.e],
            "integral": dist.integral,
        },
        "divisibility": {"passed": divisibility.passed, "detail": divisibility.detail},
        "head_bound": {"j": head.j, "bound": head.bound, "passed": head.passed},
    }
    lines = [
        f"array            {arr}",
        f"validation       {'pass' if report.overall else 'FAIL: ' + '; '.join(c.detail for c in report.failed())}",
        f"shells           {[str(x) for x in dist.k_sizes]}  n={dist.n}  m={dist.m}  integral={dist.integral}",
        f"divisibility     {'pass' if divisibility.passed else 'FAIL'} ({divisibility.detail})",
        f"head bound       j={head.j} D<={head.bound} {'pass' if head.passed else 'FAIL'}",
    ]

    if not (report.overall and dist.shells_integral):
        payload["verdict"] = None
        payload["realizable"] = False
        lines.append("verdict          INFEASIBLE (fails structural or shell-integrality screens)")
        _emit(payload, lines, args)
        return 2

    p = potentials_recursive(arr)
    profile = resistance_profile(arr)
    verdict = classify_biggs(arr)
    bounds = walk_bounds(arr)
    payload["potentials"] = {
        "fractions": [_fr(x) for x in p.phi],
        "decimals": [decimal_string(x) for x in p.phi],
        "source": p.source,
    }
    payload["resistance"] = {
        "d": [_fr(x) for x in profile.d],
        "d_decimals": [decimal_string(x) for x in profile.d],
        "ratio": _fr(profile.ratio),
        "ratio_decimal": decimal_string(profile.ratio),
        "K_factor": _fr(profile.K_factor),
    }
    payload["verdict"] = _verdict_json(verdict)
    payload["walk_bounds"] = {
        "array": str(arr),
        "n": bounds.n,
        "m": _num(bounds.m),
        "commute_times": [_fr(x) for x in bounds.commute_times],
        "hitting_bound": bounds.hitting_bound,
        "commute_bound": bounds.commute_bound,
        "cover_bound_dominant": bounds.cover_bound_dominant,
        "spectral_lower_bound": _fr(bounds.spectral_lower_bound),
    }
    lines.append(f"potentials       {[str(x) for x in p.phi]}")
    lines.append(f"resistances      {[str(x) for x in profile.d]}")
    lines.append(f"ratio            {profile.ratio} = {decimal_string(profile.ratio)}")
    lines.append(f"verdict          {verdict.category.value}" + (f" ({verdict.matched_extremal})" if verdict.matched_extremal else ""))
    lines.append(f"commute times    {[str(x) for x in bounds.commute_times]}  cap {bounds.commute_bound}")
    _emit(payload, lines, args)
    return 2 if verdict.category is BiggsClass.VIOLATION else 0


# ------------------------------------------------------------------------- scan


def _record_json(record) -> dict:
    return {
        "array": str(record.array),
        "n": _num(record.n),
        "ratio": None if record.ratio is None else _fr(record.ratio),
        "ratio_decimal": None if record.ratio is None else decimal_string(record.ratio),
        "first_failing_check": record.first_failing_check,
        "class": None if record.verdict is None else record.verdict.category.value,
        "matched_extremal": None if record.verdict is None else record.verdict.matched_extremal,
    }


def _cmd_scan(args) -> int:
    try:
        k_lo, k_hi = _range(args.k)
        d_lo, d_hi = _range(args.diameter)
    except ValueError:
        print("scan: ranges look like A..B or a single integer", file=sys.stderr)
        return 1
    try:
        query = ScanQuery(k_lo, k_hi, d_lo, d_hi, n_max=args.n_max, budget=args.budget)
        records = scan(query, jobs=args.jobs)
    except (ValueError, QueryTooLarge) as exc:
        print(f"scan: {exc}", file=sys.stderr)
        return 1

    shown = [r for r in records if r.ruled_out_by_biggs_alone] if args.only_biggs else records
    biggs_only = [str(r.array) for r in records if r.ruled_out_by_biggs_alone]
    payload = {
        "schema": SCHEMA,
        "command": "scan",
        "query": {
            "k": [k_lo, k_hi],
            "diameter": [d_lo, d_hi],
            "n_max": args.n_max,
            "only_biggs": bool(args.only_biggs),
        },
        "records": [_record_json(r) for r in shown],
        "ruled_out_by_biggs_alone": biggs_only,
    }
    lines = [f"{'array':42s} {'n':>6s} {'first_failing':14s} {'ratio':>10s} class"]
    for r in shown:
        ratio = decimal_string(r.ratio) if r.ratio is not None else "-"
        cls = r.verdict.category.value if r.verdict else "-"
        lines.append(f"{str(r.array):42s} {str(_num(r.n)):>6s} {r.first_failing_check:14s} {ratio:>10s} {cls}")
    lines.append(f"total {len(shown)} record(s); {len(biggs_only)} ruled out by the resistance bound alone")
    _emit(payload, lines, args)
    return 0


# ---------------------------------------------------------------------- catalog


def _cmd_catalog(args) -> int:
    mismatch = False
    entries = []
    lines = [f"{'name':34s} {'array':42s} {'n':>5s} {'ratio':>9s}  table"]
    for entry in catalog():
        item = {
            "table": entry.table,
            "name": entry.name,
            "aliases": list(entry.aliases),
            "array": str(entry.array),
            "vertices": entry.vertices,
            "ratio": entry.printed_ratio,
            "extremal": entry.extremal,
            "has_explicit_construction": entry.has_explicit_construction,
        }
        mark = ""
        if args.recompute:
            recomputed = recompute_entry(entry)
            item["recomputed_n"] = recomputed.n
            item["recomputed_ratio"] = _fr(recomputed.ratio)
            item["recomputed_ratio_rendered"] = recomputed.ratio_rendered
            item["matches"] = recomputed.matches
            if not recomputed.matches:
                mismatch = True
                mark = "  MISMATCH"
        entries.append(item)
        lines.append(
            f"{entry.name:34s} {str(entry.array):42s} {entry.vertices:>5d} {entry.printed_ratio:>9s}  {entry.table}{mark}"
        )
    payload = {"schema": SCHEMA, "command": "catalog", "recompute": bool(args.recompute), "entries": entries}
    _emit(payload, lines, args)
    return 2 if mismatch else 0


# ----------------------------------------------------------------------- verify


def _load_graph(args) -> tuple[ExplicitGraph, dict]:
    if args.edges:
        with open(args.edges, encoding="utf-8") as handle:
            graph = from_edge_list(handle.read())
        origin = {"source": "edges", "path": args.edges}
    elif args.family:
        graph = construct_named_graph(args.family, args.params)
        origin = {"source": "family", "family": args.family, "params": list(args.params)}
    else:
        raise BadParams("give a family name or --edges FILE")
    if graph.n < 2:
        raise BadParams("need at least two vertices")
    return graph, origin


def _cmd_verify(args) -> int:
    try:
        graph, origin = _load_graph(args)
    except (UnknownFamily, BadParams, NotConnected, OSError, ValueError) as exc:
        print(f"verify: {exc}", file=sys.stderr)
        return 1

    payload = {"schema": SCHEMA, "command": "verify", "graph": origin, "n": graph.n, "m": graph.m}
    lines = [f"graph            n={graph.n} m={graph.m}"]

    verified = verify_distance_regular(graph)
    if not isinstance(verified, IntersectionArray):
        payload["distance_regular"] = False
        payload["failure"] = str(verified)
        lines.append(f"distance-regular NO: {verified}")
        _emit(payload, lines, args)
        return 2
    payload["distance_regular"] = True
    payload["array"] = str(verified)
    lines.append(f"array            {verified}")

    overall = True

    p = potentials_recursive(verified)
    u = 0
    v = graph.adjacency[0][0]
    assignment = build_harmonic_function(graph, u, v, p)
    residual = check_harmonicity(graph, assignment)
    current = measure_current(graph, assignment)
    harmonic_ok = residual == 0
    current_ok = current == assignment.expected_current
    overall &= harmonic_ok and current_ok
    payload["harmonic"] = {
        "pair": [u, v],
        "max_residual": _fr(residual),
        "residual_zero": harmonic_ok,
        "current": _fr(current),
        "expected_current": assignment.expected_current,
        "current_matches": current_ok,
    }
    lines.append(f"harmonic         residual={residual} current={current}/{assignment.expected_current}")

    profile = resistance_profile(verified)
    oracle_rows = []
    if args.exhaustive:
        classes = all_pairs_by_distance(graph)
    else:
        classes = {j: [pair] for j, pair in representative_pairs(graph).items()}
    for j, pairs in classes.items():
        for pair in pairs:
            measured = effective_resistance_oracle(graph, *pair)
            equal = measured == profile.at(j)
            overall &= equal
            oracle_rows.append(
                {"distance": j, "pair": list(pair), "oracle": _fr(measured), "formula": _fr(profile.at(j)), "equal": equal}
            )
    payload["oracle"] = oracle_rows
    for row in oracle_rows:
        lines.append(
            f"resistance d_{row['distance']}   pair {tuple(row['pair'])} oracle={row['oracle']} formula={row['formula']} {'ok' if row['equal'] else 'MISMATCH'}"
        )

    spectral = spectral_check(graph, verified)
    overall &= spectral.sigma_holds and spectral.middle_holds
    payload["spectral"] = {
        "sigma": spectral.sigma,
        "resistance_gap_bound": _fr(spectral.resistance_gap_bound),
        "spectral_lower_bound": _fr(spectral.spectral_lower_bound),
        "sigma_holds": spectral.sigma_holds,
        "middle_holds": spectral.middle_holds,
    }
    lines.append(
        f"spectral         sigma={spectral.sigma:.8f} >= {spectral.resistance_gap_bound} >= {spectral.spectral_lower_bound}"
        f" {'ok' if spectral.sigma_holds and spectral.middle_holds else 'MISMATCH'}"
    )

    payload["overall"] = overall
    lines.append(f"overall          {'pass' if overall else 'FAIL'}")
    _emit(payload, lines, args)
    return 0 if overall else 2


# ------------------------------------------------------------------------- walk


def _cmd_walk(args) -> int:
    try:
        graph, origin = _load_graph(args)
    except (UnknownFamily, BadParams, NotConnected, OSError, ValueError) as exc:
        print(f"walk: {exc}", file=sys.stderr)
        return 1
    verified = verify_distance_regular(graph)
    if not isinstance(verified, IntersectionArray):
        print(f"walk: graph is not distance-regular: {verified}", file=sys.stderr)
        return 2
    if not 1 <= args.from_distance <= verified.D:
        print(f"walk: --from-distance must lie in 1..{verified.D}", file=sys.stderr)
        return 1

    dist = bfs_distances(graph, 0)
    target = dist.index(args.from_distance)
    estimate = simulate_hitting_time(graph, 0, target, args.trials, args.seed)
    expected = commute_time(verified, args.from_distance) / 2
    gap = abs(estimate.mean - float(expected))
    within = gap <= 3 * estimate.stderr
    payload = {
        "schema": SCHEMA,
        "command": "walk",
        "graph": origin,
        "array": str(verified),
        "from_distance": args.from_distance,
        "pair": [0, target],
        "trials": estimate.trials,
        "seed": estimate.seed,
        "mean": estimate.mean,
        "stderr": estimate.stderr,
        "expected": _fr(expected),
        "expected_decimal": decimal_string(expected),
        "within_3_stderr": within,
    }
    lines = [
        f"graph            {origin}",
        f"pair             (0, {target}) at distance {args.from_distance}",
        f"estimate         mean={estimate.mean:.4f} stderr={estimate.stderr:.4f} ({estimate.trials} trials, seed {estimate.seed})",
        f"expected         {expected} = {decimal_string(expected)}",
        f"within 3 stderr  {'yes' if within else 'NO'}",
    ]
    _emit(payload, lines, args)
    return 0 if within else 2


# ------------------------------------------------------------------------ parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="drglab", description="Exact resistance analysis of distance-regular graph parameters.")
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--output", metavar="PATH", default=None)

    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", parents=[common], help="full report for one intersection array")
    p_analyze.add_argument("array", help='array text, e.g. "(3,2,1;1,2,3)"')
    p_analyze.set_defaults(func=_cmd_analyze)

    p_scan = sub.add_parser("scan", parents=[common], help="enumerate candidates and run the feasibility pipeline")
    p_scan.add_argument("--k", required=True, metavar="A..B", help="valency range (lower bound >= 3)")
    p_scan.add_argument("--diameter", required=True, metavar="C..E", help="diameter range")
    p_scan.add_argument("--n-max", type=int, default=None, help="drop candidates above this vertex count")
    p_scan.add_argument("--only-biggs", action="store_true", help="print only arrays ruled out by the resistance bound alone")
    p_scan.add_argument("--jobs", type=int, default=1, help="parallel workers (output identical regardless)")
    p_scan.add_argument("--budget", type=int, default=10**8, help="raw candidate budget before refusing")
    p_scan.set_defaults(func=_cmd_scan)

    p_catalog = sub.add_parser("catalog", parents=[common], help="print the embedded catalog")
    p_catalog.add_argument("--recompute", action="store_true", help="recompute counts and ratios; exit 2 on mismatch")
    p_catalog.set_defaults(func=_cmd_catalog)

    p_verify = sub.add_parser("verify", parents=[common], help="construct or load a graph and ground every formula on it")
    p_verify.add_argument("family", nargs="?", default=None)
    p_verify.add_argument("params", nargs="*", type=int)
    p_verify.add_argument("--edges", metavar="FILE", default=None, help="edge-list file: 'n m' then one 'a b' line per edge")
    p_verify.add_argument("--exhaustive", action="store_true", help="check every pair (n <= 32), not one per distance")
    p_verify.set_defaults(func=_cmd_verify)

    p_walk = sub.add_parser("walk", parents=[common], help="Monte Carlo hitting time against the exact formula")
    p_walk.add_argument("family", nargs="?", default=None)
    p_walk.add_argument("params", nargs="*", type=int)
    p_walk.add_argument("--edges", metavar="FILE", default=None)
    p_walk.add_argument("--from-distance", type=int, required=True, metavar="J")
    p_walk.add_argument("--trials", type=int, default=100000)
    p_walk.add_argument("--seed", type=int, default=0)
    p_walk.set_defaults(func=_cmd_walk)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
