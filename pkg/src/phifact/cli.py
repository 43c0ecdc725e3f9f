"""Command-line front end: pair solving, proportion tables, figure datasets,
claim verification, witness search, range scans, and the pair cache."""

import argparse
import json
import os
import sys

from fractions import Fraction

from . import dickson, experiments, verifiers
from .phi_factorial import PairResult, TableExhausted, solve_pair, table_for_pairs

_CACHE_ENV = "PHIFACT_CACHE"


def _int_list(text: str) -> list:
    try:
        return [int(x) for x in text.split(",") if x != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _report_line(r: verifiers.VerificationReport) -> str:
    status = "PASS" if r.passed else "FAIL"
    line = f"{status} {r.claim_id} checked={r.checked_count}"
    if r.notes:
        line += f" | {r.notes}"
    if r.counterexamples:
        line += f" | first counterexample: {r.counterexamples[0]}"
    return line


def _emit_reports(args, reports) -> int:
    if getattr(args, "out", None):
        verifiers.write_reports(args.out, reports)
        print(f"wrote {len(reports)} report(s) to {args.out}", file=sys.stderr)
    for r in reports:
        if args.json:
            _print_json(r.to_dict())
        else:
            print(_report_line(r))
    return 0 if all(r.passed for r in reports) else 1


def _emit_csv(args, header, rows) -> None:
    if getattr(args, "out", None):
        if args.json:
            text = "".join(
                json.dumps(dict(zip(header, row)), sort_keys=True) + "\n" for row in rows
            )
            verifiers.atomic_write_text(args.out, text)
        else:
            experiments.write_csv(args.out, header, rows)
        print(f"wrote {len(rows)} row(s) to {args.out}", file=sys.stderr)
        return
    if args.json:
        for row in rows:
            _print_json(dict(zip(header, row)))
    else:
        print(",".join(header))
        for row in rows:
            print(",".join(str(x) for x in row))


def _cmd_pair(args) -> int:
    table = table_for_pairs(max(args.a, args.b))
    res = solve_pair(args.a, args.b, table)
    dec = experiments.decimal_str(res.c, res.a + res.b, 6)
    if args.json:
        _print_json(
            {
                "a": res.a,
                "b": res.b,
                "sum": res.a + res.b,
                "c": res.c,
                "r_num": res.r.numerator,
                "r_den": res.r.denominator,
                "r_dec": dec,
            }
        )
    else:
        print(f"c={res.c} r={res.r.numerator}/{res.r.denominator} ({dec})")
    return 0


def _cmd_table1(args) -> int:
    mode = "unordered" if args.unordered else args.mode
    props = experiments.table1_proportions(args.n, mode=mode, jobs=args.jobs)
    _emit_csv(args, experiments.TABLE1_HEADER, experiments.table1_rows(props, mode=mode))
    return 0


def _cmd_fig1(args) -> int:
    rows = experiments.figure1_rows(args.n, jobs=args.jobs)
    _emit_csv(args, experiments.PAIRS_HEADER, rows)
    return 0


def _cmd_fig2(args) -> int:
    rows = experiments.figure2_rows(args.max)
    _emit_csv(args, experiments.FIG2_HEADER, rows)
    return 0


def _cmd_verify(args) -> int:
    claim = args.claim
    reports = []
    if claim == "lemma2":
        reports.append(verifiers.check_lemma2_ratio(q=args.q, x=args.x))
    elif claim == "lemma6":
        reports.append(verifiers.check_lemma6(a_max=args.a_max, q_max=args.q_max))
    elif claim == "lemma7":
        if args.d is not None:
            reports.append(verifiers.check_lemma7(args.d, n=args.n))
        else:
            reports.append(verifiers.check_lemma7_sweep(d_max=args.d_max, n=args.n))
    elif claim == "lemma8":
        reports.append(verifiers.check_lemma8_residues(k_max=args.k_max))
    elif claim == "prop10":
        for k in args.k:
            _, rep = verifiers.construct_prop10_pair(args.a, k)
            reports.append(rep)
    elif claim == "identity":
        for a in args.a:
            reports.append(verifiers.check_phi_identity(a))
    elif claim == "floor":
        reports.append(verifiers.check_floor_identity(sample_max=args.max))
    return _emit_reports(args, reports)


def _cmd_dickson(args) -> int:
    if args.action == "search":
        witnesses = dickson.search_witnesses(
            args.limit, max_count=args.max_count, fast_lane=args.fast_lane
        )
        for w in witnesses:
            if args.json:
                _print_json({"q": w.q, "n": w.n})
            else:
                print(f"q={w.q} n={w.n}")
        print(f"{len(witnesses)} witness(es) up to {args.limit}", file=sys.stderr)
        return 0
    reports = [dickson.verify_witness_facts(args.q)]
    reports.append(dickson.check_theorem5(args.q, max_q=args.max_q).to_verification_report())
    return _emit_reports(args, reports)


def _cmd_scan(args) -> int:
    if args.kind == "theorem2":
        report = experiments.scan_theorem2(args.min, args.max, jobs=args.jobs)
        return _emit_reports(args, [report])
    rows = experiments.scan_lower_bound(args.min, args.max, jobs=args.jobs)
    _emit_csv(args, experiments.LOWER_HEADER, rows)
    return 0


def _cache_path(args) -> str:
    path = args.path or os.environ.get(_CACHE_ENV)
    if not path:
        raise ValueError(f"no cache path: pass --path or set {_CACHE_ENV}")
    return path


def _cmd_cache(args) -> int:
    path = _cache_path(args)
    if args.action == "store":
        grid = experiments.solve_grid(args.n, jobs=args.jobs)
        results = [
            PairResult(a=a, b=b, c=int(grid[a, b]), r=Fraction(int(grid[a, b]), a + b))
            for a in range(1, args.n + 1)
            for b in range(a, args.n + 1)
        ]
        experiments.cache_store(path, results)
        print(f"stored {len(results)} pair(s) in {path}", file=sys.stderr)
        return 0
    if args.action == "load":
        results = experiments.cache_load(path, verify=args.verify)
        print(f"loaded {len(results)} pair(s) from {path}", file=sys.stderr)
        if args.json:
            for r in results:
                _print_json({"a": r.a, "b": r.b, "c": r.c})
        return 0
    report = experiments.cache_verify(path, strict=args.strict)
    return _emit_reports(args, [report])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phifact",
        description="Least c with phi(a!) * phi(b!) dividing phi(c!): solver, "
        "datasets, and mechanical verification of the finite claims.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON/JSONL instead of text")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=1, help="worker processes for grid solves")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", parents=[common], help="solve one pair")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(func=_cmd_pair)

    p = sub.add_parser("table1", parents=[common, jobs], help="proportion of pairs with c > a + b")
    p.add_argument("--n", type=_int_list, default=[100, 200], help="comma-separated N values")
    p.add_argument("--mode", choices=list(experiments.TABLE1_MODES), default="mirrored",
                   help="pair-counting convention")
    p.add_argument("--unordered", action="store_true", help="shorthand for --mode unordered")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("fig1", parents=[common, jobs], help="all pairs a, b <= N as CSV")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_fig1)

    p = sub.add_parser("fig2", parents=[common], help="diagonal ratio series as CSV")
    p.add_argument("--max", type=int, required=True, help="largest n for the pair (n, n)")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_fig2)

    p = sub.add_parser("verify", parents=[common], help="run one mechanical claim check")
    p.add_argument(
        "claim",
        choices=["lemma2", "lemma6", "lemma7", "lemma8", "prop10", "identity", "floor"],
    )
    p.add_argument("--q", type=int, default=2, help="lemma2: prime whose exponent is tracked")
    p.add_argument("--x", type=int, default=10**6, help="lemma2: cutoff for primes p < x")
    p.add_argument("--a-max", type=int, default=10**5, help="lemma6: largest a swept")
    p.add_argument("--q-max", type=int, default=50, help="lemma6: largest prime q swept")
    p.add_argument("--d", type=int, default=None, help="lemma7: single progression difference")
    p.add_argument("--d-max", type=int, default=1000, help="lemma7: sweep differences up to this")
    p.add_argument("--n", type=int, default=500, help="lemma7: progression length")
    p.add_argument("--k-max", type=int, default=173, help="lemma8: largest k checked")
    p.add_argument("--a", type=_int_list, default=None, help="prop10/identity: a value(s)")
    p.add_argument("--k", type=_int_list, default=[2, 3, 4], help="prop10: multiplier k value(s)")
    p.add_argument("--max", type=int, default=10**4, help="floor: largest a swept")
    p.add_argument("--out", help="also write reports as JSONL here")
    p.set_defaults(func=_cmd_verify_dispatch)

    p = sub.add_parser("dickson", parents=[common], help="witness search and the diagonal bound")
    p.add_argument("action", choices=["search", "check"])
    p.add_argument("--limit", type=int, default=1000, help="search: scan primes up to this")
    p.add_argument("--max-count", type=int, default=None, help="search: stop after this many")
    p.add_argument("--fast-lane", action="store_true", help="search: restrict to q = 54 mod 77")
    p.add_argument("--q", type=int, default=131, help="check: the witness to verify")
    p.add_argument("--max-q", type=int, default=5000, help="check: refuse larger witnesses")
    p.add_argument("--out", help="also write reports as JSONL here")
    p.set_defaults(func=_cmd_dickson)

    p = sub.add_parser("scan", parents=[common, jobs], help="range scans of the ceiling and floor")
    p.add_argument("kind", choices=["theorem2", "lower"])
    p.add_argument("--min", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--out", help="write output here instead of stdout")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("cache", parents=[common, jobs], help="store, load, or verify solved pairs")
    p.add_argument("action", choices=["store", "load", "verify"])
    p.add_argument("--path", default=None, help=f"CSV path (default: ${_CACHE_ENV})")
    p.add_argument("--n", type=int, default=100, help="store: solve all pairs a <= b <= n")
    p.add_argument("--verify", choices=["off", "spot", "strict"], default="spot",
                   help="load: how much re-solving to do")
    p.add_argument("--strict", action="store_true", help="verify: re-solve every row")
    p.set_defaults(func=_cmd_cache)

    return parser


def _cmd_verify_dispatch(args) -> int:
    if args.claim == "prop10" and args.a is None:
        args.a = [5]
    if args.claim == "identity" and args.a is None:
        args.a = [4, 5, 6, 7]
    if args.claim == "prop10":
        args.a = args.a[0] if isinstance(args.a, list) else args.a
    return _cmd_verify(args)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TableExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
