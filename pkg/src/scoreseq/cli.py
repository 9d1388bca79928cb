"""Command-line front end.

Subcommands:

* ``bounds``       print n, e, f, g and the f-search window for a sequence
* ``test``         decide realizability for a given pair window (a, b)
* ``reconstruct``  build a witness matrix (naive / pigeonhole / minimax)
* ``verify``       check a matrix file against scores and a window
* ``oracle``       exhaustively enumerate realizations of a small sequence
* ``sweep``        compare the fast formulas against exhaustion
* ``bench``        time the core operations on seeded random sequences

Scores are given inline (``--scores 9,9,19,20,32,34``, commas or spaces)
or in a file (``--scores-file``), unsorted input accepted.  Matrices are
plain CSV: n lines of n comma-separated nonnegative integers with a zero
diagonal.  Data goes to stdout, diagnostics to stderr.  Exit codes: 0 ok,
1 negative answer (not realizable / invalid matrix / sweep mismatch),
2 usage or input error, 3 oracle budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
import zlib
from typing import Sequence

from .analysis import bound_e, extremal_summary, interval_test, min_f
from .construct import mini_max, naive_construct, pigeonhole_construct
from .core import (
    IntervalParams,
    MatrixStats,
    OracleBudgetExceeded,
    PointMatrix,
    RealizationReport,
    ScoreSequence,
    TournamentError,
    matrix_stats,
    normalize_sequence,
    verify_realization,
)
from .oracle import DEFAULT_BUDGET, enumerate_extremes, sweep

BUDGET_ENV_VAR = "SCORESEQ_ORACLE_BUDGET"

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def parse_scores_text(text: str) -> list[int]:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("no scores given")
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"scores must be integers, got {text!r}") from None


def read_matrix_file(path: str) -> PointMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh if line.strip()]
    if not lines:
        raise ValueError(f"matrix file {path} is empty")
    rows = []
    for lineno, line in enumerate(lines, start=1):
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError:
            raise ValueError(f"{path}:{lineno}: matrix entries must be integers") from None
    return PointMatrix.from_rows(rows)


def _load_scores(args: argparse.Namespace) -> list[int]:
    if args.scores is not None:
        return parse_scores_text(args.scores)
    with open(args.scores_file, "r", encoding="utf-8") as fh:
        return parse_scores_text(fh.read())


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def _matrix_csv(M: PointMatrix) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in M.entries)


def _matrix_table(M: PointMatrix) -> str:
    width = max(2, max(len(str(v)) for row in M.entries for v in row))
    lines = []
    for i, row in enumerate(M.entries):
        cells = [("-" if i == j else str(v)).rjust(width) for j, v in enumerate(row)]
        lines.append(" ".join(cells) + f"  | {sum(row)}")
    return "\n".join(lines)


def _report_payload(report: RealizationReport) -> dict:
    return {
        "valid": report.valid,
        "zero_diagonal": report.zero_diagonal,
        "row_sums_match": report.row_sums_match,
        "pair_totals_in_window": report.pair_totals_in_window,
        "failures": list(report.failures),
    }


def _stats_payload(stats: MatrixStats) -> dict:
    return {
        "max_entry": stats.max_entry,
        "max_pair_total": stats.max_pair_total,
        "min_pair_total": stats.min_pair_total,
        "row_sums": list(stats.row_sums),
    }


def generate_scores(n: int, d_max: int, seed: int) -> ScoreSequence:
    """Seeded random nondecreasing sequence for benchmarking."""
    rng = random.Random(f"{seed}:{n}:{d_max}")
    return ScoreSequence(tuple(sorted(rng.randint(0, d_max) for _ in range(n))))


def scores_checksum(D: ScoreSequence) -> int:
    return zlib.crc32(repr(D.scores).encode())


def _best_time(fn, repeats: int) -> float:
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - t0
        if best is None or elapsed < best:
            best = elapsed
    return best


def _cmd_bounds(args: argparse.Namespace) -> int:
    D, perm = normalize_sequence(_load_scores(args))
    summary = extremal_summary(D)
    if args.format == "json":
        _emit_json(
            {
                "n": D.n,
                "e": summary.e,
                "f": summary.f,
                "g": summary.g,
                "f_window": [summary.f_search_lo, summary.f_search_hi],
                "scores": list(D.scores),
                "permutation": list(perm),
            }
        )
    elif args.format == "csv":
        print("n,e,f,g,f_lo,f_hi")
        print(
            f"{D.n},{summary.e},{summary.f},{summary.g},"
            f"{summary.f_search_lo},{summary.f_search_hi}"
        )
    else:
        print(f"n   = {D.n}")
        print(f"e   = {summary.e}")
        print(f"f   = {summary.f}")
        print(f"g   = {summary.g}")
        print(f"f in [{summary.f_search_lo}, {summary.f_search_hi}]")
    return EXIT_OK


def _cmd_test(args: argparse.Namespace) -> int:
    D, _ = normalize_sequence(_load_scores(args))
    params = IntervalParams(args.a, args.b)
    ok = interval_test(D, params)
    if args.format == "json":
        _emit_json({"realizable": ok, "a": params.a, "b": params.b, "n": D.n})
    elif args.format == "csv":
        print("realizable")
        print(str(ok).lower())
    else:
        print(f"realizable within [{params.a}, {params.b}]: {ok}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_reconstruct(args: argparse.Namespace) -> int:
    raw = _load_scores(args)
    D, perm = normalize_sequence(raw)
    summary = None
    if args.method == "naive":
        M = naive_construct(raw)
        default_a, default_b = 0, max(raw)
    elif args.method == "pigeonhole":
        M = pigeonhole_construct(D)
        default_a, default_b = 0, 2 * bound_e(D)
    else:
        summary, M = mini_max(D)
        default_a, default_b = summary.g, summary.f
    a = args.a if args.a is not None else default_a
    b = args.b if args.b is not None else default_b
    params = IntervalParams(a, b)
    report = verify_realization(M, D, params)
    stats = matrix_stats(M)

    if args.format == "json":
        payload = {
            "method": args.method,
            "a": a,
            "b": b,
            "scores": list(D.scores),
            "permutation": list(perm),
            "matrix": [list(row) for row in M.entries],
            "stats": _stats_payload(stats),
            "report": _report_payload(report),
        }
        if summary is not None:
            payload["e"] = summary.e
            payload["f"] = summary.f
            payload["g"] = summary.g
        _emit_json(payload)
    elif args.format == "csv":
        print(_matrix_csv(M))
        print(f"verify: valid={report.valid}", file=sys.stderr)
    else:
        print(_matrix_table(M))
        print(f"window [{a}, {b}]: valid={report.valid}")
        for line in report.failures:
            print(f"  {line}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    M = read_matrix_file(args.matrix)
    D, _ = normalize_sequence(_load_scores(args))
    params = IntervalParams(args.a, args.b)
    report = verify_realization(M, D, params)
    stats = matrix_stats(M)
    if args.format == "json":
        _emit_json(
            {
                "valid": report.valid,
                "a": params.a,
                "b": params.b,
                "report": _report_payload(report),
                "stats": _stats_payload(stats),
            }
        )
    elif args.format == "csv":
        print("valid")
        print(str(report.valid).lower())
        for line in report.failures:
            print(line, file=sys.stderr)
    else:
        print(f"valid: {report.valid}")
        for line in report.failures:
            print(f"  {line}")
    return EXIT_OK if report.valid else EXIT_NEGATIVE


def _oracle_budget(args: argparse.Namespace) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                f"{BUDGET_ENV_VAR}={env!r} is not an integer"
            ) from None
    return DEFAULT_BUDGET


def _cmd_oracle(args: argparse.Namespace) -> int:
    D, _ = normalize_sequence(_load_scores(args))
    pair_cap = args.pair_cap if args.pair_cap is not None else 2 * bound_e(D)
    result = enumerate_extremes(
        D,
        pair_cap=pair_cap,
        a_floor=args.a_floor,
        budget=_oracle_budget(args),
        keep_witness=not args.no_witness,
    )
    payload = {
        "realizable": result.realizable,
        "count": result.count,
        "pair_cap": pair_cap,
        "a_floor": args.a_floor,
        "min_F": result.min_F,
        "max_G": result.max_G,
        "min_E": result.min_E,
    }
    if args.format == "json":
        if result.witness is not None:
            payload["witness"] = [list(row) for row in result.witness.entries]
        _emit_json(payload)
    elif args.format == "csv":
        print("realizable,count,min_F,max_G,min_E")
        print(
            f"{str(result.realizable).lower()},{result.count},"
            f"{result.min_F},{result.max_G},{result.min_E}"
        )
    else:
        for key, value in payload.items():
            print(f"{key} = {value}")
        if result.witness is not None:
            print(_matrix_table(result.witness))
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    report = sweep(
        args.n_max,
        args.d_max,
        moon_c_max=args.moon_c_max,
        budget=_oracle_budget(args),
    )
    if args.format == "json":
        _emit_json(
            {
                "sequences": report.sequences,
                "by_length": {str(k): v for k, v in report.by_length.items()},
                "comparisons": report.comparisons,
                "mismatches": list(report.mismatches),
            }
        )
    else:
        print(
            f"sequences={report.sequences} comparisons={report.comparisons} "
            f"mismatches={len(report.mismatches)}"
        )
        for line in report.mismatches:
            print(f"  {line}")
    return EXIT_OK if report.clean else EXIT_NEGATIVE


def _cmd_bench(args: argparse.Namespace) -> int:
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    known = {"interval-test", "min-f", "minimax"}
    unknown = set(algorithms) - known
    if unknown:
        raise ValueError(f"unknown bench algorithms: {sorted(unknown)}")
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    mm_sizes = [int(s) for s in args.minimax_sizes.split(",") if s.strip()]

    print("algorithm,n,d_max,seed,repeats,best_seconds,input_checksum")
    for name in algorithms:
        for n in mm_sizes if name == "minimax" else sizes:
            d_max = 2 * n
            D = generate_scores(n, d_max, args.seed)
            if name == "interval-test":
                # the always-feasible window forces a full O(n) pass
                params = IntervalParams(0, 2 * bound_e(D))
                fn = lambda: interval_test(D, params)
            elif name == "min-f":
                fn = lambda: min_f(D)
            else:
                fn = lambda: mini_max(D)
            best = _best_time(fn, args.repeats)
            print(
                f"{name},{n},{d_max},{args.seed},{args.repeats},"
                f"{best:.6f},{scores_checksum(D)}"
            )
    return EXIT_OK


def _add_scores_arguments(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--scores", help="inline scores, comma or space separated")
    group.add_argument("--scores-file", help="file with scores (any separators)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scoreseq",
        description="Score sequences of interval tournaments: test, bound, build.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bounds", help="compute e, f, g and the f-search window")
    _add_scores_arguments(p)
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("test", help="decide realizability for a window [a, b]")
    _add_scores_arguments(p)
    p.add_argument("--a", type=int, required=True, help="minimum pair total")
    p.add_argument("--b", type=int, required=True, help="maximum pair total")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("reconstruct", help="build a witness point matrix")
    _add_scores_arguments(p)
    p.add_argument(
        "--method",
        choices=["naive", "pigeonhole", "minimax"],
        default="minimax",
    )
    p.add_argument("--a", type=int, default=None, help="window floor for the report")
    p.add_argument("--b", type=int, default=None, help="window cap for the report")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=_cmd_reconstruct)

    p = sub.add_parser("verify", help="check a matrix file against scores")
    _add_scores_arguments(p)
    p.add_argument("--matrix", required=True, help="CSV matrix file")
    p.add_argument("--a", type=int, required=True, help="minimum pair total")
    p.add_argument("--b", type=int, required=True, help="maximum pair total")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", help="exhaustively enumerate realizations")
    _add_scores_arguments(p)
    p.add_argument("--pair-cap", type=int, default=None)
    p.add_argument("--a-floor", type=int, default=0)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--no-witness", action="store_true")
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="cross-check formulas against exhaustion")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--moon-c-max", type=int, default=3)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bench", help="time core operations, output CSV")
    p.add_argument(
        "--algorithms",
        default="interval-test,min-f,minimax",
        help="comma list: interval-test, min-f, minimax",
    )
    p.add_argument("--sizes", default="1000,10000,100000,1000000")
    p.add_argument("--minimax-sizes", default="50,100,200")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--repeats", type=int, default=3)
    p.set_defaults(func=_cmd_bench)

    return parser


def run(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OracleBudgetExceeded as exc:
        print(f"oracle budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (TournamentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
