"""Command-line interface.

Usage:
    ramanujan-primes ramanujan --count 1000 --format bfile -o b104272.txt
    ramanujan-primes check conjecture1 --n-max 1000
    ramanujan-primes check inequalities --limit 1000000 --format json
    ramanujan-primes stats runs --first 1100
    ramanujan-primes stats twins --first 1100 --format csv

Exit status: 0 on success (every requested check passed), 1 when a check
failed, 2 on usage errors, 3 on resource, coverage or output errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Callable, Sequence

from . import bounds, stats
from .errors import ResourceError, RangeError, UsageError
from .primes import DEFAULT_MEMORY_BUDGET, build_table
from .ramanujan import compute_ramanujan, ramanujan_count_covering, s_value
from .report import CheckReport

__all__ = ["main", "build_parser", "CHECK_IDS", "STATS_KINDS"]

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

CHECK_IDS = ("theorem2", "theorem4", "conjecture1", "conjecture3", "proposition1", "inequalities", "eq1")
STATS_KINDS = ("runs", "twins", "ratios", "epsilon")
FORMATS = ("text", "csv", "json", "bfile")

REPORT_COLUMNS = ("check_id", "lo", "hi", "passed", "status", "first_failure", "samples_checked", "indeterminate")


class Output:
    """Collected rows plus renderers for each output format."""

    def __init__(
        self,
        columns: Sequence[str],
        rows: list[Sequence[Any]],
        doc: Any,
        text: str | None = None,
        sequence: list[tuple[int, int]] | None = None,
    ):
        self.columns = columns
        self.rows = rows
        self.doc = doc
        self.text = text
        self.sequence = sequence

    def render(self, fmt: str) -> str:
        if fmt == "bfile":
            if self.sequence is None:
                raise UsageError("bfile output is only available for integer sequences")
            return "".join(f"{n} {v}\n" for n, v in self.sequence)
        if fmt == "json":
            return json.dumps(_round_floats(self.doc), indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(self.columns)
            writer.writerows([_fmt_cell(c) for c in row] for row in self.rows)
            return buf.getvalue()
        if self.text is not None:
            return self.text
        return "".join(" ".join(_fmt_cell(c) for c in row) + "\n" for row in self.rows)


def _fmt_cell(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.6f}"
    return str(v)


def _round_floats(obj: Any) -> Any:
    if isinstance(obj, float):
        return round(obj, 6)
    if isinstance(obj, dict):
        return {str(k): _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


# -- commands ----------------------------------------------------------------


def cmd_ramanujan(args: argparse.Namespace) -> tuple[Output, bool]:
    rt = compute_ramanujan(args.count, memory_budget=args.memory_budget)
    columns = ("n", "R_n", "prime_index")
    rows = [(n, int(v), int(k)) for n, (v, k) in enumerate(zip(rt.values, rt.prime_index), start=1)]
    doc = [dict(zip(columns, r)) for r in rows]
    return Output(columns, rows, doc, sequence=[(n, v) for n, v, _ in rows]), True


def _reports_output(reports: list[CheckReport], extra: dict[str, Any] | None = None) -> Output:
    rows = [(r.check_id, r.range[0], r.range[1], r.passed, r.status, r.first_failure, r.samples_checked, r.indeterminate) for r in reports]
    doc: dict[str, Any] = {"passed": all(r.passed for r in reports), "reports": [r.to_dict() for r in reports]}
    if extra:
        doc.update(extra)
    text = "".join(r.to_line() + "\n" for r in reports)
    if extra:
        text += "".join(f"# {k}: {json.dumps(v, sort_keys=True)}\n" for k, v in extra.items())
    return Output(REPORT_COLUMNS, rows, doc, text=text)


def cmd_check(args: argparse.Namespace) -> tuple[Output, bool]:
    budget = args.memory_budget
    extra: dict[str, Any] = {}
    cid = args.check_id
    if cid in ("theorem2", "conjecture1"):
        rt = compute_ramanujan(args.n_max, memory_budget=budget)
        fn = bounds.check_sandwich_bounds if cid == "theorem2" else bounds.check_below_p3n
        reports = [fn(rt, memory_budget=budget)]
    elif cid == "theorem4":
        reports = [bounds.check_interval_at_p3n(args.n_max, memory_budget=budget)]
    elif cid == "conjecture3":
        limit = args.limit or 10**5
        probe = build_table(limit, memory_budget=budget)
        rt = compute_ramanujan(ramanujan_count_covering(probe, limit), memory_budget=budget)
        _, report = stats.conjecture3_series(rt.table, rt, limit, convention=args.pair_convention)
        reports = [report]
        extra["permanent_threshold"] = stats.conjecture3_thresholds(rt.table, rt, limit)
    else:
        limit = args.limit or 10**6
        table = build_table(limit, memory_budget=budget)
        if cid == "proposition1":
            reports = [stats.proposition1_verify(table, limit)]
        elif cid == "inequalities":
            reports = bounds.inequality_suite(table, limit)
        else:
            reports = [bounds.check_ramanujan_lower_bound(table, 301, limit)]
            extra["threshold_for_1"] = bounds.solve_lower_bound_threshold(1)
            extra["bound_on_R_2"] = bounds.ramanujan_bound_for_index(2)
    return _reports_output(reports, extra), all(r.passed for r in reports)


def _stats_runs(args: argparse.Namespace) -> Output:
    m = args.first or 1100
    rt = compute_ramanujan(m // 2 + 2, memory_budget=args.memory_budget)
    windows = [10**k for k in range(1, 20) if 10**k < m] + [m]
    rows = []
    for w in windows:
        summary = stats.longest_runs(rt, w)
        for kind, run in ((stats.RAMANUJAN, summary.longest_ramanujan), (stats.NON_RAMANUJAN, summary.longest_non_ramanujan)):
            if run is None:
                rows.append((w, kind, 0, 0, None, stats.finch_expected_run(w)))
            else:
                rows.append((w, kind, run.length, summary.multiplicity[kind][run.length], run.start_prime_index, stats.finch_expected_run(w)))
    full = stats.longest_runs(rt, m)
    columns = ("first", "kind", "longest", "multiplicity", "start_prime_index", "finch_expected")
    doc = {
        "rows": [dict(zip(columns, r)) for r in rows],
        "multiplicity": {k: {str(n): c for n, c in v.items()} for k, v in full.multiplicity.items()},
    }
    text = "".join(
        f"first={r[0]} {r[1]} longest={r[2]} multiplicity={r[3]} start_prime_index={_fmt_cell(r[4]) or '-'} finch_expected={r[5]:.6f}\n"
        for r in rows
    )
    for kind, counts in full.multiplicity.items():
        text += f"# {kind} run lengths (first {m}): " + " ".join(f"{n}:{c}" for n, c in counts.items()) + "\n"
    return Output(columns, rows, doc, text=text)


def _stats_twins(args: argparse.Namespace) -> Output:
    budget = args.memory_budget
    if args.limit:
        limit = args.limit
        probe = build_table(limit, memory_budget=budget)
        rt = compute_ramanujan(ramanujan_count_covering(probe, limit), memory_budget=budget)
    else:
        m = args.first or 1100
        rt = compute_ramanujan(m // 2 + 2, memory_budget=budget)
        limit = rt.table.nth_prime(m)
    pairs = stats.enumerate_twins(rt.table, rt, limit)
    both = sum(p.both_ramanujan for p in pairs)
    ratio = both / len(pairs) if pairs else 0.0
    rows = [(p.p, p.q, p.both_ramanujan) for p in pairs]
    doc = {"limit": limit, "twin_pairs": len(pairs), "both_ramanujan": both, "ratio": ratio, "pairs": [list(r) for r in rows]}
    text = f"limit={limit} twin_pairs={len(pairs)} both_ramanujan={both} ratio={ratio:.6f}\n"
    return Output(("p", "q", "both_ramanujan"), rows, doc, text=text)


def _stats_ratios(args: argparse.Namespace) -> Output:
    rt = compute_ramanujan(args.n or 500, memory_budget=args.memory_budget)
    points = bounds.ratio_series(rt, memory_budget=args.memory_budget)
    table = bounds.table_with_primes(2 * rt.count, rt.table, memory_budget=args.memory_budget)
    rows = [(p.n, int(rt.values[p.n - 1]), table.nth_prime(2 * p.n), p.r) for p in points]
    columns = ("n", "R_n", "p_2n", "ratio")
    return Output(columns, rows, [dict(zip(columns, r)) for r in rows])


def _stats_epsilon(args: argparse.Namespace) -> Output:
    limit = args.limit or 10**6
    if limit < 3:
        raise UsageError("--limit must be >= 3 for epsilon")
    table = build_table(limit, memory_budget=args.memory_budget)
    xs = [10**k for k in range(1, 20) if 10**k < limit] + [limit]
    rows = [(x, s_value(table, x), bounds.pnt_epsilon(table, x)) for x in xs]
    columns = ("x", "s_x", "epsilon")
    return Output(columns, rows, [dict(zip(columns, r)) for r in rows])


_STATS: dict[str, Callable[[argparse.Namespace], Output]] = {
    "runs": _stats_runs,
    "twins": _stats_twins,
    "ratios": _stats_ratios,
    "epsilon": _stats_epsilon,
}


def cmd_stats(args: argparse.Namespace) -> tuple[Output, bool]:
    return _STATS[args.kind](args), True


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("-o", "--output", metavar="PATH", help="write here instead of standard output")
    common.add_argument("--memory-budget", type=_positive, default=DEFAULT_MEMORY_BUDGET, metavar="BYTES")

    parser = argparse.ArgumentParser(prog="ramanujan-primes", description="Ramanujan primes and the bounds around them.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ramanujan", parents=[common], help="list R_1..R_N")
    p.add_argument("--count", type=_positive, required=True)
    p.set_defaults(func=cmd_ramanujan)

    p = sub.add_parser("check", parents=[common], help="run a verification sweep")
    p.add_argument("check_id", choices=CHECK_IDS)
    p.add_argument("--n-max", type=_positive, default=1000)
    p.add_argument("--limit", type=_positive)
    p.add_argument("--pair-convention", choices=stats.PAIR_CONVENTIONS, default="larger")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("stats", parents=[common], help="run-length, twin, ratio and epsilon tables")
    p.add_argument("kind", choices=STATS_KINDS)
    p.add_argument("--first", type=_positive, help="window of the first M primes (runs, twins)")
    p.add_argument("--n", type=_positive, help="number of Ramanujan primes (ratios)")
    p.add_argument("--limit", type=_positive, help="upper x (twins, epsilon)")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, ok = args.func(args)
        text = out.render(args.format)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, RangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            sys.stdout.flush()
    except OSError as exc:
        print(f"error: could not write output: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK if ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
