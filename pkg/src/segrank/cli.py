"""Command-line interface.

Subcommands:

* estimate    Monte Carlo rank probabilities for a tensor format
* expectation exact expected real intersection count, with asymptotics
* lines       Monte Carlo real-line statistics of random cubic surfaces
* polytope    exact vertices of the (expected lines, P(27 real)) polygon
* invariants  exact invariant table for an ambient matrix shape

Output is a human-readable table by default; --json and --csv switch to
machine-readable forms of the same RunRecord. Results are deterministic
given the full flag set including --seed; --workers never changes them.

Exit codes: 0 success, 2 usage error or unsupported format, 3 numerical
failure (trial rejection rate above 1%).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
from dataclasses import asdict, dataclass

from . import __version__
from .classify import MonteCarloRun, monte_carlo_rank
from .cubics import estimate_line_statistics, polytope_vertices
from .errors import UnsupportedFormat
from .formats import Format
from .segre import (
    SegreInvariants,
    asymptotic_coefficient,
    expected_intersections,
    expected_intersections_odd_product,
)

REJECTION_RATE_LIMIT = 0.01

_DEFAULT_ASYMPTOTIC_GRID = (100, 200, 500, 1000, 2000)


@dataclass(frozen=True)
class RunRecord:
    """Serializable summary of one CLI invocation."""

    command: str
    parameters: dict
    results: dict
    rejected: int
    elapsed_seconds: float
    version: str

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "RunRecord":
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls.from_dict(json.loads(text))


def _estimate_payload(run: MonteCarloRun) -> dict:
    ranks = {
        str(rank): {
            "successes": est.successes,
            "p_hat": est.p_hat,
            "ci_lo": est.ci95[0],
            "ci_hi": est.ci95[1],
        }
        for rank, est in sorted(run.rank_estimates.items())
    }
    payload: dict = {"rank_probabilities": ranks}
    if run.counts is not None:
        payload["count_distribution"] = {
            "support": list(run.counts.support),
            "tallies": {str(c): t for c, t in sorted(run.counts.tallies.items())},
            "mean": run.counts.mean,
        }
    return payload


def _cmd_estimate(args: argparse.Namespace) -> RunRecord:
    fmt = Format.parse(args.format)
    start = time.perf_counter()
    run = monte_carlo_rank(fmt, args.trials, args.seed, workers=args.workers)
    elapsed = time.perf_counter() - start
    return RunRecord(
        command="estimate",
        parameters={"format": str(fmt), "trials": args.trials, "seed": args.seed},
        results=_estimate_payload(run),
        rejected=run.rejected,
        elapsed_seconds=elapsed,
        version=__version__,
    )


def _cmd_expectation(args: argparse.Namespace) -> RunRecord:
    m, n = args.m, args.n
    if not 2 <= m <= n:
        raise UnsupportedFormat(f"need 2 <= m <= n, got ({m}, {n})")
    start = time.perf_counter()
    value = expected_intersections(m, n)
    results: dict = {"m": m, "n": n, "expected_intersections": value}
    if m % 2 == 1:
        product = expected_intersections_odd_product((m - 1) // 2, n)
        results["odd_product"] = product
        results["odd_product_relative_gap"] = abs(product - value) / value
    if args.asymptotic:
        coeff = asymptotic_coefficient(m)
        grid = args.n_grid or list(_DEFAULT_ASYMPTOTIC_GRID)
        ratios = {
            str(point): expected_intersections(m, point)
            / (coeff * point ** ((m - 1) / 2))
            for point in grid
        }
        results["asymptotic_coefficient"] = coeff
        results["asymptotic_ratios"] = ratios
    elapsed = time.perf_counter() - start
    return RunRecord(
        command="expectation",
        parameters={"m": m, "n": n, "asymptotic": bool(args.asymptotic)},
        results=results,
        rejected=0,
        elapsed_seconds=elapsed,
        version=__version__,
    )


def _cmd_lines(args: argparse.Namespace) -> RunRecord:
    start = time.perf_counter()
    stats = estimate_line_statistics(args.trials, args.seed, workers=args.workers)
    elapsed = time.perf_counter() - start
    return RunRecord(
        command="lines",
        parameters={"trials": args.trials, "seed": args.seed},
        results={
            "line_probabilities": {
                str(j): {
                    "successes": est.successes,
                    "p_hat": est.p_hat,
                    "ci_lo": est.ci95[0],
                    "ci_hi": est.ci95[1],
                }
                for j, est in sorted(stats.line_estimates.items())
            },
            "expected_lines": stats.expected_lines,
            "expected_ci_lo": stats.expected_ci95[0],
            "expected_ci_hi": stats.expected_ci95[1],
            "bound_lo": 11,
            "bound_hi": 15,
        },
        rejected=stats.rejected,
        elapsed_seconds=elapsed,
        version=__version__,
    )


def _cmd_polytope(args: argparse.Namespace) -> RunRecord:
    start = time.perf_counter()
    polygon = polytope_vertices()
    elapsed = time.perf_counter() - start
    return RunRecord(
        command="polytope",
        parameters={},
        results={
            "vertices": [[str(e), str(p)] for e, p in polygon.points],
            "expected_lines_range": [
                str(min(e for e, _ in polygon.points)),
                str(max(e for e, _ in polygon.points)),
            ],
        },
        rejected=0,
        elapsed_seconds=elapsed,
        version=__version__,
    )


def _cmd_invariants(args: argparse.Namespace) -> RunRecord:
    m, n = args.m, args.n
    if not 2 <= m <= n:
        raise UnsupportedFormat(f"need 2 <= m <= n, got ({m}, {n})")
    start = time.perf_counter()
    info = SegreInvariants.compute(m, n)
    elapsed = time.perf_counter() - start
    return RunRecord(
        command="invariants",
        parameters={"m": m, "n": n},
        results={
            "dim": info.dim,
            "codim": info.codim,
            "degree": info.degree,
            "degree_odd": info.degree_odd,
            "conjugate_real_count": info.conjugate_real,
            "expected_intersections": expected_intersections(m, n),
        },
        rejected=0,
        elapsed_seconds=elapsed,
        version=__version__,
    )


# ---------------------------------------------------------------------------
# rendering


def _render_human(record: RunRecord) -> str:
    lines = [f"segrank {record.command} (v{record.version})"]
    for key, value in record.parameters.items():
        lines.append(f"  {key}: {value}")
    lines.append("")

    def walk(data, indent: int) -> None:
        pad = " " * indent
        if isinstance(data, dict):
            for key, value in data.items():
                if isinstance(value, (dict, list)):
                    lines.append(f"{pad}{key}:")
                    walk(value, indent + 2)
                else:
                    lines.append(f"{pad}{key}: {_fmt(value)}")
        elif isinstance(data, list):
            for value in data:
                lines.append(f"{pad}- {_fmt(value)}")

    walk(record.results, 2)
    lines.append("")
    lines.append(f"  rejected trials: {record.rejected}")
    lines.append(f"  elapsed: {record.elapsed_seconds:.3f}s")
    return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


_TALLY_HEADER = [
    "quantity",
    "successes",
    "trials",
    "rejected",
    "estimate",
    "ci_lo",
    "ci_hi",
]


def _render_csv(record: RunRecord) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    cmd = record.command
    if cmd in ("estimate", "lines"):
        writer.writerow(_TALLY_HEADER)
        trials = record.parameters["trials"]
        group = (
            record.results["rank_probabilities"]
            if cmd == "estimate"
            else record.results["line_probabilities"]
        )
        label = "rank" if cmd == "estimate" else "lines"
        for key, entry in group.items():
            writer.writerow(
                [
                    f"{label}={key}",
                    entry["successes"],
                    trials,
                    record.rejected,
                    entry["p_hat"],
                    entry["ci_lo"],
                    entry["ci_hi"],
                ]
            )
        if cmd == "estimate" and "count_distribution" in record.results:
            dist = record.results["count_distribution"]
            effective = trials - record.rejected
            for key, tally in dist["tallies"].items():
                writer.writerow(
                    [
                        f"count={key}",
                        tally,
                        trials,
                        record.rejected,
                        tally / effective if effective else "",
                        "",
                        "",
                    ]
                )
        if cmd == "lines":
            writer.writerow(
                [
                    "expected_lines",
                    "",
                    trials,
                    record.rejected,
                    record.results["expected_lines"],
                    record.results["expected_ci_lo"],
                    record.results["expected_ci_hi"],
                ]
            )
    elif cmd == "expectation":
        writer.writerow(["quantity", "value"])
        for key, value in record.results.items():
            if isinstance(value, dict):
                for sub, subval in value.items():
                    writer.writerow([f"{key}[n={sub}]", subval])
            else:
                writer.writerow([key, value])
    elif cmd == "polytope":
        writer.writerow(["vertex", "expected_lines", "p27"])
        for idx, (e, p) in enumerate(record.results["vertices"]):
            writer.writerow([idx, e, p])
    elif cmd == "invariants":
        header = list(record.results)
        writer.writerow(["m", "n"] + header)
        writer.writerow(
            [record.parameters["m"], record.parameters["n"]]
            + [record.results[k] for k in header]
        )
    else:  # pragma: no cover - all commands enumerated above
        raise ValueError(f"no CSV renderer for command {cmd!r}")
    return buf.getvalue()


def _emit(record: RunRecord, args: argparse.Namespace) -> None:
    if args.json:
        text = record.to_json() + "\n"
    elif args.csv:
        text = _render_csv(record)
    else:
        text = _render_human(record) + "\n"
    if args.output:
        directory = os.path.dirname(os.path.abspath(args.output))
        fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp_path, args.output)  # atomic: no partial files
        except BaseException:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)
            raise
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# parser


def _add_output_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    group.add_argument("--csv", action="store_true", help="emit CSV")
    sub.add_argument("--output", help="write output to this path (atomic)")


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SEGRANK_WORKERS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="segrank",
        description="typical ranks of Gaussian tensors via real linear "
        "sections of the rank-one matrix variety",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    est = subs.add_parser("estimate", help="Monte Carlo rank probabilities")
    est.add_argument("--format", required=True, help="tensor format, e.g. 3x3x5")
    est.add_argument("--trials", type=int, default=10000)
    est.add_argument("--seed", type=int, default=0)
    est.add_argument("--workers", type=int, default=_default_workers())
    _add_output_flags(est)
    est.set_defaults(handler=_cmd_estimate)

    exp = subs.add_parser("expectation", help="exact expected intersections")
    exp.add_argument("--m", type=int, required=True)
    exp.add_argument("--n", type=int, required=True)
    exp.add_argument("--asymptotic", action="store_true")
    exp.add_argument(
        "--n-grid",
        type=lambda text: [int(v) for v in text.split(",")],
        default=None,
        help="comma-separated n values for the asymptotic ratio table",
    )
    _add_output_flags(exp)
    exp.set_defaults(handler=_cmd_expectation)

    lin = subs.add_parser("lines", help="real lines on random cubic surfaces")
    lin.add_argument("--trials", type=int, default=10000)
    lin.add_argument("--seed", type=int, default=0)
    lin.add_argument("--workers", type=int, default=_default_workers())
    _add_output_flags(lin)
    lin.set_defaults(handler=_cmd_lines)

    pol = subs.add_parser("polytope", help="exact (E, p27) polygon vertices")
    _add_output_flags(pol)
    pol.set_defaults(handler=_cmd_polytope)

    inv = subs.add_parser("invariants", help="exact invariant table")
    inv.add_argument("--m", type=int, required=True)
    inv.add_argument("--n", type=int, required=True)
    _add_output_flags(inv)
    inv.set_defaults(handler=_cmd_invariants)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.handler(args)
    except (UnsupportedFormat, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    try:
        _emit(record, args)
    except OSError as err:
        print(f"error: cannot write output: {err}", file=sys.stderr)
        return 2
    trials = record.parameters.get("trials")
    if trials and record.rejected / trials > REJECTION_RATE_LIMIT:
        print(
            f"error: rejection rate {record.rejected / trials:.2%} exceeds "
            f"{REJECTION_RATE_LIMIT:.0%}",
            file=sys.stderr,
        )
        return 3
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
