"""Command-line front end for the box-product determinant library.

Subcommands:

* ``det N M``     one pair, every affordable method, full report.
* ``charpoly N``  ascending coefficients of the size-N path polynomial.
* ``sweep``       an (n, m) determinant table in pretty, JSON or CSV form.
* ``identities``  the divisibility suite, summarized per family.
* ``bench``       wall-clock comparison of the methods, CSV.

Exit status: 0 on success with full agreement, 1 when methods disagree or an
identity check fails, 2 for usage errors.  ``--threads`` wins over the
``BOXDET_THREADS`` environment variable; the CPU count is the fallback.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .det_methods import (
    DEFAULT_BLOCK_CEILING,
    DEFAULT_DIRECT_CEILING,
    DetReport,
    IdentityReport,
    check_annihilation,
    check_power,
    check_product_n_plus_1,
    check_shift,
    check_splitting,
    check_symmetry,
    det_block,
    det_closed_form,
    det_direct,
    det_resultant,
    verify_all,
)
from .polynomials import path_charpoly, poly_to_json

THREADS_ENV_VAR = "BOXDET_THREADS"
FORMATS = ("pretty", "json", "csv")

# Method names as spelled on the command line; "closed" is the library's
# "closed_form".
CLI_METHODS = ("direct", "block", "resultant", "closed")
_TO_LIBRARY_NAME = {
    "direct": "direct",
    "block": "block",
    "resultant": "resultant",
    "closed": "closed_form",
}

SWEEP_CSV_HEADER = ("n", "m", "gcd", "det", "methods_agree")
BENCH_CSV_HEADER = ("n", "m", "method", "status", "det", "elapsed_ms")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class SweepConfig:
    """Validated parameters for a determinant sweep."""

    max_n: int
    max_m: int
    methods: frozenset[str] = frozenset(CLI_METHODS)
    format: str = "pretty"
    ceiling: int = DEFAULT_DIRECT_CEILING
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_n < 1 or self.max_m < 1:
            raise ValueError("sweep bounds must be >= 1")
        if not self.methods:
            raise ValueError("at least one method is required")
        unknown = set(self.methods) - set(CLI_METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format: {self.format}")
        if self.ceiling < 1:
            raise ValueError("ceiling must be >= 1")
        if self.threads < 1:
            raise ValueError("thread count must be >= 1")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def parse_sizes(text: str) -> list[tuple[int, int]]:
    """Parse a bench size list like ``4x4,8x8``; empty input means no sizes."""
    if not text.strip():
        return []
    sizes = []
    for chunk in text.split(","):
        n_text, sep, m_text = chunk.strip().partition("x")
        if not sep:
            raise argparse.ArgumentTypeError(f"size must look like NxM: {chunk!r}")
        sizes.append((positive_int(n_text), positive_int(m_text)))
    return sizes


def default_threads() -> int:
    """Thread-count fallback chain: environment variable, then CPU count."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is not None:
        try:
            value = int(raw)
        except ValueError:
            value = 0
        if value >= 1:
            return value
        print(
            f"warning: ignoring invalid {THREADS_ENV_VAR}={raw!r}",
            file=sys.stderr,
        )
    return os.cpu_count() or 1


def _library_methods(cli_names: frozenset[str]) -> frozenset[str]:
    return frozenset(_TO_LIBRARY_NAME[name] for name in cli_names)


# --- det -------------------------------------------------------------------


def _report_gcd(report: DetReport) -> int:
    return math.gcd(report.n + 1, report.m + 1)


def _print_det_pretty(report: DetReport, selected: frozenset[str]) -> None:
    print(
        f"P_{report.n} box P_{report.m}: {report.n * report.m} vertices, "
        f"gcd(n+1, m+1) = {_report_gcd(report)}"
    )
    named = (
        ("direct", report.direct),
        ("block", report.block),
        ("resultant", report.resultant),
        ("closed_form", report.closed_form),
    )
    # A selected method with no value was stopped by its ceiling; a method
    # that was never selected gets no row at all.
    for name, value in named:
        if value is None:
            if name in selected:
                print(f"  {name:<12} skipped (ceiling)")
        else:
            ms = report.elapsed.get(name, 0.0) * 1000.0
            print(f"  {name:<12} {value}  [{ms:.3f} ms]")
    print(f"  agree: {'true' if report.agree else 'false'}")


def _sweep_csv_row(report: DetReport) -> tuple[str, str, str, str, str]:
    return (
        str(report.n),
        str(report.m),
        str(_report_gcd(report)),
        str(report.closed_form),
        "true" if report.agree else "false",
    )


def _warn_disagreement(report: DetReport) -> None:
    detail = ", ".join(f"{k}={v}" for k, v in report.results().items())
    print(f"disagreement at n={report.n} m={report.m}: {detail}", file=sys.stderr)


def cmd_det(args: argparse.Namespace) -> int:
    selected = _library_methods(frozenset(args.methods))
    report = verify_all(
        args.n,
        args.m,
        ceiling=args.ceiling,
        block_ceiling=args.block_ceiling,
        methods=selected,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(SWEEP_CSV_HEADER)
        writer.writerow(_sweep_csv_row(report))
    else:
        _print_det_pretty(report, selected)
    if not report.agree:
        _warn_disagreement(report)
        return EXIT_FAILURE
    return EXIT_OK


# --- charpoly ----------------------------------------------------------------


def cmd_charpoly(args: argparse.Namespace) -> int:
    print(poly_to_json(path_charpoly(args.n)))
    return EXIT_OK


# --- sweep -------------------------------------------------------------------


def run_sweep(config: SweepConfig, *, block_ceiling: int = DEFAULT_BLOCK_CEILING) -> list[DetReport]:
    """Every (n, m) report for the configured grid, sorted by n then m.

    Work fans out over a thread pool; the sorted pair list is mapped in
    order, so the output sequence never depends on scheduling.
    """
    pairs = [
        (n, m)
        for n in range(1, config.max_n + 1)
        for m in range(1, config.max_m + 1)
    ]
    methods = _library_methods(config.methods)

    def worker(pair: tuple[int, int]) -> DetReport:
        return verify_all(
            pair[0],
            pair[1],
            ceiling=config.ceiling,
            block_ceiling=block_ceiling,
            methods=methods,
        )

    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        return list(pool.map(worker, pairs))


def _print_sweep_pretty(reports: list[DetReport]) -> None:
    rows = [SWEEP_CSV_HEADER] + [_sweep_csv_row(r) for r in reports]
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.rjust(width) for cell, width in zip(row, widths)))


def cmd_sweep(args: argparse.Namespace) -> int:
    threads = args.threads if args.threads is not None else default_threads()
    config = SweepConfig(
        max_n=args.max_n,
        max_m=args.max_m,
        methods=frozenset(args.methods),
        format=args.format,
        ceiling=args.ceiling,
        threads=threads,
    )
    reports = run_sweep(config, block_ceiling=args.block_ceiling)

    if config.format == "json":
        print(json.dumps([r.to_json_dict() for r in reports], indent=2))
    elif config.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(SWEEP_CSV_HEADER)
        writer.writerows(_sweep_csv_row(r) for r in reports)
    else:
        _print_sweep_pretty(reports)

    status = EXIT_OK
    for report in reports:
        if not report.agree:
            _warn_disagreement(report)
            status = EXIT_FAILURE
    return status


# --- identities --------------------------------------------------------------


def run_identities(max_k: int, threads: int) -> list[IdentityReport]:
    """The full identity suite with every family's size bound set to max_k.

    Secondary bounds (multiplier t, exponent a) keep their defaults.  Checks
    fan out over a thread pool; results come back in submission order.
    """
    jobs = []
    for k in range(1, max_k + 1):
        jobs.append(("splitting", k, None))
    for k in range(1, max_k + 1):
        for s in range(0, k + 1):
            jobs.append(("shift", k, s))
    for k in range(1, max_k + 1):
        for t in range(1, 5 + 1):
            jobs.append(("annihilation", k, t))
    for k in range(1, max_k + 1):
        for a in range(1, 4 + 1):
            for b in range(0, k + 1):
                jobs.append(("power", k, (a, b)))
    for n in range(1, max_k + 1):
        jobs.append(("product_n_plus_1", n, None))
    for n in range(1, max_k + 1):
        for m in range(1, max_k + 1):
            jobs.append(("symmetry", n, m))

    def worker(job: tuple) -> IdentityReport:
        family, first, second = job
        if family == "splitting":
            return check_splitting(first)
        if family == "shift":
            return check_shift(first, second)
        if family == "annihilation":
            return check_annihilation(first, second)
        if family == "power":
            return check_power(first, *second)
        if family == "product_n_plus_1":
            return check_product_n_plus_1(first)
        return check_symmetry(first, second)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, jobs))


def cmd_identities(args: argparse.Namespace) -> int:
    threads = args.threads if args.threads is not None else default_threads()
    reports = run_identities(args.max_k, threads)

    families: dict[str, list[IdentityReport]] = {}
    for report in reports:
        families.setdefault(report.identity, []).append(report)

    status = EXIT_OK
    for family, group in families.items():
        failures = [r for r in group if not r.passed]
        verdict = "pass" if not failures else "FAIL"
        print(f"{family:<18} {verdict}  ({len(group)} checks)")
        for failure in failures:
            params = " ".join(f"{k}={v}" for k, v in failure.params.items())
            print(
                f"identity failure: {failure.identity} {params} "
                f"witness={failure.witness}",
                file=sys.stderr,
            )
            status = EXIT_FAILURE
    return status


# --- bench -------------------------------------------------------------------


def _bench_rows(
    sizes: list[tuple[int, int]],
    methods: frozenset[str],
    ceiling: int,
    block_ceiling: int,
) -> list[tuple[str, str, str, str, str, str]]:
    rows = []
    for n, m in sizes:
        for name in CLI_METHODS:
            if name not in methods:
                continue
            if name == "direct" and n * m > ceiling:
                rows.append((str(n), str(m), name, "skipped (ceiling)", "", ""))
                continue
            if name == "block" and m > block_ceiling:
                rows.append((str(n), str(m), name, "skipped (ceiling)", "", ""))
                continue
            fn = {
                "direct": lambda: det_direct(n, m, ceiling),
                "block": lambda: det_block(n, m),
                "resultant": lambda: det_resultant(n, m),
                "closed": lambda: det_closed_form(n, m),
            }[name]
            start = time.perf_counter()
            value = fn()
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            rows.append(
                (str(n), str(m), name, "ok", str(value), f"{elapsed_ms:.3f}")
            )
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(BENCH_CSV_HEADER)
    writer.writerows(
        _bench_rows(
            args.sizes,
            frozenset(args.methods),
            args.ceiling,
            args.block_ceiling,
        )
    )
    return EXIT_OK


# --- parser ------------------------------------------------------------------


def _add_method_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--methods",
        nargs="+",
        choices=CLI_METHODS,
        default=list(CLI_METHODS),
        help="methods to run (default: all four)",
    )
    sub.add_argument(
        "--ceiling",
        type=positive_int,
        default=DEFAULT_DIRECT_CEILING,
        help="largest n*m the direct method will attempt",
    )
    sub.add_argument(
        "--block-ceiling",
        type=positive_int,
        default=DEFAULT_BLOCK_CEILING,
        help="largest m the block method will attempt",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxdet",
        description=(
            "Exact determinants of grid-graph adjacency matrices by four "
            "independent methods, with an algebraic identity suite."
        ),
    )
    commands = parser.add_subparsers(dest="command", required=True)

    det = commands.add_parser("det", help="determinant of one P_n box P_m")
    det.add_argument("n", type=positive_int, help="first path size (>= 1)")
    det.add_argument("m", type=positive_int, help="second path size (>= 1)")
    det.add_argument("--format", choices=FORMATS, default="pretty")
    _add_method_flags(det)
    det.set_defaults(handler=cmd_det)

    charpoly = commands.add_parser(
        "charpoly", help="path characteristic polynomial, ascending JSON array"
    )
    charpoly.add_argument("n", type=nonnegative_int, help="path size (>= 0)")
    charpoly.set_defaults(handler=cmd_charpoly)

    sweep = commands.add_parser("sweep", help="determinant table over a grid")
    sweep.add_argument("--max-n", type=positive_int, required=True)
    sweep.add_argument("--max-m", type=positive_int, required=True)
    sweep.add_argument("--format", choices=FORMATS, default="pretty")
    _add_method_flags(sweep)
    sweep.add_argument(
        "--threads",
        type=positive_int,
        default=None,
        help=f"worker count (default: ${THREADS_ENV_VAR} or the CPU count)",
    )
    sweep.set_defaults(handler=cmd_sweep)

    identities = commands.add_parser(
        "identities", help="run the polynomial identity suite"
    )
    identities.add_argument(
        "--max-k",
        type=positive_int,
        required=True,
        help="size bound applied to every identity family",
    )
    identities.add_argument(
        "--threads",
        type=positive_int,
        default=None,
        help=f"worker count (default: ${THREADS_ENV_VAR} or the CPU count)",
    )
    identities.set_defaults(handler=cmd_identities)

    bench = commands.add_parser("bench", help="time the methods, CSV output")
    bench.add_argument(
        "--sizes",
        type=parse_sizes,
        default=[],
        help="comma-separated NxM pairs, e.g. 4x4,8x8,16x16",
    )
    _add_method_flags(bench)
    bench.set_defaults(handler=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
