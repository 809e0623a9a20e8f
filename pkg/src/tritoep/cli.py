"""Command-line interface: one-shot solves and benchmark tables.

Two subcommands. ``solve`` solves a single system, writes the solution
matrix as CSV and emits a machine-readable report. ``bench`` runs a grid
of (n, m, method) cells on the built-in example matrices with B = ones
and prints one row per cell as CSV or markdown.

Exit codes: 0 success, 2 usage or input-format error, 3 solver breakdown
(solve only; bench records per-cell failures inline and still exits 0).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import TridiagToeplitz, assemble_dense, from_symbol, grcar
from .errors import SolverBreakdown
from .metrics import SolveReport, columnwise_solve, relative_residual, timed_run
from .solvers import dense_gepp_solve
from .woodbury import solve_mrhs

EXAMPLE_NAMES = {1: "grcar", 2: "symbol021"}
BENCH_METHODS = ("alg1", "columnwise")
DENSE_MAX_ORDER = 4096


class CsvFormatError(ValueError):
    """Malformed matrix CSV; carries the 1-based offending line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def read_rhs_csv(path: str) -> np.ndarray:
    """Read a matrix from CSV (one matrix row per line, no header)."""
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if line == "":
                raise CsvFormatError(lineno, "blank line")
            fields = line.split(",")
            if rows and len(fields) != len(rows[0]):
                raise CsvFormatError(
                    lineno, f"expected {len(rows[0])} fields, got {len(fields)}")
            try:
                rows.append([float(f) for f in fields])
            except ValueError:
                raise CsvFormatError(lineno, "non-numeric field") from None
    if not rows:
        raise CsvFormatError(1, "empty file")
    return np.array(rows, dtype=np.float64, order="F")


def write_matrix_csv(x: np.ndarray, fh) -> None:
    """Write a matrix as CSV, one matrix row per line, shortest exact
    decimal form per value (round-trips to the same float)."""
    x = np.atleast_2d(np.asarray(x, dtype=np.float64))
    for row in x:
        fh.write(",".join(repr(float(v)) for v in row))
        fh.write("\n")


@dataclass(frozen=True)
class BenchRow:
    """One benchmark cell; failure holds the breakdown name when the solve
    raised instead of returning."""

    example: str
    n: int
    m: int
    method: str
    relative_residual: float
    time_mean_s: float
    reps: int
    failure: Optional[str] = None

    def residual_str(self) -> str:
        if self.failure is not None:
            return f"FAIL({self.failure})"
        return f"{self.relative_residual:.4e}"

    def time_str(self) -> str:
        return "" if self.failure is not None else f"{self.time_mean_s:.4e}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tritoep",
        description="Direct solvers and benchmarks for tridiagonal Toeplitz "
                    "systems with multiple right-hand sides.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one system and report the residual")
    sp.add_argument("--n", type=int, required=True, help="matrix order")
    sp.add_argument("--m", type=int, default=None,
                    help="number of right-hand side columns (default 1)")
    sp.add_argument("--diag", type=float, default=None, help="main diagonal value")
    sp.add_argument("--sup", type=float, default=None, help="superdiagonal value")
    sp.add_argument("--sub", type=float, default=None, help="subdiagonal value")
    sp.add_argument("--grcar", action="store_true",
                    help="use the Grcar matrix (sub=-1, diag=1, sup=1)")
    sp.add_argument("--example2", action="store_true",
                    help="use the zero-diagonal matrix (sub=1, diag=0, sup=2)")
    sp.add_argument("--rhs", default="ones",
                    help='"ones" or a CSV file path (default ones)')
    sp.add_argument("--method", choices=["alg1", "columnwise", "dense"],
                    default="alg1")
    sp.add_argument("--out", default="stdout",
                    help='solution destination: file path or "stdout" (default)')
    sp.add_argument("--report", choices=["json", "csv"], default="json")

    bp = sub.add_parser("bench", help="run a benchmark grid with B = ones")
    bp.add_argument("--example", type=int, choices=[1, 2], required=True,
                    help="1 = Grcar matrix, 2 = zero-diagonal matrix")
    bp.add_argument("--pairs", default=None,
                    help='explicit cells as "n:m,n:m,..."')
    bp.add_argument("--n-list", default=None, help='orders, e.g. "10,20"')
    bp.add_argument("--m-list", default=None, help='column counts, e.g. "2,4"')
    bp.add_argument("--reps", type=int, default=10,
                    help="timing repetitions per cell (default 10)")
    bp.add_argument("--methods", default="alg1",
                    help='comma list from {alg1, columnwise} (default alg1)')
    bp.add_argument("--format", choices=["csv", "md"], default="csv")
    return parser


def _matrix_from_args(parser, args) -> TridiagToeplitz:
    named = int(args.grcar) + int(args.example2)
    bands = [args.sub, args.diag, args.sup]
    if named > 1 or (named == 1 and any(b is not None for b in bands)):
        parser.error("give either --grcar, or --example2, or --diag/--sup/--sub")
    if args.n < 1:
        parser.error(f"--n must be >= 1, got {args.n}")
    if args.grcar:
        return grcar(args.n)
    if args.example2:
        return from_symbol(1.0, 0.0, 2.0, args.n)
    if any(b is None for b in bands):
        parser.error("explicit matrices need all of --diag, --sup and --sub")
    return from_symbol(args.sub, args.diag, args.sup, args.n)


def _rhs_from_args(parser, args, t: TridiagToeplitz) -> np.ndarray:
    if args.rhs == "ones":
        m = 1 if args.m is None else args.m
        if m < 1:
            parser.error(f"--m must be >= 1, got {m}")
        return np.ones((t.order, m), order="F")
    B = read_rhs_csv(args.rhs)
    if B.shape[0] != t.order:
        raise CsvFormatError(1, f"matrix has {B.shape[0]} rows, --n is {t.order}")
    if args.m is not None and args.m != B.shape[1]:
        raise CsvFormatError(1, f"matrix has {B.shape[1]} columns, --m is {args.m}")
    return B


def _report_lines(report: SolveReport, fmt: str) -> list[str]:
    diag = report.diagnostics
    if fmt == "json":
        payload = {
            "method": report.method,
            "n": report.n,
            "m": report.m,
            "relative_residual": report.relative_residual,
            "time_mean_s": report.time_mean_s,
            "reps": report.reps,
            "diagnostics": None if diag is None else {
                "dual_solves": diag.dual_solves,
                "forward_solves": diag.forward_solves,
                "capacitance_condition": diag.capacitance_condition,
            },
        }
        return [json.dumps(payload)]
    header = "method,n,m,relative_residual,time_mean_s,reps,capacitance_condition"
    cond = "" if diag is None else repr(float(diag.capacitance_condition))
    row = (f"{report.method},{report.n},{report.m},"
           f"{repr(report.relative_residual)},{repr(report.time_mean_s)},"
           f"{report.reps},{cond}")
    return [header, row]


def _cmd_solve(parser, args) -> int:
    t = _matrix_from_args(parser, args)
    if args.method == "dense" and t.order > DENSE_MAX_ORDER:
        parser.error(f"--method dense is capped at order {DENSE_MAX_ORDER}")
    try:
        B = _rhs_from_args(parser, args, t)
    except CsvFormatError as exc:
        print(f"CsvFormatError: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read --rhs file: {exc}", file=sys.stderr)
        return 2

    state = {}

    def task():
        if args.method == "alg1":
            outcome = solve_mrhs(t, B)
            state["X"] = outcome.X
            state["diagnostics"] = outcome.diagnostics
        elif args.method == "columnwise":
            state["X"] = columnwise_solve(t, B)
        else:
            state["X"] = dense_gepp_solve(assemble_dense(t), B)

    try:
        mean_s, _ = timed_run(task, reps=1)
    except SolverBreakdown as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3

    X = state["X"]
    report = SolveReport(
        method="dense_oracle" if args.method == "dense" else args.method,
        n=t.order,
        m=B.shape[1],
        relative_residual=relative_residual(t, X, B),
        time_mean_s=mean_s,
        reps=1,
        diagnostics=state.get("diagnostics"),
    )
    if args.out == "stdout":
        write_matrix_csv(X, sys.stdout)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                write_matrix_csv(X, fh)
        except OSError as exc:
            print(f"cannot write --out file: {exc}", file=sys.stderr)
            return 2
    for line in _report_lines(report, args.report):
        print(line)
    return 0


def _parse_cells(parser, args) -> list[tuple[int, int]]:
    if args.pairs is not None and (args.n_list is not None or args.m_list is not None):
        parser.error("give either --pairs or --n-list/--m-list, not both")
    cells = []
    if args.pairs is not None:
        for chunk in args.pairs.split(","):
            try:
                n_str, m_str = chunk.split(":")
                cells.append((int(n_str), int(m_str)))
            except ValueError:
                parser.error(f'bad --pairs entry {chunk!r}, expected "n:m"')
    elif args.n_list is not None and args.m_list is not None:
        try:
            ns = [int(s) for s in args.n_list.split(",")]
            ms = [int(s) for s in args.m_list.split(",")]
        except ValueError:
            parser.error("--n-list/--m-list must be comma-separated integers")
        cells = [(n, m) for n in ns for m in ms]
    else:
        parser.error("give --pairs or both --n-list and --m-list")
    for n, m in cells:
        if n < 1 or m < 1:
            parser.error(f"cells need n >= 1 and m >= 1, got {n}:{m}")
    return cells


def _cmd_bench(parser, args) -> int:
    cells = _parse_cells(parser, args)
    methods = args.methods.split(",")
    for meth in methods:
        if meth not in BENCH_METHODS:
            parser.error(f"unknown method {meth!r}, choose from {BENCH_METHODS}")
    if args.reps < 1:
        parser.error(f"--reps must be >= 1, got {args.reps}")
    example = EXAMPLE_NAMES[args.example]

    rows = []
    for n, m in sorted(set(cells)):
        t = grcar(n) if args.example == 1 else from_symbol(1.0, 0.0, 2.0, n)
        B = np.ones((n, m), order="F")
        for method in sorted(set(methods)):
            solver = solve_mrhs if method == "alg1" else columnwise_solve
            state = {}

            def task():
                result = solver(t, B)
                state["X"] = result.X if method == "alg1" else result

            try:
                mean_s, _ = timed_run(task, reps=args.reps)
                rows.append(BenchRow(example, n, m, method,
                                     relative_residual(t, state["X"], B),
                                     mean_s, args.reps))
            except SolverBreakdown as exc:
                rows.append(BenchRow(example, n, m, method, float("nan"), 0.0,
                                     args.reps, failure=type(exc).__name__))

    columns = ("example", "n", "m", "method", "relative_residual",
               "time_mean_s", "reps")
    if args.format == "csv":
        print(",".join(columns))
        for r in rows:
            print(f"{r.example},{r.n},{r.m},{r.method},"
                  f"{r.residual_str()},{r.time_str()},{r.reps}")
    else:
        print("| " + " | ".join(columns) + " |")
        print("|" + "|".join(" --- " for _ in columns) + "|")
        for r in rows:
            print(f"| {r.example} | {r.n} | {r.m} | {r.method} "
                  f"| {r.residual_str()} | {r.time_str()} | {r.reps} |")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "solve":
        return _cmd_solve(parser, args)
    return _cmd_bench(parser, args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
