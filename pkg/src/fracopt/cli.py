"""Command-line front door for the solvers, example problems, and backtests.

Exit codes: 0 success, 2 usage or validation error, 3 solver error,
4 data error. Human output prints 4 decimal places; trace CSV and JSON
files carry full precision.
"""

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import backtest as bt
from .core import PgaConfig, Status, pga_solve
from .errors import (
    DegenerateModel,
    DegenerateSeries,
    FracoptError,
    InsufficientData,
    InvalidParameter,
    ParseError,
    WealthWipeout,
)
from .models import (
    Sim1Params,
    Sim2Params,
    build_sim1,
    build_sim2,
    sim2_is_global,
)
from .sharpe import build_sharpe_model, srm_pga

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_DATA = 4

_DATA_ERRORS = (ParseError, InsufficientData, DegenerateSeries, DegenerateModel, WealthWipeout)


def _parse_floats(text, count, name):
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != count:
        raise InvalidParameter(f"{name} needs {count} comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise InvalidParameter(f"{name}: could not parse {text!r}") from None


def _write_trace_csv(path, trace, columns):
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k"] + columns + ["objective"])
        for k, (x, c) in enumerate(zip(trace.iterates, trace.ratios)):
            writer.writerow([k] + [repr(float(v)) for v in x] + [repr(float(c))])


def _fmt(x):
    return f"{x:.4f}"


def _vec(x):
    return "(" + ", ".join(_fmt(v) for v in x) + ")"


def cmd_sim1(args):
    params = Sim1Params(_parse_floats(args.p, 2, "--p"))
    x0 = _parse_floats(args.x0, 2, "--x0")
    problem = build_sim1(params)
    cfg = PgaConfig(
        alpha=args.alpha_frac * problem.step_bound,
        tol=args.tol,
        max_iter=args.max_iter,
        record_trace=True,
    )
    result = pga_solve(problem, x0, cfg)
    print(f"terminal point: {_vec(result.x_star)}")
    print(f"objective:      {_fmt(result.ratio)}")
    print(f"iterations:     {result.iterations}")
    if args.trace:
        path = os.path.join(args.out, "sim1_trace.csv")
        _write_trace_csv(path, result.trace, ["x1", "x2"])
        print(f"trace written:  {path}")
    if result.status is not Status.CONVERGED:
        print("solver did not converge within the iteration budget", file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_OK


def cmd_sim2(args):
    a = _parse_floats(args.a, 6, "--a")
    params = Sim2Params(args.a0, *a)
    x0 = _parse_floats(args.x0, 2, "--x0")
    problem = build_sim2(params)
    cfg = PgaConfig(
        alpha=args.alpha_frac * problem.step_bound,
        tol=args.tol,
        max_iter=args.max_iter,
        record_trace=True,
    )
    result = pga_solve(problem, x0, cfg)
    verdict = sim2_is_global(params, result.x_star, 1e-4)
    print(f"terminal point: {_vec(result.x_star)}")
    print(f"objective:      {_fmt(result.ratio)}")
    print(f"iterations:     {result.iterations}")
    print(f"|x1|:           {abs(result.x_star[0]):.6e}")
    print(f"global optimum: {'yes' if verdict else 'no'} (tol 1e-4)")
    if args.trace:
        path = os.path.join(args.out, "sim2_trace.csv")
        _write_trace_csv(path, result.trace, ["x1", "x2"])
        print(f"trace written:  {path}")
    if result.status is not Status.CONVERGED:
        print("solver did not converge within the iteration budget", file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_OK


def cmd_sharpe(args):
    try:
        returns = bt.load_returns_csv(args.data, args.unit)
        model = build_sharpe_model(returns, args.eps)
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    res = srm_pga(model)
    print("weights:")
    for label, w in zip(returns.asset_labels, res.weights):
        print(f"  {label}: {_fmt(w)}")
    print(f"sharpe objective:   {_fmt(res.sharpe)}")
    print(f"global certificate: {'yes' if res.global_certificate else 'no'}")
    payload = {
        "eps": args.eps,
        "assets": list(returns.asset_labels),
        "weights": [float(w) for w in res.weights],
        "sharpe": res.sharpe,
        "global_certificate": res.global_certificate,
        "iterations": res.result.iterations,
    }
    path = os.path.join(args.out, "sharpe_result.json")
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
    print(f"result written:     {path}")
    if res.result.status is not Status.CONVERGED:
        print("solver did not converge within the iteration budget", file=sys.stderr)
        return EXIT_SOLVER
    return EXIT_OK


def cmd_backtest(args):
    cfg = bt.BacktestConfig(
        window=args.window,
        strategy=args.strategy,
        eps_hat=args.eps,
        returns_unit=args.unit,
    )
    try:
        returns = bt.load_returns_csv(args.data, args.unit)
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    try:
        report = bt.run_backtest(returns, cfg)
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    json_path = os.path.join(args.out, "backtest_report.json")
    csv_path = os.path.join(args.out, "backtest_periods.csv")
    bt.report_to_json(report, json_path)
    bt.report_to_csv(report, csv_path, returns.asset_labels)
    print(f"strategy:     {cfg.strategy.value}")
    print(f"periods:      {report.realized_returns.size}")
    print(f"sharpe:       {_fmt(report.sharpe)}")
    print(f"final wealth: {_fmt(report.final_wealth)}")
    print(f"report:       {json_path}")
    print(f"periods csv:  {csv_path}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fracopt",
        description="Fractional optimization solvers, analytic examples, and portfolio backtests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p1 = sub.add_parser("sim1", help="ratio of a linear form to the norm on the 2-simplex")
    p1.add_argument("--p", required=True, help="direction vector, e.g. '2,-1'")
    p1.add_argument("--x0", default="0.5,0.5", help="starting point (default 0.5,0.5)")
    p1.add_argument("--alpha-frac", type=float, default=0.99, help="fraction of the step bound")
    p1.add_argument("--tol", type=float, default=1e-5, help="relative-change stopping tolerance")
    p1.add_argument("--max-iter", type=int, default=100_000)
    p1.add_argument("--trace", action="store_true", help="write the iterate trace CSV")
    p1.add_argument("--out", default=".", help="output directory")
    p1.set_defaults(func=cmd_sim1)

    p2 = sub.add_parser("sim2", help="diagonal quadratic ratio on an unbounded band")
    p2.add_argument("--a0", type=float, required=True, help="band half-width")
    p2.add_argument("--a", required=True, help="six coefficients 'a1,a2,a3,a4,a5,a6'")
    p2.add_argument("--x0", default="50,50", help="starting point (default 50,50)")
    p2.add_argument("--alpha-frac", type=float, default=0.99)
    # tighter default than sim1: the flat optimal segment needs it for the
    # first coordinate to reach 4-decimal zero before the step test fires
    p2.add_argument("--tol", type=float, default=1e-7)
    p2.add_argument("--max-iter", type=int, default=100_000)
    p2.add_argument("--trace", action="store_true")
    p2.add_argument("--out", default=".")
    p2.set_defaults(func=cmd_sim2)

    ps = sub.add_parser("sharpe", help="optimize portfolio weights from a returns CSV")
    ps.add_argument("--data", required=True, help="returns CSV path")
    ps.add_argument("--unit", choices=[u.value for u in bt.ReturnsUnit], default="decimal")
    ps.add_argument("--eps", type=float, default=1e-4, help="variance regularizer")
    ps.add_argument("--out", default=".")
    ps.set_defaults(func=cmd_sharpe)

    pb = sub.add_parser("backtest", help="moving-window backtest of a strategy")
    pb.add_argument("--data", required=True)
    pb.add_argument("--unit", choices=[u.value for u in bt.ReturnsUnit], default="decimal")
    pb.add_argument(
        "--strategy", choices=[s.value for s in bt.Strategy], default="srm-pga"
    )
    pb.add_argument("--window", type=int, default=20)
    pb.add_argument("--eps", type=float, default=1e-4)
    pb.add_argument("--out", default=".")
    pb.set_defaults(func=cmd_backtest)

    return parser


# flags whose values are comma-separated vectors and may start with a minus
# sign, which bare argparse would mistake for an option
_VECTOR_FLAGS = {"--p", "--x0", "--a"}


def _merge_vector_flags(argv):
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] in _VECTOR_FLAGS and i + 1 < len(argv):
            merged.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_vector_flags(list(argv)))
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except (InvalidParameter,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except _DATA_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FracoptError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
