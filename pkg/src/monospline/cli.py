"""Command-line interface: fit, eval, experiment.

Exit codes: 0 success, 2 usage or malformed input, 3 invalid data
(non-increasing abscissae, too few points), 4 evaluation outside the
spline's domain.
"""
from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from .builders import BuildConfig, RepairReport, build
from .document import document_from_spline, parse, render, spline_from_document
from .errors import (LengthMismatch, NonIncreasingAbscissae, OutOfDomain,
                     TooFewPoints)
from .experiments import EXPERIMENT_IDS, METHODS, run_experiment
from .gates import GATE_KINDS
from .grid import GridData
from .limiters import LIMITER_KINDS

__all__ = ["main"]


class InputError(Exception):
    """Malformed command input; maps to exit code 2."""


def _read_data_csv(path: str):
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as e:
        raise InputError(str(e)) from None
    rows = [r for r in rows if r and any(c.strip() for c in r)]
    if not rows:
        raise InputError(f"{path}: line 1: empty input")
    header = [c.strip().lower() for c in rows[0]]
    if header not in (["x", "f"], ["x", "f", "df"]):
        raise InputError(f"{path}: line 1: header must be 'x,f' or 'x,f,df'")
    cols = len(header)
    data = np.empty((len(rows) - 1, cols))
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != cols:
            raise InputError(f"{path}: line {lineno}: expected {cols} fields")
        try:
            data[lineno - 2] = [float(c) for c in row]
        except ValueError:
            raise InputError(f"{path}: line {lineno}: not a number") from None
    if len(data) < 3:
        raise InputError(f"{path}: need at least 3 points")
    df = data[:, 2] if cols == 3 else None
    return data[:, 0], data[:, 1], df


def _one_based(nodes) -> str:
    return " ".join(str(i + 1) for i in nodes)


def _zero_based(nodes) -> str:
    return " ".join(str(i) for i in nodes)


def _repair_lines(report: RepairReport, method: str, limiter: str,
                  gate: str) -> list[str]:
    lines = [f"method {method}", f"limiter {limiter}", f"gate {gate}",
             f"iterations {report.iterations}",
             "initial gate failures: "
             + (_zero_based(sorted(report.gate_failures_initial)) or "none")]
    if not report.changes:
        lines.append("no repairs")
        return lines
    lines.append(f"modified nodes: {_zero_based(report.modified_nodes)}"
                 f" (1-based: {_one_based(report.modified_nodes)})")
    for i in report.modified_nodes:
        old, new = report.changes[i]
        lines.append(f"node {i} (1-based {i + 1}): {old!r} -> {new!r}")
    if report.residual_failures:
        lines.append("residual gate failures: "
                     + _zero_based(sorted(report.residual_failures)))
    return lines


def _cmd_fit(args) -> int:
    x, f, df = _read_data_csv(args.input)
    if args.bc == "exact":
        if df is None:
            raise InputError("--bc exact requires a 'df' column")
        boundary = (float(df[0]), float(df[-1]))
    else:
        boundary = None
    grid = GridData(x=x, f=f)
    config = BuildConfig(method=args.method, limiter=args.limiter,
                         gate=args.gate, boundary=boundary)
    spline, report = build(grid, config)

    if report.modified_nodes:
        print(f"modified nodes: {_zero_based(report.modified_nodes)}"
              f" (1-based: {_one_based(report.modified_nodes)})")
    else:
        print("no repairs")
    if args.out:
        doc = document_from_spline(spline, args.method, args.limiter, args.gate)
        Path(args.out).write_text(render(doc), encoding="utf-8")
    if args.report:
        text = "\n".join(_repair_lines(report, args.method, args.limiter,
                                       args.gate)) + "\n"
        Path(args.report).write_text(text, encoding="utf-8")
    return 0


def _read_eval_points(path: str) -> np.ndarray:
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as e:
        raise InputError(str(e)) from None
    ts = []
    for lineno, row in enumerate(rows, start=1):
        if not row or not row[0].strip():
            continue
        cell = row[0].strip()
        if lineno == 1 and cell.lower() in ("t", "x"):
            continue
        try:
            ts.append(float(cell))
        except ValueError:
            raise InputError(f"{path}: line {lineno}: not a number") from None
    if not ts:
        raise InputError(f"{path}: no evaluation points")
    return np.asarray(ts)


def _cmd_eval(args) -> int:
    doc = parse(Path(args.document).read_text(encoding="utf-8"))
    spline = spline_from_document(doc)
    if args.points:
        ts = _read_eval_points(args.points)
    else:
        if args.dense < 2:
            raise InputError("--dense needs at least 2 samples per interval")
        x = spline.x
        parts = [np.linspace(x[0], x[1], args.dense)]
        parts += [np.linspace(x[i], x[i + 1], args.dense)[1:]
                  for i in range(1, len(x) - 1)]
        ts = np.concatenate(parts)
    print("t,P,Pp,Ppp")
    for t in ts:
        p = spline.value(t)
        pp = spline.deriv(t)
        ppp = spline.second_deriv(t)
        print(f"{float(t)!r},{p!r},{pp!r},{ppp!r}")
    return 0


def _parse_levels(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            a, b = text.split("..")
            lo, hi = int(a), int(b)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        if "," in text:
            return tuple(int(p) for p in text.split(","))
        return (int(text),)
    except ValueError:
        raise InputError(f"cannot parse levels {text!r}") from None


def _fmt_order(v) -> str:
    return "exact" if v is None else f"{v:.4f}"


def _render_sweep_text(rep) -> str:
    name_w = max(len(t) for t in rep.methods)
    head = "level " + "hhat".ljust(12) + " ".join(t.ljust(max(name_w, 10))
                                                  for t in rep.methods)
    out = [f"# experiment {rep.experiment}, window {rep.window_kind}, "
           f"orders log base {rep.base}, stride {rep.stride}", "errors:", head]
    for j, level in enumerate(rep.levels):
        row = f"{level:<5d} {rep.hhat[j]:<12.4e}"
        row += " ".join(f"{rep.errors[t][j]:<{max(name_w, 10)}.4e}"
                        for t in rep.methods)
        out.append(row)
    out.append("orders:")
    out.append(head)
    for j, level in enumerate(rep.order_levels):
        k = rep.levels.index(level)
        row = f"{level:<5d} {rep.hhat[k]:<12.4e}"
        row += " ".join(_fmt_order(rep.orders[t][j]).ljust(max(name_w, 10))
                        for t in rep.methods)
        out.append(row)
    return "\n".join(out)


def _render_sweep_csv(rep) -> str:
    lines = ["level,hhat,method,error,order"]
    for j, level in enumerate(rep.levels):
        for t in rep.methods:
            order = ""
            if level in rep.order_levels:
                v = rep.orders[t][rep.order_levels.index(level)]
                order = "exact" if v is None else repr(v)
            lines.append(f"{level},{rep.hhat[j]!r},{t},"
                         f"{rep.errors[t][j]!r},{order}")
    return "\n".join(lines)


def _render_fixed_text(rep) -> str:
    out = [f"# experiment {rep.experiment}"]
    for t in rep.methods:
        nodes = rep.modified_nodes[t]
        mono = rep.monotone[t]
        if nodes:
            mod = (f"modified nodes {_zero_based(nodes)}"
                   f" (1-based: {_one_based(nodes)})")
        else:
            mod = "no repairs"
        if all(mono):
            verdict = "monotone on all intervals"
        else:
            bad = [str(i) for i, ok in enumerate(mono) if not ok]
            verdict = "monotonicity violated on intervals " + " ".join(bad)
        out.append(f"{t}: {mod}; {verdict}")
    return "\n".join(out)


def _render_fixed_csv(rep) -> str:
    lines = ["method,modified_nodes,monotone_intervals,violated_intervals"]
    for t in rep.methods:
        mono = rep.monotone[t]
        bad = ";".join(str(i) for i, ok in enumerate(mono) if not ok)
        lines.append(f"{t},{';'.join(str(i) for i in rep.modified_nodes[t])},"
                     f"{sum(mono)},{bad}")
    return "\n".join(lines)


def _emit_plots(rep, plot_dir: str) -> None:
    d = Path(plot_dir)
    d.mkdir(parents=True, exist_ok=True)
    if rep.experiment == "3":
        lines = ["x,f"]
        lines += [f"{float(x)!r},{float(f)!r}"
                  for x, f in zip(rep.data_x, rep.data_f)]
        (d / "exp3_data.csv").write_text("\n".join(lines) + "\n",
                                         encoding="utf-8")
        for t in rep.methods:
            lines = ["t,P"]
            lines += [f"{float(a)!r},{float(b)!r}" for a, b in rep.curves[t]]
            (d / f"exp3_{t}_curve.csv").write_text("\n".join(lines) + "\n",
                                                   encoding="utf-8")
        return
    for t in rep.methods:
        lines = ["level,hhat,error"]
        lines += [f"{level},{rep.hhat[j]!r},{rep.errors[t][j]!r}"
                  for j, level in enumerate(rep.levels)]
        name = f"exp{rep.experiment}_{rep.window_kind}_{t}_errors.csv"
        (d / name).write_text("\n".join(lines) + "\n", encoding="utf-8")


def _cmd_experiment(args) -> int:
    levels = _parse_levels(args.levels) if args.levels else None
    if levels and ".." in args.levels and args.id != "3":
        # a..b names the order rows; errors start one refinement step lower
        stride = 1 if args.id.endswith("u") else 2
        if levels[0] - stride < 0:
            raise InputError(f"levels {args.levels!r} start too low")
        levels = tuple(range(levels[0] - stride, levels[-1] + 1))
    rep = run_experiment(args.id, levels=levels, window_kind=args.window)
    if rep.experiment == "3":
        text = (_render_fixed_text(rep) if args.format == "text"
                else _render_fixed_csv(rep))
    else:
        text = (_render_sweep_text(rep) if args.format == "text"
                else _render_sweep_csv(rep))
    print(text)
    if args.plot_dir:
        _emit_plots(rep, args.plot_dir)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monospline",
        description="Monotone repair of C2 cubic interpolating splines.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a spline to a CSV of x,f[,df]")
    p.add_argument("input", help="CSV file with header x,f or x,f,df")
    p.add_argument("--method", choices=("s", "o", "r"), default="s")
    p.add_argument("--limiter", choices=LIMITER_KINDS, default="fb")
    p.add_argument("--gate", choices=GATE_KINDS, default="thm3")
    p.add_argument("--bc", choices=("exact", "fallback"), default="fallback",
                   help="endpoint derivatives: from the df column, or "
                        "endpoint secant slopes")
    p.add_argument("--out", help="write the spline document here")
    p.add_argument("--report", help="write the repair report here")
    p.set_defaults(func=_cmd_fit)

    p = sub.add_parser("eval", help="evaluate a saved spline document")
    p.add_argument("document", help="spline document path")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--points", help="CSV of evaluation points (first column)")
    g.add_argument("--dense", type=int, metavar="K",
                   help="K samples per interval")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("experiment", help="run a refinement sweep or the "
                                          "fixed-data experiment")
    p.add_argument("--id", required=True, choices=EXPERIMENT_IDS)
    p.add_argument("--levels", help="a..b (order rows; errors start one step "
                                    "earlier) or a comma list of error levels")
    p.add_argument("--window", choices=("w1", "w2", "w3", "w4"))
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--plot-dir", help="emit per-method curve/error CSVs here")
    p.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (NonIncreasingAbscissae, TooFewPoints, LengthMismatch) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OutOfDomain as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
