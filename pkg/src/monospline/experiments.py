"""Convergence experiments: refinement sweeps, window errors, order estimates.

Two refinement families on [0, 2] (equally spaced and 2:1 alternating
spacing) interpolate a smooth quartic and a piecewise function with a jump
at x = 1, then measure the max node derivative error over index windows
that keep various distances from the perturbed node. A fixed sigmoid-shaped
dataset with near-flat tails exercises the repair methods directly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .builders import BuildConfig, build
from .errors import EmptyWindow, ZeroError
from .grid import (GridData, compute_slopes, jump_test_deriv, jump_test_fn,
                   nonuniform_grid, smooth_test_deriv, smooth_test_fn,
                   uniform_grid)
from .hermite import DerivativeVector, is_monotone_interval
from .limiters import limiter_value
from .tridiagonal import FixedNodeSet, WindowSpec, resolve_window

__all__ = ["METHODS", "EXPERIMENT_IDS", "SIGMOID_X", "SIGMOID_F",
           "ExperimentReport", "window_error", "order_estimate",
           "run_experiment"]

# column order used by every table
METHODS = ("s", "r_fb", "o_fb", "r_b", "r_ay", "o_b", "o_ay")

EXPERIMENT_IDS = ("1u", "2u", "1n", "2n", "3")

# fixed dataset for experiment 3 (abscissae ascending)
SIGMOID_X = (7.99, 8.09, 8.19, 8.7, 9.2, 10.0, 12.0, 15.0, 20.0)
SIGMOID_F = (0.0, 2.76429e-5, 4.37498e-2, 0.169183, 0.469428,
             0.943740, 0.998636, 0.999919, 0.999994)

_DEFAULT_LEVELS = {"1u": (4, 5, 6, 7, 8), "2u": (4, 5, 6, 7, 8),
                   "1n": (1, 3, 5, 7, 9), "2n": (1, 3, 5, 7, 9)}
_DEFAULT_WINDOW = {"1u": "w1", "2u": "w3", "1n": "w1", "2n": "w3"}

_DENSE_PER_INTERVAL = 201


@dataclass
class ExperimentReport:
    """Everything a rendered table or plot needs.

    ``errors[method]`` aligns with ``levels``; ``orders[method]`` aligns
    with ``order_levels`` (the levels whose coarser partner is also in the
    sweep) and holds None where both errors vanished and no finite order
    exists. The experiment-3 fields stay empty for refinement sweeps and
    vice versa.
    """

    experiment: str
    grid_kind: str                       # uniform | nonuniform | data
    methods: tuple[str, ...]
    levels: tuple[int, ...] = ()
    hhat: tuple[float, ...] = ()
    window_kind: str | None = None
    widen: float = 1.0
    exclude_upper_edge: bool = False
    base: int = 2
    stride: int = 1
    errors: dict[str, tuple[float, ...]] = field(default_factory=dict)
    order_levels: tuple[int, ...] = ()
    orders: dict[str, tuple[float | None, ...]] = field(default_factory=dict)
    modified_nodes: dict[str, tuple[int, ...]] = field(default_factory=dict)
    monotone: dict[str, tuple[bool, ...]] = field(default_factory=dict)
    curves: dict[str, np.ndarray] = field(default_factory=dict)
    data_x: tuple[float, ...] = ()
    data_f: tuple[float, ...] = ()


def window_error(derivs: DerivativeVector, exact: np.ndarray, window) -> float:
    """Max |exact[i] - fd[i]| over the window's node indices."""
    idx = sorted(window)
    if not idx:
        raise EmptyWindow("window selects no nodes")
    vals = np.asarray(getattr(derivs, "values", derivs), dtype=float)
    exact = np.asarray(exact, dtype=float)
    return float(np.max(np.abs(exact[idx] - vals[idx])))


def order_estimate(e_coarse: float, e_fine: float, base: int) -> float:
    """log_base of the coarse/fine error ratio."""
    if e_coarse <= 0.0 or e_fine <= 0.0:
        raise ZeroError("order undefined when an error vanishes")
    return math.log(e_coarse / e_fine, base)


def _parse_method(token: str) -> tuple[str, str]:
    # 's' | 'o_fb' | 'r_ay' etc.; the limiter part is ignored for 's'
    if token == "s":
        return "s", "fb"
    kind, _, lim = token.partition("_")
    if kind in ("o", "r") and lim in ("fb", "b", "ay"):
        return kind, lim
    raise ValueError(f"unknown method token {token!r}")


def _sweep(experiment: str, levels, methods, window_kind, widen) -> ExperimentReport:
    uniform = experiment.endswith("u")
    smooth = experiment.startswith("1")
    grid_kind = "uniform" if uniform else "nonuniform"
    base, stride = (2, 1) if uniform else (4, 2)
    fn = smooth_test_fn if smooth else jump_test_fn
    dfn = smooth_test_deriv if smooth else jump_test_deriv
    # the jump variant of w3 also drops the node at the window's inner edge
    exclude = (not smooth) and window_kind == "w3"

    report = ExperimentReport(
        experiment=experiment, grid_kind=grid_kind, methods=tuple(methods),
        levels=tuple(levels), window_kind=window_kind, widen=widen,
        exclude_upper_edge=exclude, base=base, stride=stride)

    errs: dict[str, dict[int, float]] = {t: {} for t in methods}
    hhat = []
    for level in levels:
        grid = uniform_grid(level, fn) if uniform else nonuniform_grid(level, fn)
        slopes = compute_slopes(grid)
        exact = dfn(grid.x)
        bc = (float(dfn(grid.x[0])), float(dfn(grid.x[-1])))
        i0 = 2 ** level if uniform else 2 ** (level + 1)
        hhat.append(slopes.h_max)
        spec = WindowSpec(kind=window_kind, i0=i0, r=widen,
                          exclude_upper_edge=exclude)
        window = resolve_window(spec, level, grid_kind)
        for token in methods:
            method, lim = _parse_method(token)
            overrides = FixedNodeSet()
            if smooth and method != "s":
                # perturb the midpoint derivative even though the data is
                # smooth, so the repair machinery has something to localize
                forced = limiter_value(lim, slopes.m[i0 - 1], slopes.m[i0],
                                       slopes.h[i0 - 1], slopes.h[i0])
                overrides = FixedNodeSet({i0: forced})
            config = BuildConfig(method=method, limiter=lim, boundary=bc,
                                 overrides=overrides, clamp_boundary=False)
            spline, _ = build(grid, config)
            errs[token][level] = window_error(spline.derivs, exact, window)

    report.hhat = tuple(hhat)
    level_set = set(levels)
    report.order_levels = tuple(l for l in levels if l - stride in level_set)
    report.errors = {t: tuple(errs[t][l] for l in levels) for t in methods}
    orders: dict[str, tuple[float | None, ...]] = {}
    for t in methods:
        row = []
        for l in report.order_levels:
            try:
                row.append(order_estimate(errs[t][l - stride], errs[t][l], base))
            except ZeroError:
                row.append(None)
        orders[t] = tuple(row)
    report.orders = orders
    return report


def _dense_curve(spline, per_interval: int = _DENSE_PER_INTERVAL) -> np.ndarray:
    x = spline.x
    t = np.concatenate([np.linspace(x[i], x[i + 1], per_interval)
                        for i in range(len(x) - 1)])
    return np.column_stack([t, spline.value(t)])


def _fixed_data(methods) -> ExperimentReport:
    grid = GridData(x=np.array(SIGMOID_X), f=np.array(SIGMOID_F))
    report = ExperimentReport(experiment="3", grid_kind="data",
                              methods=tuple(methods),
                              data_x=SIGMOID_X, data_f=SIGMOID_F)
    for token in methods:
        method, lim = _parse_method(token)
        config = BuildConfig(method=method, limiter=lim,
                             clamp_boundary=False)
        spline, repair = build(grid, config)
        report.modified_nodes[token] = repair.modified_nodes
        report.monotone[token] = tuple(
            is_monotone_interval(spline, i) for i in range(grid.n - 1))
        report.curves[token] = _dense_curve(spline)
    return report


def run_experiment(experiment: str, levels=None, methods=METHODS,
                   window_kind: str | None = None,
                   widen: float = 2.0) -> ExperimentReport:
    """Run one sweep (1u, 2u, 1n, 2n) or the fixed-data experiment (3)."""
    if experiment not in EXPERIMENT_IDS:
        raise ValueError(f"unknown experiment {experiment!r}")
    for token in methods:
        _parse_method(token)
    if experiment == "3":
        return _fixed_data(methods)
    if levels is None:
        levels = _DEFAULT_LEVELS[experiment]
    if window_kind is None:
        window_kind = _DEFAULT_WINDOW[experiment]
    return _sweep(experiment, levels, methods, window_kind, widen)
