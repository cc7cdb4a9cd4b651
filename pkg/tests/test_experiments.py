import math

import numpy as np
import pytest

from monospline import (BuildConfig, EmptyWindow, SIGMOID_X, ZeroError, build,
                        is_monotone_interval, jump_test_fn, jump_test_deriv,
                        order_estimate, run_experiment, uniform_grid,
                        window_error)
from monospline.experiments import METHODS, _parse_method

REPAIR_METHODS = tuple(t for t in METHODS if t != "s")


def test_window_error_basics():
    vals = np.array([1.0, 2.0, 3.0, 4.0])
    exact = vals.copy()
    assert window_error(vals, exact, range(4)) == 0.0
    exact[2] += 0.01
    assert window_error(vals, exact, {1, 2}) == pytest.approx(0.01)
    assert window_error(vals, exact, {0, 3}) == 0.0
    with pytest.raises(EmptyWindow):
        window_error(vals, exact, set())


def test_order_estimate_values():
    assert order_estimate(2.0 ** -16, 2.0 ** -20, 2) == pytest.approx(4.0)
    assert order_estimate(64.0, 1.0, 4) == pytest.approx(3.0)
    assert order_estimate(0.5, 0.5, 2) == 0.0
    with pytest.raises(ZeroError):
        order_estimate(0.0, 1.0, 2)
    with pytest.raises(ZeroError):
        order_estimate(1.0, 0.0, 2)


def test_method_token_parsing():
    assert _parse_method("s") == ("s", "fb")
    assert _parse_method("o_ay") == ("o", "ay")
    assert _parse_method("r_b") == ("r", "b")
    for bad in ("x_fb", "o_q", "rb", ""):
        with pytest.raises(ValueError):
            _parse_method(bad)


def test_run_experiment_rejects_unknowns():
    with pytest.raises(ValueError):
        run_experiment("5")
    with pytest.raises(ValueError):
        run_experiment("1u", methods=("s", "o_q"))


def test_sweep_report_shape(rep_1u_w1, rep_1n_w1):
    assert rep_1u_w1.levels == (4, 5, 6, 7, 8)
    assert rep_1u_w1.window_kind == "w1"
    assert rep_1u_w1.base == 2 and rep_1u_w1.stride == 1
    assert rep_1u_w1.order_levels == (5, 6, 7, 8)
    assert set(rep_1u_w1.errors) == set(METHODS)
    for t in METHODS:
        assert len(rep_1u_w1.errors[t]) == 5
        assert len(rep_1u_w1.orders[t]) == 4
    assert rep_1u_w1.hhat == tuple(2.0 ** -l for l in (4, 5, 6, 7, 8))

    assert rep_1n_w1.levels == (1, 3, 5, 7, 9)
    assert rep_1n_w1.base == 4 and rep_1n_w1.stride == 2
    assert rep_1n_w1.order_levels == (3, 5, 7, 9)
    assert rep_1n_w1.hhat == tuple(0.75 * 2.0 ** -l for l in (1, 3, 5, 7, 9))


def test_jump_w3_drops_inner_edge_node(rep_2u_w3, rep_1u_w3):
    assert rep_2u_w3.exclude_upper_edge
    assert not rep_1u_w3.exclude_upper_edge


def test_window_nesting_shrinks_errors(rep_1u_w1, rep_1u_w2, rep_1u_w3):
    # w3 is a subset of w2 is a subset of w1, so the max errors are ordered
    for t in METHODS:
        for e1, e2, e3 in zip(rep_1u_w1.errors[t], rep_1u_w2.errors[t],
                              rep_1u_w3.errors[t]):
            assert e3 <= e2 <= e1


def test_plain_spline_oscillates_at_jump():
    grid = uniform_grid(5, jump_test_fn)
    bc = (float(jump_test_deriv(grid.x[0])), float(jump_test_deriv(grid.x[-1])))
    spline, _ = build(grid, BuildConfig(boundary=bc, clamp_boundary=False))
    i0 = 2 ** 5
    near = range(i0 - 3, i0 + 3)
    assert not all(is_monotone_interval(spline, i) for i in near)


def test_fixed_data_report(rep_sigmoid):
    rep = rep_sigmoid
    assert rep.experiment == "3"
    assert rep.grid_kind == "data"
    assert rep.levels == ()
    assert rep.data_x == SIGMOID_X
    n = len(SIGMOID_X)
    for t in REPAIR_METHODS:
        assert rep.modified_nodes[t] == (1, 5, 6, 7)
        assert all(rep.monotone[t])
    assert rep.modified_nodes["s"] == ()
    assert not all(rep.monotone["s"])
    for t in METHODS:
        curve = rep.curves[t]
        assert curve.shape == ((n - 1) * 201, 2)
        assert curve[0, 0] == SIGMOID_X[0]
        assert curve[-1, 0] == SIGMOID_X[-1]
        # interpolation: the curve passes through every data point
        for x, f in zip(SIGMOID_X, rep.data_f):
            hits = curve[curve[:, 0] == x, 1]
            assert np.allclose(hits, f, atol=1e-9)


def test_smooth_orders_reach_four(rep_1u_w1):
    # the untouched spline converges at full order on the whole window
    finest = rep_1u_w1.orders["s"][-1]
    assert math.isclose(finest, 4.0, abs_tol=0.05)


def test_forced_perturbation_caps_order(rep_1u_w1):
    # in-place replacement at one node drags the full-window rate down to
    # first order while a re-solve recovers second order away from it
    assert rep_1u_w1.orders["o_fb"][-1] < 1.5
    assert rep_1u_w1.orders["r_ay"][-1] > 1.5
