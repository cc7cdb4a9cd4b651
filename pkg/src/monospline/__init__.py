"""Monotonicity-preserving C2 cubic spline interpolation.

The classical C2 cubic interpolating spline can overshoot on monotone
data. This package detects the offending nodal derivatives with cheap
algebraic gates and repairs them with slope limiters, either in place
(keeping full accuracy away from the repair, at the cost of C2 there) or
by re-solving the coupled system around pinned values (keeping C2
everywhere else). A reproduction harness measures the convergence orders
of both strategies on refinement sweeps and a fixed sigmoid dataset.
"""
from .builders import (BuildConfig, RepairReport, build, build_c2,
                       build_order_preserving, build_regularity_preserving)
from .document import (SplineDocument, document_from_spline, parse, render,
                       spline_from_document)
from .errors import (EmptyWindow, FixedAtBoundary, LengthMismatch,
                     NonIncreasingAbscissae, NotInterior, OutOfDomain,
                     SingularPivot, SplineError, TooFewPoints, ZeroError)
from .experiments import (EXPERIMENT_IDS, METHODS, SIGMOID_F, SIGMOID_X,
                          ExperimentReport, order_estimate, run_experiment,
                          window_error)
from .gates import (GATE_KINDS, in_monotone_box, in_monotone_region,
                    node_gate_ok, node_slope_bounded, sign_consistent)
from .grid import (GridData, SlopeData, compute_slopes, jump_test_deriv,
                   jump_test_fn, nonuniform_grid, smooth_test_deriv,
                   smooth_test_fn, uniform_grid)
from .hermite import (CubicHermiteSpline, DerivativeVector, build_spline,
                      c2_jump, is_monotone_interval)
from .limiters import (LIMITER_KINDS, adaptive_power_mean, brodlie,
                       fritsch_butland, limiter_value)
from .tridiagonal import (FixedNodeSet, TridiagonalSystem, WindowSpec,
                          assemble, assemble_split, consistency_residual,
                          kershaw_bound, resolve_window, thomas_solve)

__version__ = "0.1.0"

__all__ = [
    "BuildConfig", "RepairReport", "build", "build_c2",
    "build_order_preserving", "build_regularity_preserving",
    "SplineDocument", "document_from_spline", "parse", "render",
    "spline_from_document",
    "SplineError", "NonIncreasingAbscissae", "TooFewPoints",
    "LengthMismatch", "OutOfDomain", "NotInterior", "SingularPivot",
    "FixedAtBoundary", "EmptyWindow", "ZeroError",
    "EXPERIMENT_IDS", "METHODS", "SIGMOID_X", "SIGMOID_F",
    "ExperimentReport", "order_estimate", "run_experiment", "window_error",
    "GATE_KINDS", "in_monotone_box", "in_monotone_region", "node_gate_ok",
    "node_slope_bounded", "sign_consistent",
    "GridData", "SlopeData", "compute_slopes", "uniform_grid",
    "nonuniform_grid", "smooth_test_fn", "smooth_test_deriv",
    "jump_test_fn", "jump_test_deriv",
    "CubicHermiteSpline", "DerivativeVector", "build_spline", "c2_jump",
    "is_monotone_interval",
    "LIMITER_KINDS", "adaptive_power_mean", "brodlie", "fritsch_butland",
    "limiter_value",
    "FixedNodeSet", "TridiagonalSystem", "WindowSpec", "assemble",
    "assemble_split", "consistency_residual", "kershaw_bound",
    "resolve_window", "thomas_solve",
    "__version__",
]
