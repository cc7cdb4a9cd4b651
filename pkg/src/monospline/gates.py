"""Monotonicity conditions on nodal derivatives.

For an interval with slope m and endpoint derivatives fd_l, fd_r, write
alpha = fd_l/m and beta = fd_r/m. The checks below are, in increasing
strength of what they certify:

- ``sign_consistent``: the necessary condition (derivative signs match the
  slope; a flat interval needs both derivatives to vanish).
- ``in_monotone_box``: sufficient, alpha and beta both in [0, 3].
- ``node_slope_bounded``: the per-node rule |fd_i| <= 3 min(|m_left|, |m_right|)
  plus sign consistency; holding it at every node makes the whole
  interpolant monotone. This is the default builder gate.
- ``in_monotone_region``: sufficient and close to necessary, the union of the
  strip alpha+beta <= 3 with an elliptic region.
"""
from __future__ import annotations

import numpy as np

__all__ = ["sign_consistent", "in_monotone_box", "node_slope_bounded",
           "in_monotone_region", "node_gate_ok", "GATE_KINDS"]

GATE_KINDS = ("thm3", "thm4")   # CLI tokens: node rule (default) / region rule


def sign_consistent(fd_l: float, fd_r: float, m: float) -> bool:
    """Necessary condition for monotonicity on one interval."""
    if m == 0.0:
        return fd_l == 0.0 and fd_r == 0.0
    s = np.sign(m)
    return (fd_l == 0.0 or np.sign(fd_l) == s) and \
           (fd_r == 0.0 or np.sign(fd_r) == s)


def in_monotone_box(alpha: float, beta: float) -> bool:
    """Sufficient box condition: 0 <= alpha, beta <= 3."""
    return 0.0 <= alpha <= 3.0 and 0.0 <= beta <= 3.0


def node_slope_bounded(fd_i: float, m_left: float, m_right: float) -> bool:
    """Per-node monotonicity rule against the two adjacent slopes."""
    if m_left * m_right <= 0.0:
        if fd_i != 0.0:
            return False
    elif fd_i != 0.0 and np.sign(fd_i) != np.sign(m_right):
        return False
    return abs(fd_i) <= 3.0 * min(abs(m_left), abs(m_right))


def in_monotone_region(alpha: float, beta: float) -> bool:
    """Box-or-ellipse sufficient region (strict inequality on the ellipse)."""
    if alpha < 0.0 or beta < 0.0:
        return False
    if alpha + beta <= 3.0:
        return True
    return alpha * alpha + alpha * (beta - 6.0) + (beta - 3.0) ** 2 < 0.0


def _interval_region_ok(fd_l: float, fd_r: float, m: float) -> bool:
    if m == 0.0:
        return fd_l == 0.0 and fd_r == 0.0
    return in_monotone_region(fd_l / m, fd_r / m)


def node_gate_ok(gate: str, fd: np.ndarray, m: np.ndarray, i: int) -> bool:
    """Evaluate the configured gate at interior node i of a derivative vector.

    Under the region rule a node passes only if both intervals it touches
    satisfy the pairwise region condition.
    """
    if gate == "thm3":
        return node_slope_bounded(fd[i], m[i - 1], m[i])
    if gate == "thm4":
        return _interval_region_ok(fd[i - 1], fd[i], m[i - 1]) and \
               _interval_region_ok(fd[i], fd[i + 1], m[i])
    raise ValueError(f"unknown gate {gate!r}")
