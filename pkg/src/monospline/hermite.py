"""Piecewise cubic Hermite splines: construction, evaluation, diagnostics.

Each interval [x_i, x_{i+1}] carries a cubic written in the local form

    P_i(x) = c1 + c2*(x - x_i) + c3*(x - x_i)^2 + c4*(x - x_i)^2*(x - x_{i+1})

which interpolates (f_i, fd_i) on the left and (f_{i+1}, fd_{i+1}) on the
right when c1 = f_i, c2 = fd_i, c3 = (m_i - fd_i)/h_i and
c4 = (fd_i + fd_{i+1} - 2 m_i)/h_i^2.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import LengthMismatch, NotInterior, OutOfDomain
from .grid import GridData, _readonly

# Provenance tags a derivative value can carry.
TAG_SYSTEM = "system"
TAG_BOUNDARY = "boundary"
TAG_OVERRIDE = "override"
LIMITER_TAGS = {"fb": "limiter-fb", "b": "limiter-b", "ay": "limiter-ay"}
VALID_TAGS = {TAG_SYSTEM, TAG_BOUNDARY, TAG_OVERRIDE, *LIMITER_TAGS.values()}

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class DerivativeVector:
    """Nodal derivative values plus a per-node provenance tag."""

    values: np.ndarray
    provenance: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", _readonly(self.values))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        n = len(self.values)
        if len(self.provenance) != n:
            raise LengthMismatch("one provenance tag per derivative value")
        for i, tag in enumerate(self.provenance):
            if tag not in VALID_TAGS:
                raise ValueError(f"unknown provenance tag {tag!r}")
            if tag == TAG_BOUNDARY and i not in (0, n - 1):
                raise ValueError("boundary tag on an interior node")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class CubicHermiteSpline:
    """A built spline: breakpoints, per-interval coefficients, derivatives."""

    x: np.ndarray
    coeffs: np.ndarray            # shape (n-1, 4), columns c1..c4
    derivs: DerivativeVector
    modified_nodes: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "x", _readonly(self.x))
        object.__setattr__(self, "coeffs", _readonly(self.coeffs))
        object.__setattr__(self, "modified_nodes", tuple(self.modified_nodes))

    @property
    def n(self) -> int:
        return len(self.x)

    def _locate(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < self.x[0]) or np.any(t > self.x[-1]):
            raise OutOfDomain(
                f"point outside [{self.x[0]}, {self.x[-1]}]"
            )
        # breakpoint ties resolve to the right interval; x_n joins the last
        idx = np.searchsorted(self.x, t, side="right") - 1
        return np.minimum(idx, self.n - 2), t

    def value(self, t):
        i, t = self._locate(t)
        c = self.coeffs
        d = t - self.x[i]
        e = t - self.x[np.asarray(i) + 1]
        out = c[i, 0] + d * (c[i, 1] + d * (c[i, 2] + c[i, 3] * e))
        return float(out) if out.ndim == 0 else out

    def deriv(self, t):
        i, t = self._locate(t)
        c = self.coeffs
        d = t - self.x[i]
        h = self.x[np.asarray(i) + 1] - self.x[i]
        out = c[i, 1] + d * (2 * c[i, 2] + c[i, 3] * (3 * d - 2 * h))
        return float(out) if out.ndim == 0 else out

    def second_deriv(self, t):
        i, t = self._locate(t)
        c = self.coeffs
        d = t - self.x[i]
        h = self.x[np.asarray(i) + 1] - self.x[i]
        out = 2 * c[i, 2] + c[i, 3] * (6 * d - 2 * h)
        return float(out) if out.ndim == 0 else out


def build_spline(grid: GridData, derivs: DerivativeVector) -> CubicHermiteSpline:
    """Assemble the piecewise cubic Hermite interpolant of (grid, derivs)."""
    if len(derivs) != grid.n:
        raise LengthMismatch("need one derivative per node")
    h = np.diff(grid.x)
    m = np.diff(grid.f) / h
    fd = derivs.values
    coeffs = np.column_stack([
        grid.f[:-1],
        fd[:-1],
        (m - fd[:-1]) / h,
        (fd[:-1] + fd[1:] - 2 * m) / h ** 2,
    ])
    modified = tuple(
        i for i, tag in enumerate(derivs.provenance)
        if tag not in (TAG_SYSTEM, TAG_BOUNDARY)
    )
    return CubicHermiteSpline(x=grid.x, coeffs=coeffs, derivs=derivs,
                              modified_nodes=modified)


def c2_jump(spline: CubicHermiteSpline, i: int) -> float:
    """Second-derivative jump P''_{i-1}(x_i) - P''_i(x_i) at interior node i."""
    if not 1 <= i <= spline.n - 2:
        raise NotInterior(f"node {i} is not interior")
    c = spline.coeffs
    h = np.diff(spline.x)
    left = 2 * c[i - 1, 2] + 4 * c[i - 1, 3] * h[i - 1]
    right = 2 * c[i, 2] - 2 * c[i, 3] * h[i]
    return float(left - right)


def is_monotone_interval(spline: CubicHermiteSpline, i: int) -> bool:
    """Monotonicity test for P_i on [x_i, x_{i+1}].

    P' restricted to the interval is a quadratic in d = x - x_i whose
    endpoint values are the nodal derivatives. The piece is monotone iff
    those derivatives do not carry strictly opposite signs and the interior
    extremum of P', when it falls inside the interval, does not overshoot
    zero by more than the coefficient rounding floor. Touching zero does
    not flip the sign.
    """
    if not 0 <= i <= spline.n - 2:
        raise NotInterior(f"interval {i} does not exist")
    _, c2, c3, c4 = spline.coeffs[i]
    h = float(spline.x[i + 1] - spline.x[i])
    fd_l = float(spline.derivs.values[i])
    fd_r = float(spline.derivs.values[i + 1])
    if np.sign(fd_l) * np.sign(fd_r) < 0.0:
        return False
    s = fd_l if fd_l != 0.0 else fd_r
    if s == 0.0:
        # both end derivatives vanish: P' = 3 c4 d (d - h) keeps one sign
        return True
    # P'(d) = a d^2 + b d + c
    a = 3.0 * c4
    b = 2.0 * (c3 - h * c4)
    c = c2
    if a == 0.0:
        # linear P' between endpoint values that already share a sign
        return True
    vertex = -b / (2.0 * a)
    if not 0.0 < vertex < h:
        return True
    overshoot = np.sign(s) * (c + vertex * (b + a * vertex))
    floor = 64.0 * _EPS * (abs(c) + abs(b) * h + abs(a) * h * h)
    return bool(overshoot >= -floor)
