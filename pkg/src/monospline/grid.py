"""Grid data containers, divided differences, and the benchmark grids/functions."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import LengthMismatch, NonIncreasingAbscissae, TooFewPoints


def _readonly(a) -> np.ndarray:
    out = np.array(a, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True)
class GridData:
    """Interpolation data: strictly increasing abscissae with function values."""

    x: np.ndarray
    f: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "x", _readonly(self.x))
        object.__setattr__(self, "f", _readonly(self.f))
        if self.x.ndim != 1 or self.f.ndim != 1 or len(self.x) != len(self.f):
            raise LengthMismatch(
                f"x has {len(self.x)} entries, f has {len(self.f)}"
            )
        if len(self.x) < 2:
            raise TooFewPoints("need at least 2 points")
        if np.any(np.diff(self.x) <= 0):
            raise NonIncreasingAbscissae("abscissae must be strictly increasing")

    @property
    def n(self) -> int:
        return len(self.x)


@dataclass(frozen=True)
class SlopeData:
    """Interval widths and divided differences of a grid."""

    h: np.ndarray
    m: np.ndarray
    h_max: float
    mesh_ratio: float

    def __post_init__(self):
        object.__setattr__(self, "h", _readonly(self.h))
        object.__setattr__(self, "m", _readonly(self.m))


def compute_slopes(grid: GridData) -> SlopeData:
    """Per-interval widths h_i and slopes m_i = (f_{i+1}-f_i)/h_i.

    Requires at least 3 points: a single interval has no interior node to
    solve or repair, so shorter inputs are rejected up front.
    """
    if grid.n < 3:
        raise TooFewPoints("need at least 3 points")
    h = np.diff(grid.x)
    m = np.diff(grid.f) / h
    return SlopeData(h=h, m=m, h_max=float(h.max()),
                     mesh_ratio=float(h.max() / h.min()))


def uniform_grid(level: int, fn: Callable | None = None) -> GridData:
    """Equally spaced grid on [0, 2] with spacing 2^-level.

    ``fn`` samples the ordinates; identity data (f = x) is used when omitted.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    x = np.arange(2 ** (level + 1) + 1) * 2.0 ** -level
    return GridData(x=x, f=fn(x) if fn is not None else x.copy())


def nonuniform_grid(level: int, fn: Callable | None = None) -> GridData:
    """Alternating-spacing grid on [0, 2] with mesh ratio 3.

    Even-indexed nodes sit at multiples of 2^-level; each odd-indexed node
    sits a quarter step after its left neighbour, so the widths alternate
    between (1/4)2^-level and (3/4)2^-level.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    half = 2 ** (level + 1)
    x = np.empty(2 * half + 1)
    x[0::2] = np.arange(half + 1) * 2.0 ** -level
    x[1::2] = (np.arange(half) + 0.25) * 2.0 ** -level
    return GridData(x=x, f=fn(x) if fn is not None else x.copy())


def smooth_test_fn(x):
    """Smooth monotone benchmark function on [0, 2]."""
    x = np.asarray(x, dtype=float)
    return x ** 4 + np.sin(x)


def smooth_test_deriv(x):
    x = np.asarray(x, dtype=float)
    return 4 * x ** 3 + np.cos(x)


def jump_test_fn(x):
    """Piecewise smooth benchmark with an upward jump at x = 1.

    The point x = 1 itself belongs to the left branch.
    """
    x = np.asarray(x, dtype=float)
    return np.where(x <= 1.0, x ** 4 + np.sin(x), 4.0 + x ** 4 + np.cos(x))


def jump_test_deriv(x):
    """One-sided exact derivative of ``jump_test_fn`` (left branch at x = 1)."""
    x = np.asarray(x, dtype=float)
    return np.where(x <= 1.0, 4 * x ** 3 + np.cos(x), 4 * x ** 3 - np.sin(x))
