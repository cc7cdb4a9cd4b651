"""The C2 coupling system for nodal derivatives, and its split variants.

Requiring P''. continuity at every interior node of a cubic Hermite
interpolant couples the unknown derivatives fd_1 .. fd_{n-2} (0-based) through
a strictly diagonally dominant tridiagonal system: at node k,

    lam_k * fd_{k-1} + 2 * fd_k + mu_k * fd_{k+1}
        = 3 * (lam_k * m_{k-1} + mu_k * m_k)

with lam_k = h_k / (h_{k-1} + h_k), mu_k = 1 - lam_k. Known neighbours
(boundary derivatives, or interior nodes pinned to repaired values) move
their weighted value to the right-hand side, which also yields the block
systems used when the node set is split around pinned nodes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import (EmptyWindow, FixedAtBoundary, LengthMismatch,
                     NotInterior, SingularPivot, TooFewPoints)
from .grid import SlopeData, _readonly

_PIVOT_FLOOR = 1e-300


@dataclass(frozen=True)
class TridiagonalSystem:
    """One tridiagonal block: rows for the consecutive nodes start..start+size-1."""

    lower: np.ndarray   # sub-diagonal, length size-1
    diag: np.ndarray    # length size
    upper: np.ndarray   # super-diagonal, length size-1
    rhs: np.ndarray     # length size
    start: int          # grid index of the first unknown node

    def __post_init__(self):
        for name in ("lower", "diag", "upper", "rhs"):
            object.__setattr__(self, name, _readonly(getattr(self, name)))
        if len(self.lower) != self.size - 1 or len(self.upper) != self.size - 1 \
                or len(self.rhs) != self.size:
            raise LengthMismatch("inconsistent band lengths")

    @property
    def size(self) -> int:
        return len(self.diag)


class FixedNodeSet(Mapping[int, float]):
    """Immutable map from interior node index to a pinned derivative value."""

    def __init__(self, values: Mapping[int, float] | Iterable[tuple[int, float]] = ()):
        self._values = {int(k): float(v) for k, v in dict(values).items()}
        for v in self._values.values():
            if not math.isfinite(v):
                raise ValueError("pinned values must be finite")

    def __getitem__(self, k: int) -> float:
        return self._values[k]

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        return f"FixedNodeSet({self._values!r})"


def _weights(h: np.ndarray):
    """lam[k], mu[k] arrays indexed by interior node k (entries 0 and n-1 unused)."""
    n = len(h) + 1
    lam = np.zeros(n)
    mu = np.zeros(n)
    lam[1:n - 1] = h[1:] / (h[:-1] + h[1:])
    mu[1:n - 1] = h[:-1] / (h[:-1] + h[1:])
    return lam, mu


def _block(h, m, lam, mu, lo: int, hi: int, vl: float, vr: float) -> TridiagonalSystem:
    ks = np.arange(lo, hi + 1)
    rhs = 3.0 * (lam[ks] * m[ks - 1] + mu[ks] * m[ks])
    rhs[0] -= lam[lo] * vl
    rhs[-1] -= mu[hi] * vr
    return TridiagonalSystem(lower=lam[ks[1:]], diag=np.full(len(ks), 2.0),
                             upper=mu[ks[:-1]], rhs=rhs, start=lo)


def assemble(slopes: SlopeData, fd_first: float, fd_last: float) -> TridiagonalSystem:
    """Full coupling system for all interior nodes, boundary values known."""
    n = len(slopes.h) + 1
    if n < 4:
        raise TooFewPoints("need at least 4 points for the coupled system")
    lam, mu = _weights(slopes.h)
    return _block(slopes.h, slopes.m, lam, mu, 1, n - 2, fd_first, fd_last)


def assemble_split(slopes: SlopeData, fd_first: float, fd_last: float,
                   fixed: Mapping[int, float]) -> list[TridiagonalSystem]:
    """Block systems for the free interior nodes, split around pinned ones.

    With an empty ``fixed`` map this degenerates to the single full system.
    Runs of pinned nodes simply produce no block.
    """
    n = len(slopes.h) + 1
    if n < 4:
        raise TooFewPoints("need at least 4 points for the coupled system")
    for k in fixed:
        if not 1 <= k <= n - 2:
            raise FixedAtBoundary(f"node {k} is not interior")
    lam, mu = _weights(slopes.h)
    blocks = []
    lo = None
    for k in range(1, n - 1):
        if k in fixed:
            if lo is not None:
                vl = fd_first if lo == 1 else fixed[lo - 1]
                blocks.append(_block(slopes.h, slopes.m, lam, mu, lo, k - 1, vl, fixed[k]))
                lo = None
        elif lo is None:
            lo = k
    if lo is not None:
        vl = fd_first if lo == 1 else fixed[lo - 1]
        blocks.append(_block(slopes.h, slopes.m, lam, mu, lo, n - 2, vl, fd_last))
    return blocks


def thomas_solve(system: TridiagonalSystem) -> np.ndarray:
    """Solve one tridiagonal block by elimination without pivoting.

    Row dominance (2 > lam + mu = 1) keeps the pivots near 2, so pivoting is
    unnecessary; a defensive floor still guards hand-built systems.
    """
    d = system.diag.copy()
    r = system.rhs.copy()
    lower, upper = system.lower, system.upper
    size = system.size
    for i in range(1, size):
        if abs(d[i - 1]) < _PIVOT_FLOOR:
            raise SingularPivot(f"pivot {d[i - 1]!r} in row {i - 1}")
        w = lower[i - 1] / d[i - 1]
        d[i] -= w * upper[i - 1]
        r[i] -= w * r[i - 1]
    if abs(d[-1]) < _PIVOT_FLOOR:
        raise SingularPivot(f"pivot {d[-1]!r} in row {size - 1}")
    sol = np.empty(size)
    sol[-1] = r[-1] / d[-1]
    for i in range(size - 2, -1, -1):
        sol[i] = (r[i] - upper[i] * sol[i + 1]) / d[i]
    return sol


def consistency_residual(slopes: SlopeData, fd: np.ndarray, i: int) -> float:
    """Row-i residual of the coupling equations for given derivative values.

    Zero (up to rounding) when ``fd`` solves the full system; for exact
    derivatives of a smooth function it decays like h^3, which is what makes
    the solved derivatives third-order accurate.
    """
    n = len(slopes.h) + 1
    if not 1 <= i <= n - 2:
        raise NotInterior(f"node {i} is not interior")
    lam, mu = _weights(slopes.h)
    b = 3.0 * (lam[i] * slopes.m[i - 1] + mu[i] * slopes.m[i])
    return float(b - lam[i] * fd[i - 1] - 2.0 * fd[i] - mu[i] * fd[i + 1])


def kershaw_bound(i: int, j: int, uniform: bool = False) -> float:
    """Elementwise bound on the inverse of the coupling matrix.

    |inv(A)[i, j]| <= (2/3) * 2^-|i-j| for any valid system; equally spaced
    grids sharpen the decay base to 2 + sqrt(3).
    """
    base = 2.0 + math.sqrt(3.0) if uniform else 2.0
    return (2.0 / 3.0) * base ** (-abs(i - j))


@dataclass(frozen=True)
class WindowSpec:
    """Node window over which a derivative error norm is taken.

    Kinds: ``w1`` all interior nodes, ``w2`` interior minus the marked node
    ``i0``, ``w3``/``w4`` interior minus a logarithmically growing band
    around ``i0`` (``w4`` widens the band by the factor ``r``).
    ``exclude_upper_edge`` additionally drops the first node past the band,
    the variant used for jump-function tables.
    """

    kind: str
    i0: int
    r: float = 1.0
    exclude_upper_edge: bool = False


def resolve_window(spec: WindowSpec, level: int, grid_kind: str) -> frozenset[int]:
    """Concrete 0-based node index set for a window at one refinement level."""
    if grid_kind == "uniform":
        n = 2 ** (level + 1) + 1
        hhat = 2.0 ** -level
    elif grid_kind == "nonuniform":
        n = 2 ** (level + 2) + 1
        hhat = 0.75 * 2.0 ** -level
    else:
        raise ValueError(f"unknown grid kind {grid_kind!r}")
    interior = range(1, n - 1)
    i0 = spec.i0
    if spec.kind == "w1":
        out = set(interior)
    elif spec.kind == "w2":
        out = set(interior) - {i0}
    elif spec.kind in ("w3", "w4"):
        lg = math.log2(hhat)
        if spec.kind == "w3":
            lo = (i0 - 1) + lg
            hi = (i0 + 1) - lg
        else:
            lo = (i0 - 1) + spec.r * lg
            hi = (i0 + 2) - spec.r * lg
        lo = math.floor(lo)
        hi = math.ceil(hi)
        out = {i for i in interior if i <= lo or i >= hi}
        if spec.exclude_upper_edge:
            out -= {hi}
    else:
        raise ValueError(f"unknown window kind {spec.kind!r}")
    if not out:
        raise EmptyWindow(f"{spec.kind} at level {level} selects no nodes")
    return frozenset(out)
