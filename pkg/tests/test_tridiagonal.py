import math

import numpy as np
import pytest

from monospline import (EmptyWindow, FixedAtBoundary, FixedNodeSet, GridData,
                        LengthMismatch, NotInterior, SingularPivot,
                        TooFewPoints, TridiagonalSystem, WindowSpec, assemble,
                        assemble_split, compute_slopes, consistency_residual,
                        kershaw_bound, resolve_window, thomas_solve)


def _slopes(x, f):
    return compute_slopes(GridData(x=np.asarray(x, float),
                                   f=np.asarray(f, float)))


def test_assemble_parabola_system():
    # x = 0..3, f = x^2, boundary derivatives 0 and 6
    x = np.arange(4.0)
    sys_ = assemble(_slopes(x, x ** 2), 0.0, 6.0)
    assert sys_.start == 1
    assert sys_.size == 2
    assert np.allclose(sys_.diag, [2.0, 2.0])
    assert np.allclose(sys_.lower, [0.5])
    assert np.allclose(sys_.upper, [0.5])
    assert np.allclose(sys_.rhs, [6.0, 9.0])
    sol = thomas_solve(sys_)
    assert np.allclose(sol, [2.0, 4.0], atol=1e-14)


def test_assemble_needs_four_points():
    x = np.arange(3.0)
    with pytest.raises(TooFewPoints):
        assemble(_slopes(x, x ** 2), 0.0, 4.0)


def test_split_around_fixed_node():
    # pinning the exact value at node 2 leaves two 1x1 blocks that still
    # solve to the exact parabola derivatives
    x = np.arange(5.0)
    blocks = assemble_split(_slopes(x, x ** 2), 0.0, 8.0,
                            FixedNodeSet({2: 4.0}))
    assert [b.start for b in blocks] == [1, 3]
    assert [b.size for b in blocks] == [1, 1]
    assert np.allclose(thomas_solve(blocks[0]), [2.0], atol=1e-14)
    assert np.allclose(thomas_solve(blocks[1]), [6.0], atol=1e-14)


def test_split_empty_fixed_is_full_system():
    x = np.arange(5.0)
    s = _slopes(x, x ** 2)
    full = assemble(s, 0.0, 8.0)
    blocks = assemble_split(s, 0.0, 8.0, FixedNodeSet())
    assert len(blocks) == 1
    assert np.allclose(thomas_solve(blocks[0]), thomas_solve(full))


def test_split_adjacent_fixed_run():
    x = np.arange(6.0)
    blocks = assemble_split(_slopes(x, x ** 2), 0.0, 10.0,
                            FixedNodeSet({2: 4.0, 3: 6.0}))
    assert [b.start for b in blocks] == [1, 4]
    assert np.allclose(thomas_solve(blocks[0]), [2.0], atol=1e-14)
    assert np.allclose(thomas_solve(blocks[1]), [8.0], atol=1e-14)


def test_split_rejects_boundary_nodes():
    x = np.arange(5.0)
    s = _slopes(x, x ** 2)
    with pytest.raises(FixedAtBoundary):
        assemble_split(s, 0.0, 8.0, FixedNodeSet({0: 1.0}))
    with pytest.raises(FixedAtBoundary):
        assemble_split(s, 0.0, 8.0, FixedNodeSet({4: 1.0}))


def test_fixed_node_set():
    fs = FixedNodeSet({5: 1.0, 2: 3.0})
    assert list(fs) == [2, 5]          # sorted iteration
    assert fs[5] == 1.0
    assert len(fs) == 2
    assert 2 in fs and 4 not in fs
    with pytest.raises(ValueError):
        FixedNodeSet({1: float("nan")})


def test_tridiagonal_system_validation():
    with pytest.raises(LengthMismatch):
        TridiagonalSystem(lower=np.zeros(2), diag=np.ones(2),
                          upper=np.zeros(1), rhs=np.zeros(2), start=1)


def test_singular_pivot():
    sys_ = TridiagonalSystem(lower=np.array([1.0]), diag=np.zeros(2),
                             upper=np.array([1.0]), rhs=np.ones(2), start=1)
    with pytest.raises(SingularPivot):
        thomas_solve(sys_)


def test_thomas_against_dense_small():
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = rng.integers(1, 9)
        lower = rng.uniform(0.1, 0.9, size=max(n - 1, 0))
        upper = rng.uniform(0.1, 0.9, size=max(n - 1, 0))
        diag = np.full(n, 2.0)
        rhs = rng.normal(size=n)
        sys_ = TridiagonalSystem(lower=lower, diag=diag, upper=upper,
                                 rhs=rhs, start=1)
        dense = np.diag(diag) + np.diag(lower, -1) + np.diag(upper, 1)
        assert np.allclose(thomas_solve(sys_), np.linalg.solve(dense, rhs),
                           atol=1e-13)


def test_consistency_residual():
    x = np.arange(5.0)
    s = _slopes(x, x ** 2)
    fd = 2.0 * x
    for i in (1, 2, 3):
        assert consistency_residual(s, fd, i) == pytest.approx(0.0, abs=1e-13)
    with pytest.raises(NotInterior):
        consistency_residual(s, fd, 0)
    with pytest.raises(NotInterior):
        consistency_residual(s, fd, 4)
    # perturbing the centre derivative shows up with weight 2
    fd2 = fd.copy()
    fd2[2] += 0.5
    assert consistency_residual(s, fd2, 2) == pytest.approx(-1.0)


def test_kershaw_bound_values():
    assert kershaw_bound(3, 3) == pytest.approx(2.0 / 3.0)
    assert kershaw_bound(3, 1) == pytest.approx(1.0 / 6.0)
    assert kershaw_bound(1, 3) == pytest.approx(1.0 / 6.0)
    assert kershaw_bound(2, 1, uniform=True) == pytest.approx(
        2.0 / (3.0 * (2.0 + math.sqrt(3.0))))
    assert kershaw_bound(0, 10, uniform=True) < kershaw_bound(0, 10)


def test_resolve_window_w1_w2():
    # uniform level 2: 9 nodes, interior 1..7, centre node 4
    w1 = resolve_window(WindowSpec(kind="w1", i0=4), 2, "uniform")
    assert w1 == frozenset(range(1, 8))
    w2 = resolve_window(WindowSpec(kind="w2", i0=4), 2, "uniform")
    assert w2 == w1 - {4}


def test_resolve_window_w3():
    # uniform level 4: i0=16, spacing 1/16, band edges 15-4 and 17+4
    w3 = resolve_window(WindowSpec(kind="w3", i0=16), 4, "uniform")
    assert w3 == frozenset(range(1, 12)) | frozenset(range(21, 32))
    cut = resolve_window(WindowSpec(kind="w3", i0=16, exclude_upper_edge=True),
                         4, "uniform")
    assert cut == w3 - {21}


def test_resolve_window_w4_nonuniform():
    # level 2: 17 nodes, i0=8, hhat=3/16; doubled log-band
    w4 = resolve_window(WindowSpec(kind="w4", i0=8, r=2.0), 2, "nonuniform")
    assert w4 == frozenset({1, 2, 15})


def test_resolve_window_empty():
    with pytest.raises(EmptyWindow):
        resolve_window(WindowSpec(kind="w4", i0=2, r=20.0), 0, "nonuniform")


def test_resolve_window_bad_arguments():
    with pytest.raises(ValueError):
        resolve_window(WindowSpec(kind="w9", i0=4), 2, "uniform")
    with pytest.raises(ValueError):
        resolve_window(WindowSpec(kind="w1", i0=4), 2, "hexagonal")
