import numpy as np
import pytest

from monospline import (LIMITER_KINDS, adaptive_power_mean, brodlie,
                        fritsch_butland, limiter_value, node_slope_bounded)


def test_limiter_kinds():
    assert LIMITER_KINDS == ("fb", "b", "ay")


def test_fritsch_butland_values():
    assert fritsch_butland(1.0, 2.0) == pytest.approx(1.5)
    assert fritsch_butland(2.0, 1.0) == pytest.approx(1.5)
    assert fritsch_butland(1.0, 1.0) == pytest.approx(1.0)
    assert fritsch_butland(-2.0, -4.0) == pytest.approx(-3.0)
    assert fritsch_butland(-1.0, 2.0) == 0.0
    assert fritsch_butland(0.0, 5.0) == 0.0
    assert fritsch_butland(5.0, 0.0) == 0.0


def test_brodlie_values():
    # equal widths reduce to the weighted harmonic mean 2ab/(a+b)
    assert brodlie(1.0, 3.0, 1.0, 1.0) == pytest.approx(1.5)
    assert brodlie(1.0, 2.0, 1.0, 2.0) == pytest.approx(18.0 / 14.0)
    assert brodlie(-1.0, -3.0, 2.0, 2.0) == pytest.approx(-1.5)
    assert brodlie(-1.0, 2.0, 1.0, 1.0) == 0.0
    assert brodlie(0.0, 2.0, 1.0, 1.0) == 0.0


def test_adaptive_power_mean_values():
    assert adaptive_power_mean(1.0, 1.0, 1.0, 2.0) == pytest.approx(1.0)
    assert adaptive_power_mean(-1.0, 2.0, 1.0, 1.0) == 0.0
    assert adaptive_power_mean(2.0, 0.0, 1.0, 1.0) == 0.0
    # sign follows the slopes
    assert adaptive_power_mean(-3.0, -1.0, 1.0, 3.0) < 0.0


def test_adaptive_power_mean_equals_brodlie_on_equal_widths():
    rng = np.random.default_rng(3)
    for _ in range(100):
        a, b = rng.uniform(0.01, 5.0, size=2)
        h = rng.uniform(0.1, 2.0)
        assert adaptive_power_mean(a, b, h, h) == pytest.approx(
            brodlie(a, b, h, h), rel=1e-12)


def test_adaptive_power_mean_huge_slopes_no_overflow():
    v = adaptive_power_mean(1e200, 1e200, 1.0, 3.0)
    assert np.isfinite(v)
    assert v == pytest.approx(1e200, rel=1e-12)


def test_limiter_dispatch():
    assert limiter_value("fb", 1.0, 2.0, 9.0, 9.0) == fritsch_butland(1.0, 2.0)
    assert limiter_value("b", 1.0, 2.0, 1.0, 2.0) == brodlie(1.0, 2.0, 1.0, 2.0)
    assert limiter_value("ay", 1.0, 2.0, 1.0, 2.0) == \
        adaptive_power_mean(1.0, 2.0, 1.0, 2.0)
    with pytest.raises(ValueError):
        limiter_value("zz", 1.0, 2.0, 1.0, 1.0)


def test_limiters_always_pass_the_node_gate():
    # the acceptance run does 10,000 draws; this is the quick per-module check
    rng = np.random.default_rng(11)
    for _ in range(500):
        ml, mr = rng.uniform(-5, 5, size=2)
        hl, hr = rng.uniform(0.05, 3.0, size=2)
        for kind in LIMITER_KINDS:
            v = limiter_value(kind, ml, mr, hl, hr)
            assert node_slope_bounded(v, ml, mr), (kind, ml, mr, hl, hr, v)
