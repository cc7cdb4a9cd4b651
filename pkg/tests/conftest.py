"""Shared fixtures: the refinement sweeps are reused across test modules."""
import pytest

from monospline import run_experiment


@pytest.fixture(scope="session")
def rep_1u_w1():
    return run_experiment("1u")


@pytest.fixture(scope="session")
def rep_1u_w2():
    return run_experiment("1u", window_kind="w2")


@pytest.fixture(scope="session")
def rep_1u_w3():
    return run_experiment("1u", window_kind="w3")


@pytest.fixture(scope="session")
def rep_2u_w3():
    return run_experiment("2u")


@pytest.fixture(scope="session")
def rep_2u_w4():
    return run_experiment("2u", window_kind="w4")


@pytest.fixture(scope="session")
def rep_1n_w1():
    return run_experiment("1n")


@pytest.fixture(scope="session")
def rep_1n_w2():
    return run_experiment("1n", window_kind="w2")


@pytest.fixture(scope="session")
def rep_1n_w3():
    return run_experiment("1n", window_kind="w3")


@pytest.fixture(scope="session")
def rep_2n_w3():
    return run_experiment("2n")


@pytest.fixture(scope="session")
def rep_2n_w4():
    return run_experiment("2n", levels=(2, 4, 6, 8, 10), window_kind="w4")


@pytest.fixture(scope="session")
def rep_sigmoid():
    return run_experiment("3")
