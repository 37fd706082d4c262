import numpy as np
import pytest

from cvdj.encode import EncodingParams
from cvdj.errors import DomainError, RootNotFoundError
from cvdj.measure import edge_density_derivative, separations
from cvdj.optimize import (
    equalization_gap,
    find_optimum,
    find_simultaneous_stationary,
    separation_profile,
    stationary_delta,
    sweep,
)
from cvdj.roots import bisect, sign_changes


@pytest.fixture(scope="module")
def optimum():
    return find_optimum()


def test_bisect_and_sign_changes():
    root = bisect(lambda x: x * x - 2, 0.0, 2.0, xtol=1e-12)
    assert root == pytest.approx(np.sqrt(2), abs=1e-12)
    with pytest.raises(RootNotFoundError):
        bisect(lambda x: x * x + 1, -1.0, 1.0)
    xs = np.arange(5.0)
    fs = np.array([1.0, -1.0, -1.0, 2.0, -3.0])
    assert sign_changes(xs, fs) == [0, 2, 3]
    assert sign_changes(xs, fs, direction=-1) == [0, 3]
    assert sign_changes(xs, fs, direction=1) == [2]


def test_profile_matches_direct_separations():
    grid, sep, _, _ = separation_profile(1.67, "SB", grid=np.array([0.5, 1.0, 2.0, 3.0]))
    for d, s in zip(grid, sep):
        assert s == pytest.approx(separations(EncodingParams(8, 1.0, 1.67), d).delta_SB, abs=1e-10)


@pytest.mark.parametrize("branch", ["AB", "SB"])
def test_stationary_delta_is_a_maximum(branch):
    d = stationary_delta(1.67, branch)
    params = EncodingParams(8, 1.0, 1.67)
    deriv = dict(zip(("AB", "SB"), edge_density_derivative(params, d)))[branch]
    assert abs(deriv) < 1e-7
    here = getattr(separations(params, d), f"delta_{branch}")
    for h in (-0.05, 0.05):
        assert getattr(separations(params, d + h), f"delta_{branch}") < here


def test_stationary_delta_validation():
    with pytest.raises(DomainError):
        stationary_delta(0.1, "AB")
    with pytest.raises(DomainError):
        stationary_delta(1.0, "C")


def test_optimum_values(optimum):
    assert optimum.delta_bar == pytest.approx(2.01, abs=0.02)
    assert optimum.sigma_bar == pytest.approx(1.67, abs=0.02)
    assert optimum.pr_success == pytest.approx(0.68, abs=0.01)
    assert isinstance(optimum.sigma_bar, float)


def test_optimum_residuals(optimum):
    assert optimum.resid_stationarity < 1e-7
    assert optimum.resid_equalize < 1e-7
    assert equalization_gap(optimum.sigma_bar) == pytest.approx(0.0, abs=1e-7)


def test_optimum_beats_neighbours(optimum):
    # equalized min separation is a local max of the worst case over the window
    params = EncodingParams(8, 1.0, optimum.sigma_bar)
    for h in (-0.03, 0.03):
        assert separations(params, optimum.delta_bar + h).minimum < optimum.pr_success


def test_simultaneous_stationary_point():
    pt = find_simultaneous_stationary()
    assert pt.delta_bar == pytest.approx(2.30, abs=0.02)
    assert pt.sigma_bar == pytest.approx(2.11, abs=0.02)
    assert stationary_delta(pt.sigma_bar, "AB") == pytest.approx(stationary_delta(pt.sigma_bar, "SB"), abs=1e-6)
    assert pt.separations.delta_AB == pytest.approx(0.68, abs=0.01)
    assert pt.separations.delta_SB == pytest.approx(0.54, abs=0.01)


def test_sweep_order_and_threads(monkeypatch):
    grid = [(2.0, 1.67), (1.5, 2.11), (2.5, 1.0)]
    serial = sweep(grid, workers=1)
    monkeypatch.setenv("CVDJ_THREADS", "3")
    threaded = sweep(grid)
    assert serial == threaded
    assert [(r.delta_bar, r.sigma_bar) for r in serial] == grid
    for r in serial:
        assert r.pr_min == min(r.delta_AB, r.delta_SB)


def test_sweep_validation():
    with pytest.raises(DomainError):
        sweep([])
    with pytest.raises(DomainError):
        sweep([(0.0, 1.0)])
