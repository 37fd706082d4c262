"""Choice of window and Gaussian width in normalized units.

All searches run at ``P = 1`` with ``N = 8``, where ``delta_bar = delta`` and
``sigma_bar = sigma``; results carry over to any ``P`` by rescaling.
"""

import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RootNotFoundError
from .measure import (
    SeparationPair,
    canonical_specs,
    density,
    edge_density_derivative,
    separations,
)
from .encode import EncodingParams
from .quadrature import gauss_legendre_panels
from .roots import bisect, sign_changes

N_OPT = 8
SIGMA_RANGE = (0.2, 5.0)
DELTA_MAX = 6.0
SCAN_STEP = 0.05
INNER_TOL = 1e-8
OUTER_TOL = 1e-8
SIMULTANEOUS_BRACKET = (1.5, 3.0)
OPTIMUM_BRACKET = (0.5, 2.11)


@dataclass(frozen=True)
class OptimumReport:
    delta_bar: float
    sigma_bar: float
    pr_success: float
    resid_stationarity: float
    resid_equalize: float
    warnings: tuple = ()


@dataclass(frozen=True)
class StationaryPoint:
    delta_bar: float
    sigma_bar: float
    separations: SeparationPair


@dataclass(frozen=True)
class SweepRow:
    delta_bar: float
    sigma_bar: float
    delta_AB: float
    delta_SB: float
    pr_min: float


def _params(sigma_bar, N=N_OPT):
    return EncodingParams(N, 1.0, float(sigma_bar))


def _branch_name(branch):
    name = getattr(branch, "short", branch)
    if name not in ("AB", "SB"):
        raise DomainError(f"branch must be AB or SB, got {branch!r}")
    return name


def _cumulative_probabilities(spec, grid, order=16):
    # Pr on [-d, d] for every d in grid: Gauss-Legendre on [0, grid] strips,
    # doubled since |phi| is even; strips are short next to the density's scale
    edges = np.concatenate([[0.0], grid])
    nodes, weights = gauss_legendre_panels(edges, order)
    strips = (density(spec, nodes) * weights).reshape(len(grid), order).sum(axis=1)
    return 2.0 * np.cumsum(strips)


def separation_profile(sigma_bar, branch, grid=None):
    """Separation and its window derivative on a grid of ``delta_bar`` values."""
    name = _branch_name(branch)
    if grid is None:
        grid = np.arange(SCAN_STEP, DELTA_MAX + 0.5 * SCAN_STEP, SCAN_STEP)
    specs = canonical_specs(_params(sigma_bar))
    pr_c = _cumulative_probabilities(specs["C"], grid)
    pr_z = _cumulative_probabilities(specs[name], grid)
    sign = np.where(pr_c >= pr_z, 1.0, -1.0)
    deriv = 2.0 * (density(specs["C"], grid) - density(specs[name], grid)) * sign
    return grid, np.abs(pr_c - pr_z), deriv, sign


def stationary_delta(sigma_bar, branch):
    """Window ``delta_bar`` in ``(0, 6]`` maximizing the chosen separation.

    The window derivative is scanned for ``+ -> -`` sign changes, each is
    bisected to ``1e-8``, and the root with the largest separation wins.
    """
    name = _branch_name(branch)
    if not SIGMA_RANGE[0] <= sigma_bar <= SIGMA_RANGE[1]:
        raise DomainError(f"sigma_bar must lie in {SIGMA_RANGE}, got {sigma_bar}")
    grid, _, deriv, signs = separation_profile(sigma_bar, name)
    idx = sign_changes(grid, deriv, direction=-1)
    if not idx:
        raise RootNotFoundError(
            f"no maximum of Delta_{name} for delta_bar in (0, {DELTA_MAX}] at sigma_bar={sigma_bar}",
            list(zip(grid.tolist(), deriv.tolist())),
        )
    specs = canonical_specs(_params(sigma_bar))
    best = None
    for i in idx:
        # Pr[C] - Pr[z] keeps its sign across one scan step near a maximum
        sign = signs[i]

        def f(d):
            return 2.0 * sign * float(density(specs["C"], d) - density(specs[name], d))

        root = bisect(f, grid[i], grid[i + 1], xtol=INNER_TOL, f_lo=deriv[i], f_hi=deriv[i + 1])
        value = getattr(separations(_params(sigma_bar), root), f"delta_{name}")
        if best is None or value > best[1]:
            best = (root, value)
    return float(best[0])


def find_simultaneous_stationary(bracket=SIMULTANEOUS_BRACKET):
    """Width at which the AB and SB optimal windows coincide."""
    def h(s):
        return stationary_delta(s, "AB") - stationary_delta(s, "SB")

    lo, hi = bracket
    sigma = bisect(h, lo, hi, xtol=OUTER_TOL)
    delta = 0.5 * (stationary_delta(sigma, "AB") + stationary_delta(sigma, "SB"))
    return StationaryPoint(float(delta), float(sigma), separations(_params(sigma), delta))


def equalization_gap(sigma_bar):
    """``Delta_AB - Delta_SB`` at the AB-optimal window for this width."""
    delta = stationary_delta(sigma_bar, "AB")
    sep = separations(_params(sigma_bar), delta)
    return sep.delta_AB - sep.delta_SB


def find_optimum(bracket=OPTIMUM_BRACKET, scan_step=SCAN_STEP):
    """Maximize ``Delta_AB`` over the window subject to ``Delta_AB = Delta_SB``.

    Bisection on ``sigma_bar`` of :func:`equalization_gap`, bracketed by a
    coarse scan of the gap.  If the scan shows several sign changes the
    smallest-``sigma_bar`` root is used and a warning is attached.
    """
    lo, hi = bracket
    n = int(round((hi - lo) / scan_step))
    sigmas = np.linspace(lo, hi, n + 1)
    gaps = np.array([equalization_gap(s) for s in sigmas])
    idx = sign_changes(sigmas, gaps)
    if not idx:
        raise RootNotFoundError(
            f"equalization gap has no sign change on [{lo}, {hi}]",
            list(zip(sigmas.tolist(), gaps.tolist())),
        )
    notes = []
    if len(idx) > 1:
        msg = f"equalization gap changes sign {len(idx)} times; reporting the smallest root"
        warnings.warn(msg)
        notes.append(msg)
    i = idx[0]
    sigma = bisect(equalization_gap, sigmas[i], sigmas[i + 1], xtol=OUTER_TOL,
                   f_lo=gaps[i], f_hi=gaps[i + 1])
    delta = stationary_delta(sigma, "AB")
    params = _params(sigma)
    sep = separations(params, delta)
    d_ab, _ = edge_density_derivative(params, delta)
    return OptimumReport(
        delta_bar=float(delta),
        sigma_bar=float(sigma),
        pr_success=sep.minimum,
        resid_stationarity=abs(d_ab),
        resid_equalize=abs(sep.delta_AB - sep.delta_SB),
        warnings=tuple(notes),
    )


def _thread_cap():
    try:
        return max(1, int(os.environ.get("CVDJ_THREADS", "1")))
    except ValueError:
        return 1


def _row(point):
    delta_bar, sigma_bar = point
    sep = separations(_params(sigma_bar), delta_bar)
    return SweepRow(float(delta_bar), float(sigma_bar), sep.delta_AB, sep.delta_SB, sep.minimum)


def sweep(grid, workers=None):
    """Separations at each ``(delta_bar, sigma_bar)``, rows in input order."""
    grid = [(float(d), float(s)) for d, s in grid]
    if not grid:
        raise DomainError("sweep grid is empty")
    if any(d <= 0 or s <= 0 for d, s in grid):
        raise DomainError("sweep grid entries must be positive")
    workers = _thread_cap() if workers is None else max(1, int(workers))
    if workers == 1:
        return [_row(p) for p in grid]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_row, grid))
