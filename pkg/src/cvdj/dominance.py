"""Brute-force checks of which balanced strings maximize ``|M_z(x)|``.

Magnitudes are compared in the enveloped form ``exp(-x**2/(2 sigma**2)) |M_z|``:
the envelope (and ``eta``) is common to every string at fixed ``x``, so the
ranking is the same and nothing overflows.  Reported magnitudes are the bare
``|M_z|``.
"""

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .encode import EncodingParams
from .errors import DomainError
from .position import (
    WaveSpec,
    bin_terms,
    enveloped_a_k,
    enveloped_modulation,
    envelope,
    orthogonal_position_wave,
    position_wave,
)
from .roots import bisect, sign_changes
from .strings import StringClass, canonical, classify, enumerate_balanced

MAX_BRUTE_N = 12
# magnitudes this close (relative) count as a tie
TIE_RTOL = 1e-12


@dataclass
class DominanceReport:
    x_grid: list
    argmax_class: list
    x_c_numeric: float
    x_c_approx: float
    crossover_found: bool = True
    params: dict = field(default_factory=dict)

    @property
    def all_sb_or_ab(self):
        return all(c in (StringClass.SYM_BALANCED, StringClass.ANTISYM_BALANCED) for c in self.argmax_class)

    def class_changes(self):
        """``(x, from_class, to_class)`` at every grid step where the winner changes."""
        out = []
        for i in range(1, len(self.argmax_class)):
            if self.argmax_class[i] is not self.argmax_class[i - 1]:
                out.append((self.x_grid[i], self.argmax_class[i - 1], self.argmax_class[i]))
        return out

    def to_dict(self):
        d = asdict(self)
        d["argmax_class"] = [c.value for c in self.argmax_class]
        d["x_c_numeric"] = None if math.isinf(self.x_c_numeric) else self.x_c_numeric
        d["x_c_approx"] = None if not math.isfinite(self.x_c_approx) else self.x_c_approx
        return d

    def to_json(self, **kwargs):
        return json.dumps(self.to_dict(), **kwargs)


@dataclass(frozen=True)
class Lemma3Result:
    max_real: float
    max_imag: float
    realized_by: tuple
    brute_max: float
    sb_available: bool = True


def _check_brute(params):
    if params.N > MAX_BRUTE_N:
        raise DomainError(f"brute force is limited to N <= {MAX_BRUTE_N}, got {params.N}")
    if not params.sigma > 0:
        raise DomainError("sigma must be > 0")


def balanced_magnitudes(x, params):
    """Enveloped ``|M_z(x)|`` for every balanced string: ``(strings, array[n_strings, n_x])``."""
    _check_brute(params)
    strings = enumerate_balanced(params.N)
    signs = np.array([z.signs for z in strings])
    x = np.atleast_1d(np.asarray(x, dtype=float))
    terms = bin_terms(x, params)
    return strings, np.abs(signs @ terms)


def _argmax_with_ties(mags):
    # first index (lexicographic order) among those within TIE_RTOL of the max
    top = mags.max(axis=0)
    close = mags >= top * (1.0 - TIE_RTOL)
    return np.argmax(close, axis=0)


def dominant_string(x, params):
    """Balanced string of largest ``|M_z(x)|`` and that magnitude."""
    strings, mags = balanced_magnitudes(x, params)
    i = int(_argmax_with_ties(mags)[0])
    with np.errstate(over="ignore"):
        magnitude = float(mags[i, 0] / envelope(x, params))
    return strings[i], magnitude


def crossover_approx(params):
    """Lowest-order estimate ``P sigma**2 / (4 - P**2 sigma**2)``; nan where it breaks down."""
    P, s = params.P, params.sigma
    denom = 4.0 - (P * s) ** 2
    return P * s * s / denom if denom > 0 else math.nan


def _sb_minus_ab(params):
    sb = WaveSpec(canonical(StringClass.SYM_BALANCED, params.N)[0], params)
    ab = WaveSpec(canonical(StringClass.ANTISYM_BALANCED, params.N)[0], params)

    def f(x):
        return float(np.abs(enveloped_modulation(sb, x)) - np.abs(enveloped_modulation(ab, x)))

    return f


def verify_dominance(params, x_max, n_points):
    """Winning class on a uniform grid over ``[0, x_max]`` and the SB->AB crossover."""
    _check_brute(params)
    xs = np.linspace(0.0, x_max, n_points)
    strings, mags = balanced_magnitudes(xs, params)
    winners = [classify(strings[i]) for i in _argmax_with_ties(mags)]
    found = True
    x_c = math.inf
    if params.N % 4 == 0:
        f = _sb_minus_ab(params)
        # x = 0 is excluded: |M_AB(0)| = 0 there by symmetry
        grid = xs[1:]
        vals = np.array([f(x) for x in grid])
        idx = sign_changes(grid, vals, direction=-1)
        if idx:
            i = idx[0]
            x_c = bisect(f, grid[i], grid[i + 1], xtol=1e-12, f_lo=vals[i], f_hi=vals[i + 1])
        else:
            found = False
    else:
        found = False
    return DominanceReport(
        x_grid=xs.tolist(),
        argmax_class=winners,
        x_c_numeric=float(x_c),
        x_c_approx=crossover_approx(params),
        crossover_found=found,
        params={"N": params.N, "P": params.P, "sigma": params.sigma},
    )


def lemma2_check(params):
    """At ``x = 0``: the ``A_k`` decrease strictly and the SB pair maximizes ``|M_z|``."""
    _check_brute(params)
    if params.N % 4:
        return False
    a = np.array([float(np.real(enveloped_a_k(k, 0.0, params))) for k in range(1, params.N // 2 + 1)])
    decreasing = bool(np.all(np.diff(a) < 0))
    winner, _ = dominant_string(0.0, params)
    return decreasing and classify(winner) is StringClass.SYM_BALANCED


def _alpha_beta(x, params):
    ks = range(1, params.N // 2 + 1)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = np.array([enveloped_a_k(k, x, params) for k in ks]) / envelope(x, params)
    return vals.real, vals.imag


def lemma3_decomposition(x, params):
    """Largest purely real and purely imaginary balanced sums of the ``A_k``.

    ``max_real = 2 (sum_{k <= N/4} alpha_k - sum_{k > N/4} alpha_k)`` (the SB
    sum) and ``max_imag = 2 sum_k beta_k`` (the AB sum), with
    ``A_k = alpha_k + i beta_k``.  ``brute_max`` is the brute-force maximum
    of ``|M_z(x)|`` over all balanced strings for cross-checking.  When
    ``N`` is not divisible by 4 the SB branch is unavailable and
    ``max_real`` is nan.
    """
    if not x > 0:
        raise DomainError(f"x must be > 0, got {x}")
    _check_brute(params)
    alpha, beta = _alpha_beta(x, params)
    q = params.N // 4
    sb_ok = params.N % 4 == 0
    max_real = 2.0 * (alpha[:q].sum() - alpha[q:].sum()) if sb_ok else math.nan
    max_imag = 2.0 * beta.sum()
    _, mags = balanced_magnitudes(x, params)
    with np.errstate(over="ignore"):
        brute = float(mags.max() / envelope(x, params))
    return Lemma3Result(
        max_real=float(max_real),
        max_imag=float(max_imag),
        realized_by=(StringClass.SYM_BALANCED if sb_ok else None, StringClass.ANTISYM_BALANCED),
        brute_max=brute,
        sb_available=sb_ok,
    )


def lemma3_switchover(params, x_max=2.0, n_scan=400):
    """First ``x > 0`` where ``|sum beta_k|`` overtakes the SB real sum.

    For ``N = 4`` this is ``|beta_1 + beta_2| = alpha_1 - alpha_2``.  Works in
    enveloped units so the comparison is overflow-free.
    """
    if params.N % 4:
        raise DomainError("the SB branch needs N divisible by 4")
    q = params.N // 4
    ks = range(1, params.N // 2 + 1)

    def f(x):
        vals = np.array([enveloped_a_k(k, x, params) for k in ks])
        real_sum = vals.real[:q].sum() - vals.real[q:].sum()
        return float(abs(vals.imag.sum()) - abs(real_sum))

    xs = np.linspace(x_max / n_scan, x_max, n_scan)
    vals = np.array([f(x) for x in xs])
    idx = sign_changes(xs, vals, direction=1)
    if not idx:
        return math.inf
    i = idx[0]
    return bisect(f, xs[i], xs[i + 1], xtol=1e-12, f_lo=vals[i], f_hi=vals[i + 1])


def sinc_limit_check(z, P, sigma_small, n_points=2001):
    """RMS gap between ``|phi|`` at a small width and the top-hat ``|psi|`` on ``|x| <= pi/P``.

    Both wavefunctions have unit norm, so no further rescaling is applied.
    """
    if not 0 < sigma_small <= 0.05:
        raise DomainError(f"sigma_small must lie in (0, 0.05], got {sigma_small}")
    params = EncodingParams(z.N, P, sigma_small)
    xs = np.linspace(-math.pi / P, math.pi / P, n_points)
    gauss = np.abs(position_wave(WaveSpec(z, params), xs))
    ortho = np.abs(orthogonal_position_wave(z, xs, P))
    return float(np.sqrt(np.mean((gauss - ortho) ** 2)))
