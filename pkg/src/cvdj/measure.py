"""Detection probabilities in the window ``[-delta, delta]`` and the separations
between the constant and the two worst-case balanced encodings."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import exp1

from .encode import EncodingParams
from .errors import DomainError
from .position import WaveSpec, momentum_jumps, orthogonal_position_wave, position_wave
from .quadrature import integrate
from .strings import StringClass, canonical

QUAD_TOL = 1e-12


@dataclass(frozen=True)
class ProbabilityResult:
    value: float
    est_error: float


@dataclass(frozen=True)
class SeparationPair:
    delta_AB: float
    delta_SB: float

    @property
    def minimum(self):
        return min(self.delta_AB, self.delta_SB)


def density(spec, x):
    return np.abs(position_wave(spec, x)) ** 2


def detection_probability(spec, delta, abs_tol=QUAD_TOL):
    """Probability mass of ``|phi|**2`` on ``[-delta, delta]``."""
    if not delta > 0:
        raise DomainError(f"window half-width must be > 0, got {delta}")
    res = integrate(lambda x: density(spec, x), -delta, delta, abs_tol=abs_tol)
    return ProbabilityResult(float(res.value), float(res.est_error))


def _power_exp_integral(omega, L, k):
    """``int_L^inf exp(-i omega x) x**-k dx`` for ``k >= 2``."""
    if omega == 0:
        return L ** (1 - k) / (k - 1)
    z = 1j * omega * L
    # E_{n+1}(z) = (exp(-z) - z E_n(z)) / n, starting from E_1
    e_n = exp1(z)
    for n in range(1, k):
        e_n = (np.exp(-z) - z * e_n) / n
    return L ** (1 - k) * e_n


def tail_probability(spec, cutoff, order=2):
    """Mass of ``|phi|**2`` outside ``[-cutoff, cutoff]`` from the far-field expansion.

    Integrating by parts, ``phi(x) ~ (2 pi)**-1/2 sum_e exp(-i p_e x)
    sum_n J_e^(n) / (i x)**(n+1)`` where ``J_e^(n)`` is the jump of the
    ``n``-th derivative of the momentum amplitude at edge ``p_e``.  Each term
    of ``|phi|**2`` is integrated exactly; with ``order=2`` the neglected
    mass is ``O(cutoff**-5)``.
    """
    p, J = momentum_jumps(spec, order)
    L = float(cutoff)
    total = 0.0
    for e in range(len(p)):
        for f in range(len(p)):
            omega = p[e] - p[f]
            for m in range(order + 1):
                for n in range(order + 1):
                    coeff = J[m, e] * J[n, f] / ((1j) ** (m + 1) * (-1j) ** (n + 1))
                    total += coeff * _power_exp_integral(omega, L, m + n + 2)
    # |phi(-x)| = |phi(x)| for a real momentum amplitude, so both tails match
    return float(np.real(total)) / math.pi


def default_cutoff(params):
    return 40.0 * params.sigma + 200.0 / params.P


def total_probability(spec, cutoff=None, abs_tol=QUAD_TOL):
    """``int |phi|**2`` over the whole line: quadrature out to ``cutoff`` plus the analytic tail."""
    L = default_cutoff(spec.params) if cutoff is None else float(cutoff)
    res = detection_probability(spec, L, abs_tol=abs_tol)
    return ProbabilityResult(res.value + tail_probability(spec, L), res.est_error)


def canonical_specs(params):
    """Wave specs for the first member of the C, AB and SB canonical pairs."""
    return {
        cls.short: WaveSpec(canonical(cls, params.N)[0], params)
        for cls in (StringClass.CONSTANT, StringClass.ANTISYM_BALANCED, StringClass.SYM_BALANCED)
    }


def class_probabilities(params, delta):
    return {name: detection_probability(spec, delta).value for name, spec in canonical_specs(params).items()}


def separations(params, delta):
    if not params.sigma > 0:
        raise DomainError("sigma must be > 0")
    pr = class_probabilities(params, delta)
    return SeparationPair(abs(pr["C"] - pr["AB"]), abs(pr["C"] - pr["SB"]))


def success_probability_sharp(params, delta):
    """Single-query success probability: the smaller of the two separations."""
    return separations(params, delta).minimum


def success_probability_orthogonal(P=1.0, N=8):
    """Worst-case separation of the top-hat encoding at the window ``P delta = pi/2``."""
    if not P > 0:
        raise DomainError(f"P must be positive, got {P}")
    constant = canonical(StringClass.CONSTANT, N)[0]
    antisym = canonical(StringClass.ANTISYM_BALANCED, N)[0]
    delta = math.pi / (2.0 * P)

    def prob(z):
        f = lambda x: np.abs(orthogonal_position_wave(z, x, P)) ** 2
        return integrate(f, -delta, delta, abs_tol=QUAD_TOL).value

    return abs(float(prob(constant) - prob(antisym)))


def edge_density_derivative(params, delta):
    """``d Delta / d delta`` for the AB and SB separations.

    The window grows at both ends, so ``d Pr/d delta = 2 |phi(delta)|**2``;
    the sign of ``Pr[C] - Pr[z]`` carries the absolute value through.
    """
    if not delta > 0:
        raise DomainError(f"window half-width must be > 0, got {delta}")
    specs = canonical_specs(params)
    pr = {name: detection_probability(spec, delta).value for name, spec in specs.items()}
    dens = {name: float(density(spec, delta)) for name, spec in specs.items()}
    out = []
    for name in ("AB", "SB"):
        sign = 1.0 if pr["C"] >= pr[name] else -1.0
        out.append(2.0 * (dens["C"] - dens[name]) * sign)
    return tuple(out)


def normalized_params(sigma_bar, P=1.0, N=8):
    return EncodingParams(N, P, sigma_bar / P)
