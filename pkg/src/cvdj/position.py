"""Position-domain wavefunctions of the encoded state.

The inverse transform of the encoded momentum amplitude (kernel
``exp(-i p x)/sqrt(2 pi)``) is

    phi(x) = eta exp(-x**2/(2 sigma**2)) / (2 pi**(1/4) sqrt(sigma)) * M_z(x),

    M_z(x) = sum_j (-1)**z_j [erf((theta_{j+1} sigma**2 + i x)/(sqrt(2) sigma))
                              - erf((theta_j sigma**2 + i x)/(sqrt(2) sigma))].

``M_z`` itself grows like ``exp(x**2/(2 sigma**2))``, so everything here is
computed in the enveloped form ``exp(-x**2/(2 sigma**2)) M_z`` and the bare
modulation term is only recovered on request.
"""

import math
from dataclasses import dataclass

import numpy as np

from .encode import EncodingParams, bin_edges, normalization_eta
from .errors import DomainError
from .quadrature import gauss_legendre_panels
from .specfun import erf_scaled

_PI_QUARTER = math.pi ** 0.25


@dataclass(frozen=True)
class WaveSpec:
    z: object
    params: EncodingParams

    def __post_init__(self):
        if self.z.N != self.params.N:
            raise DomainError(f"string has {self.z.N} bits but params.N = {self.params.N}")


def _require_sigma(params):
    if not params.sigma > 0:
        raise DomainError(f"sigma must be > 0, got {params.sigma}")


def envelope(x, params):
    return np.exp(-np.asarray(x, dtype=float) ** 2 / (2.0 * params.sigma ** 2))


def prefactor(params):
    """``eta / (2 pi**(1/4) sqrt(sigma))``."""
    _require_sigma(params)
    return normalization_eta(params) / (2.0 * _PI_QUARTER * math.sqrt(params.sigma))


def bin_terms(x, params):
    """Enveloped erf differences, one row per bin: shape ``(N,) + x.shape``."""
    _require_sigma(params)
    x = np.asarray(x, dtype=float)
    edges = bin_edges(params).reshape((-1,) + (1,) * x.ndim)
    scaled = erf_scaled(edges, x, params.sigma)
    return np.diff(scaled, axis=0)


def enveloped_modulation(spec, x):
    """``exp(-x**2/(2 sigma**2)) * M_z(x)``; finite for every real ``x``."""
    terms = bin_terms(x, spec.params)
    return np.tensordot(spec.z.signs, terms, axes=1)


def modulation_term(spec, x):
    """The bare modulation sum ``M_z(x)``.

    Overflows to ``inf`` once ``x**2/(2 sigma**2)`` exceeds ~709; use
    :func:`enveloped_modulation` for magnitudes at large ``x``.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        return enveloped_modulation(spec, x) * np.exp(x ** 2 / (2.0 * spec.params.sigma ** 2))


def position_wave(spec, x):
    return prefactor(spec.params) * enveloped_modulation(spec, x)


def _check_k(k, params):
    if not 1 <= k <= params.N // 2:
        raise DomainError(f"k must lie in 1..{params.N // 2}, got {k}")


def enveloped_a_k(k, x, params):
    """``exp(-x**2/(2 sigma**2)) A_k(x)``.

    ``A_k`` is the erf difference over the ``k``-th bin right of the origin,
    ``[2P(k-1)/N, 2Pk/N]``, taken with ``-i x`` in the argument so that its
    phase advances as ``+(2k-1) P x / N`` in the narrow-Gaussian limit.  For
    real ``x`` it is the complex conjugate of the matching term of ``M_z``.
    """
    _check_k(k, params)
    _require_sigma(params)
    step = 2.0 * params.P / params.N
    x = np.asarray(x, dtype=float)
    return erf_scaled(step * k, -x, params.sigma) - erf_scaled(step * (k - 1), -x, params.sigma)


def a_k(k, x, params):
    x = np.asarray(x, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        return enveloped_a_k(k, x, params) * np.exp(x ** 2 / (2.0 * params.sigma ** 2))


def phasor(k, x, params):
    """Polar form ``(R_k, varphi_k)`` of the ``k``-th wavefunction term.

    ``R_k`` includes the envelope and the ``eta`` prefactor; the angle is in
    ``(-pi, pi]``.
    """
    term = prefactor(params) * enveloped_a_k(k, x, params)
    angle = np.angle(term)
    angle = np.where(angle <= -math.pi, math.pi, angle)
    magnitude = np.abs(term)
    if np.ndim(term) == 0:
        return float(magnitude), float(angle)
    return magnitude, angle


def orthogonal_position_wave(z, x, P):
    """Position wavefunction of the top-hat encoding.

    ``sin(Px/N)/(sqrt(P pi) x) * sum_j (-1)**z_j exp(i (N - 2j - 1) P x / N)``
    with ``j`` counted from 0; unit norm by construction.
    """
    if not P > 0:
        raise DomainError(f"P must be positive, got {P}")
    N = z.N
    x = np.asarray(x, dtype=float)
    # sin(Px/N)/x written through np.sinc so x = 0 is regular
    env = (P / N) / math.sqrt(P * math.pi) * np.sinc(P * x / (N * math.pi))
    freqs = P * (N - 2.0 * np.arange(N) - 1.0) / N
    phases = np.exp(1j * np.multiply.outer(x, freqs))
    return env * (phases @ z.signs)


def fourier_position_wave(momentum, x, edges, order=40):
    """Numeric inverse transform of a momentum amplitude supported on ``edges``.

    Composite Gauss-Legendre quadrature, one panel per interval of ``edges``
    (the amplitude must be smooth inside each panel), kernel
    ``exp(-i p x)/sqrt(2 pi)``.  Used as an oracle independent of the erf route.
    """
    p, w = gauss_legendre_panels(edges, order)
    amp = np.asarray(momentum(p), dtype=float) * w
    x = np.asarray(x, dtype=float)
    kernel = np.exp(-1j * np.multiply.outer(x, p))
    return (kernel @ amp) / math.sqrt(2.0 * math.pi)


def momentum_jumps(spec, order=0):
    """Edges where the encoded momentum amplitude is discontinuous.

    Returns ``(p_e, J)`` where ``J[n, e]`` is the jump of the ``n``-th
    derivative at ``p_e`` (``f(p_e+) - f(p_e-)`` for ``n = 0``), for
    ``n = 0..order``.  These set the ``1/x`` expansion of the far field.
    """
    if order > 2:
        raise DomainError("derivative jumps are available up to order 2")
    params = spec.params
    s = params.sigma
    edges = bin_edges(params)
    signs = spec.z.signs
    left = np.concatenate([[0.0], signs])
    right = np.concatenate([signs, [0.0]])
    g = normalization_eta(params) * np.exp(-0.5 * (edges * s) ** 2) * math.sqrt(s) / _PI_QUARTER
    # derivatives of the Gaussian amplitude: g' = -p s^2 g, g'' = (p^2 s^4 - s^2) g
    derivs = [g, -edges * s ** 2 * g, (edges ** 2 * s ** 4 - s ** 2) * g][: order + 1]
    step = right - left
    keep = step != 0
    return edges[keep], np.array([d * step for d in derivs])[:, keep]
