"""Momentum-domain encoding of an oracle string.

The input squeezed vacuum has momentum amplitude
``exp(-p**2 sigma**2 / 2) sqrt(sigma) / pi**(1/4)``.  The oracle multiplies it
by a square wave that carries ``(-1)**z_i`` on the ``i``-th of ``N`` equal
bins tiling ``[-P, P)`` and zero outside, and the result is renormalized by
``eta = 1/sqrt(erf(P sigma))``.

Bins are half-open, ``[theta_i, theta_{i+1})`` with
``theta_j = P (2j - N) / N``, so every ``p`` in ``[-P, P)`` lies in exactly
one bin.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .specfun import erf_real

_PI_QUARTER = math.pi ** 0.25


@dataclass(frozen=True)
class EncodingParams:
    N: int
    P: float
    sigma: float

    def __post_init__(self):
        if self.N <= 0 or self.N % 2:
            raise DomainError(f"N must be positive and even, got {self.N}")
        if not self.P > 0:
            raise DomainError(f"P must be positive, got {self.P}")
        if not self.sigma >= 0:
            raise DomainError(f"sigma must be non-negative, got {self.sigma}")

    @property
    def zeta(self):
        """Squeezing parameter, ``sigma = exp(-zeta)``."""
        if self.sigma == 0:
            return math.inf
        return -math.log(self.sigma)

    @property
    def sigma_bar(self):
        return self.P * self.sigma

    def normalized(self, delta):
        return NormalizedParams(self.P * delta, self.P * self.sigma)


@dataclass(frozen=True)
class NormalizedParams:
    """Window and width in units of the encoding length: ``P delta`` and ``P sigma``."""

    delta_bar: float
    sigma_bar: float

    def __post_init__(self):
        if not (self.delta_bar > 0 and self.sigma_bar > 0):
            raise DomainError("normalized parameters must be strictly positive")

    def to_physical(self, P=1.0, N=8):
        """``(EncodingParams, delta)`` realizing these normalized values at encoding length ``P``."""
        return EncodingParams(N, P, self.sigma_bar / P), self.delta_bar / P


def _require_sigma(params):
    if not params.sigma > 0:
        raise DomainError(f"sigma must be > 0 here, got {params.sigma}")


def theta(j, params):
    """Bin edge ``theta_j = P (2j - N)/N`` for ``0 <= j <= N``."""
    if not 0 <= j <= params.N:
        raise DomainError(f"bin edge index {j} outside 0..{params.N}")
    return params.P * (2 * j - params.N) / params.N


def bin_edges(params):
    return params.P * (2.0 * np.arange(params.N + 1) - params.N) / params.N


def bin_index(p, params):
    """Index of the bin containing ``p``, or -1 outside ``[-P, P)``."""
    p = np.asarray(p, dtype=float)
    edges = bin_edges(params)
    idx = np.searchsorted(edges, p, side="right") - 1
    idx = np.where((idx >= 0) & (idx < params.N), idx, -1)
    return idx[()] if idx.ndim == 0 else idx


def momentum_bin(i, p, params):
    """Indicator of the ``i``-th bin, ``[theta_i, theta_{i+1})``."""
    if not 0 <= i < params.N:
        raise DomainError(f"bin index {i} outside 0..{params.N - 1}")
    out = (np.asarray(bin_index(p, params)) == i).astype(int)
    return out[()] if out.ndim == 0 else out


def square_wave(z, p, params):
    """``(-1)**z_i`` on bin ``i``, 0 outside ``[-P, P)``."""
    if z.N != params.N:
        raise DomainError(f"string has {z.N} bits but params.N = {params.N}")
    idx = np.asarray(bin_index(p, params))
    signs = z.signs
    out = np.where(idx >= 0, signs[np.clip(idx, 0, None)], 0.0)
    return out[()] if out.ndim == 0 else out


def momentum_gaussian(p, params):
    _require_sigma(params)
    s = params.sigma
    return np.exp(-0.5 * (np.asarray(p, dtype=float) * s) ** 2) * math.sqrt(s) / _PI_QUARTER


def normalization_eta(params):
    """``1/sqrt(erf(P sigma))``: restores unit norm after truncation to ``[-P, P]``."""
    ps = params.P * params.sigma
    if not ps > 0:
        raise DomainError("P*sigma must be > 0 for the truncated Gaussian to be normalizable")
    return 1.0 / math.sqrt(float(erf_real(ps)))


def encoded_momentum(z, p, params):
    return normalization_eta(params) * square_wave(z, p, params) * momentum_gaussian(p, params)


def tophat_momentum(z, p, P):
    """Orthogonal top-hat encoding, ``square_wave / sqrt(2P)``."""
    params = EncodingParams(z.N, P, 0.0)
    return square_wave(z, p, params) / math.sqrt(2.0 * P)
