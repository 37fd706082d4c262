"""Continuous-variable Deutsch-Jozsa algorithm with Gaussian (squeezed) inputs.

Momentum encoding of N-bit oracle strings, closed-form position wavefunctions,
windowed detection probabilities, window/width optimization and brute-force
dominance checks over balanced strings.
"""

from .encode import EncodingParams, NormalizedParams
from .errors import DomainError, OutOfRangeError, RootNotFoundError
from .measure import (
    SeparationPair,
    detection_probability,
    separations,
    success_probability_orthogonal,
    success_probability_sharp,
    total_probability,
)
from .optimize import find_optimum, find_simultaneous_stationary, stationary_delta, sweep
from .position import WaveSpec, modulation_term, orthogonal_position_wave, position_wave
from .specfun import erf_complex, erf_scaled
from .strings import OracleString, StringClass, canonical, classify, enumerate_balanced

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "EncodingParams",
    "NormalizedParams",
    "OracleString",
    "OutOfRangeError",
    "RootNotFoundError",
    "SeparationPair",
    "StringClass",
    "WaveSpec",
    "canonical",
    "classify",
    "detection_probability",
    "enumerate_balanced",
    "erf_complex",
    "erf_scaled",
    "find_optimum",
    "find_simultaneous_stationary",
    "modulation_term",
    "orthogonal_position_wave",
    "position_wave",
    "separations",
    "stationary_delta",
    "success_probability_orthogonal",
    "success_probability_sharp",
    "sweep",
    "total_probability",
]
