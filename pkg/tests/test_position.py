import math

import numpy as np
import pytest

from cvdj.encode import EncodingParams, bin_edges, encoded_momentum, tophat_momentum
from cvdj.errors import DomainError
from cvdj.position import (
    WaveSpec,
    a_k,
    enveloped_a_k,
    enveloped_modulation,
    fourier_position_wave,
    modulation_term,
    momentum_jumps,
    orthogonal_position_wave,
    phasor,
    position_wave,
)
from cvdj.specfun import erf_complex
from cvdj.strings import OracleString, StringClass, canonical, enumerate_balanced

XS = np.linspace(-8, 8, 161)


@pytest.mark.parametrize("sigma", [0.3, 1.0, 1.67, 3.0])
@pytest.mark.parametrize("text", ["00000000", "00001111", "00111100", "01101001"])
def test_closed_form_matches_fourier_oracle(sigma, text):
    params = EncodingParams(8, 1.0, sigma)
    z = OracleString.parse(text)
    closed = position_wave(WaveSpec(z, params), XS)
    oracle = fourier_position_wave(lambda p: encoded_momentum(z, p, params), XS, bin_edges(params))
    assert np.sqrt(np.mean(np.abs(closed - oracle) ** 2)) < 1e-12


def test_orthogonal_wave_matches_fourier_oracle():
    z = OracleString.parse("00111100")
    for P in (1.0, 2.5):
        edges = bin_edges(EncodingParams(8, P, 1.0))
        oracle = fourier_position_wave(lambda p: tophat_momentum(z, p, P), XS, edges)
        assert np.max(np.abs(orthogonal_position_wave(z, XS, P) - oracle)) < 1e-12


def test_modulation_term_direct_sum_in_range():
    params = EncodingParams(8, 1.0, 0.9)
    z = OracleString.parse("01011010")
    x = np.linspace(-2, 2, 21)
    edges = bin_edges(params)
    s = params.sigma
    args = (edges[:, None] * s * s + 1j * x[None, :]) / (math.sqrt(2) * s)
    direct = z.signs @ np.diff(erf_complex(args), axis=0)
    np.testing.assert_allclose(modulation_term(WaveSpec(z, params), x), direct, rtol=1e-12, atol=1e-13)


def test_enveloped_modulation_finite_far_out():
    params = EncodingParams(8, 1.0, 0.2)
    spec = WaveSpec(canonical(StringClass.SYM_BALANCED, 8)[0], params)
    vals = enveloped_modulation(spec, np.array([50.0, 500.0]))
    assert np.all(np.isfinite(vals))


def test_density_even_and_complement_invariant():
    params = EncodingParams(8, 1.0, 1.3)
    for z in enumerate_balanced(8)[::7]:
        d = np.abs(position_wave(WaveSpec(z, params), XS)) ** 2
        d_neg = np.abs(position_wave(WaveSpec(z, params), -XS)) ** 2
        d_comp = np.abs(position_wave(WaveSpec(z.complement(), params), XS)) ** 2
        np.testing.assert_allclose(d, d_neg, rtol=1e-12, atol=1e-16)
        np.testing.assert_allclose(d, d_comp, rtol=1e-12, atol=1e-16)


def test_a_k_is_conjugate_of_modulation_term():
    params = EncodingParams(8, 1.0, 0.7)
    x = np.linspace(-1.5, 1.5, 13)
    edges = bin_edges(params)
    s = params.sigma
    for k in range(1, 5):
        lo, hi = edges[4 + k - 1], edges[4 + k]
        m_term = (erf_complex((hi * s * s + 1j * x) / (math.sqrt(2) * s))
                  - erf_complex((lo * s * s + 1j * x) / (math.sqrt(2) * s)))
        np.testing.assert_allclose(a_k(k, x, params), np.conj(m_term), rtol=1e-12, atol=1e-14)


def test_a_k_phase_small_sigma():
    # narrow Gaussian: the phase advances as (2k - 1) P x / N
    params = EncodingParams(8, 1.0, 0.01)
    x = 0.8
    for k in range(1, 5):
        _, angle = phasor(k, x, params)
        assert angle == pytest.approx((2 * k - 1) * x / 8, abs=1e-3)


def test_phasor_angle_range_and_k_bounds():
    params = EncodingParams(8, 1.0, 1.0)
    _, angles = phasor(3, np.linspace(-30, 30, 301), params)
    assert np.all((angles > -math.pi) & (angles <= math.pi))
    with pytest.raises(DomainError):
        enveloped_a_k(0, 0.0, params)
    with pytest.raises(DomainError):
        enveloped_a_k(5, 0.0, params)


def test_wavespec_rejects_mismatched_length():
    with pytest.raises(DomainError):
        WaveSpec(OracleString.parse("0011"), EncodingParams(8, 1.0, 1.0))


def test_momentum_jumps_far_field_expansion():
    # phi(x) ~ (2 pi)^-1/2 sum_e exp(-i p_e x) sum_n J_e^(n) / (i x)^(n+1); relative
    # remainder after three orders falls like x^-3
    params = EncodingParams(8, 1.0, 1.2)
    spec = WaveSpec(canonical(StringClass.ANTISYM_BALANCED, 8)[0], params)
    p, J = momentum_jumps(spec, order=2)

    def rel_err(x):
        approx = sum(J[n, e] * np.exp(-1j * p[e] * x) / (1j * x) ** (n + 1)
                     for e in range(len(p)) for n in range(3)) / math.sqrt(2 * math.pi)
        exact = position_wave(spec, x)
        return abs(approx - exact) / abs(exact)

    e1, e2 = rel_err(100.5), rel_err(201.0)
    assert e1 < 1e-6
    assert 4.0 < e1 / e2 < 16.0
