import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvdj.errors import DomainError, OutOfRangeError
from cvdj.specfun import IM_MAX, RE_MAX, erf_complex, erf_real, erf_scaled

mpmath.mp.dps = 40


def _ref(z):
    return complex(mpmath.erf(mpmath.mpc(z.real, z.imag)))


def _rel_err(got, want):
    return abs(got - want) / max(1.0, abs(want))


@pytest.mark.parametrize("z", [0.5, 1.0, 3.0, 0.3 + 0.4j, 1 + 1j, 2 - 3j, -4 + 1j, 0.1 + 5j, 5 + 0.2j])
def test_erf_complex_matches_mpmath(z):
    assert _rel_err(complex(erf_complex(z)), _ref(complex(z))) < 1e-12


def test_erf_complex_grid_against_mpmath():
    rng = np.random.default_rng(7)
    zs = rng.uniform(-6, 6, 300) + 1j * rng.uniform(-4, 4, 300)
    got = erf_complex(zs)
    worst = max(_rel_err(g, _ref(z)) for g, z in zip(got, zs))
    assert worst < 1e-12


def test_erf_complex_series_boundary_is_continuous():
    # both branches agree just inside and outside the switch radius
    for angle in np.linspace(0, 2 * np.pi, 13):
        for r in (1.999999, 2.000001):
            z = r * np.exp(1j * angle)
            assert _rel_err(complex(erf_complex(z)), _ref(z)) < 1e-12


def test_erf_complex_out_of_range():
    with pytest.raises(OutOfRangeError):
        erf_complex(RE_MAX + 1)
    with pytest.raises(OutOfRangeError):
        erf_complex(1j * (IM_MAX + 1))


def test_erf_complex_broadcasts_shape():
    z = np.linspace(-1, 1, 6).reshape(2, 3) + 0.5j
    assert erf_complex(z).shape == (2, 3)
    assert np.isscalar(erf_complex(0.3)) or np.ndim(erf_complex(0.3)) == 0


@settings(max_examples=200, deadline=None)
@given(st.floats(-8, 8), st.floats(-5, 5))
def test_erf_odd_symmetry(x, y):
    z = complex(x, y)
    assert abs(erf_complex(-z) + erf_complex(z)) <= 1e-12 * max(1.0, abs(erf_complex(z)))


@settings(max_examples=200, deadline=None)
@given(st.floats(-8, 8), st.floats(-5, 5))
def test_erf_conjugate_symmetry(x, y):
    z = complex(x, y)
    assert abs(erf_complex(z.conjugate()) - np.conj(erf_complex(z))) <= 1e-12 * max(1.0, abs(erf_complex(z)))


def test_erf_derivative_finite_difference():
    # d/dz erf(z) = 2/sqrt(pi) exp(-z^2)
    h = 1e-5
    for z in (0.3 + 0.2j, 1.5 - 0.7j, 2.5 + 1.0j, -3 + 0.5j):
        fd = (erf_complex(z + h) - erf_complex(z - h)) / (2 * h)
        exact = 2 / math.sqrt(math.pi) * np.exp(-z * z)
        assert abs(fd - exact) < 1e-8 * max(1.0, abs(exact))


@settings(max_examples=300, deadline=None)
@given(st.floats(0.01, 3), st.floats(0.01, 3))
def test_erf_concavity_inequality(a, b):
    assert 2 * erf_real(a) - erf_real(a + b) - erf_real(a - b) > 0


def test_symmetries_on_random_box_sample():
    rng = np.random.default_rng(3)
    z = rng.uniform(-RE_MAX, RE_MAX, 10_000) + 1j * rng.uniform(-IM_MAX, IM_MAX, 10_000)
    f = erf_complex(z)
    scale = np.maximum(1.0, np.abs(f))
    assert np.max(np.abs(erf_complex(-z) + f) / scale) <= 1e-12
    assert np.max(np.abs(erf_complex(np.conj(z)) - np.conj(f)) / scale) <= 1e-12


def test_reference_values():
    assert erf_complex(0) == 0
    assert complex(erf_complex(1.0)).real == pytest.approx(0.8427007929497149, abs=1e-15)
    v = complex(erf_complex(1j))
    assert v.real == 0 or abs(v.real) < 1e-16
    assert v.imag == pytest.approx(1.6504257587975428, abs=1e-14)
    assert complex(erf_scaled(0.0, 0.0, 1.0)) == 0
    assert complex(erf_scaled(1.0, 0.0, 1.0)).real == pytest.approx(0.6826894921370859, abs=1e-15)


def test_erf_real_matches_math():
    xs = np.linspace(-7, 7, 141)
    got = erf_real(xs)
    want = np.array([math.erf(x) for x in xs])
    assert np.max(np.abs(got - want)) < 1e-14


@pytest.mark.parametrize("a,x,s", [(1.0, 0.0, 0.5), (1.0, 8.0, 0.5), (1.0, 3.0, 0.4), (-0.75, 2.0, 1.7), (0.25, -8.0, 0.3), (1.0, 5.0, 3.0)])
def test_erf_scaled_matches_mpmath(a, x, s):
    arg = mpmath.mpc(a * s * s, x) / (mpmath.sqrt(2) * s)
    want = complex(mpmath.exp(-mpmath.mpf(x) ** 2 / (2 * s * s)) * mpmath.erf(arg))
    got = complex(erf_scaled(a, x, s))
    assert abs(got - want) <= 1e-12 * max(1.0, abs(want))


def test_erf_scaled_stays_finite_where_bare_erf_overflows():
    # bare erf would have |Im arg| ~ 70 here
    out = erf_scaled(1.0, 20.0, 0.2)
    assert np.isfinite(out)
    with pytest.raises(OutOfRangeError):
        erf_complex(complex(0.2 / math.sqrt(2), 20.0 / (math.sqrt(2) * 0.2)))


def test_erf_scaled_agrees_with_product_in_range():
    a, s = 0.6, 1.3
    x = np.linspace(-4, 4, 41)
    direct = np.exp(-x**2 / (2 * s * s)) * erf_complex((a * s * s + 1j * x) / (math.sqrt(2) * s))
    assert np.max(np.abs(erf_scaled(a, x, s) - direct)) < 1e-13


def test_erf_scaled_rejects_nonpositive_width():
    with pytest.raises(DomainError):
        erf_scaled(1.0, 0.0, 0.0)
