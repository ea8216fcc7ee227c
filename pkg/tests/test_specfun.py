import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special

from mordellkit.errors import DomainError
from mordellkit.specfun import (
    CATALOG,
    SELF_RECIPROCAL_1D,
    BesselValue,
    EllipticValues,
    agm,
    bessel_J0,
    bessel_K0,
    bessel_K0_complex,
    bessel_Y0,
    dn_quarter_check,
    elliptic_E,
    elliptic_K,
    k0_imaginary,
    kernel,
    kernel_eval_1d,
    kernel_eval_2d,
    modulus_from_ratio,
    series_K_check,
)
from mordellkit.specfun import bessel as bessel_mod
from mordellkit.specfun.elliptic import agm_steps

SQPI = math.sqrt(math.pi)

# default parameters for every parameterised catalog entry
DEFAULTS = {
    "p": 1.3, "alpha": 1.2, "beta": 0.8, "n": 2.0, "b": 1.1, "c": 0.7, "a": 0.9, "lam": 2.0,
    "k": 0.6, "x0": 1.0, "m": 1.0, "sign": 1.0, "x": 2.0, "theta": 0.7, "phi": 0.3,
    "theta_re": 0.4, "theta_im": 0.1, "phi_re": 0.2, "phi_im": 0.05,
}


def _descriptor(kid):
    spec = CATALOG[kid]
    params = {name: DEFAULTS[name] for name in spec.params}
    if kid in ("KCHIRP_RE", "KCHIRP_IM"):
        params = {"lam": 2.0, "a": 1.0}
    if kid == "KLAT_INNER":
        params = {"n": 1.0, "x0": 1.0}
    return kernel(kid, **params)


def test_sr_values_at_zero():
    assert kernel_eval_1d(kernel("SRC1"), 0.0) == 1.0
    assert kernel_eval_1d(kernel("SRS1"), 0.0) == 0.0


def test_fbeta_kernel_at_zero():
    assert kernel_eval_1d(kernel("KFBETA", beta=1.0, theta=math.pi / 2), 0.0) == pytest.approx(1.0, abs=1e-15)


def test_2d_special_points():
    assert kernel_eval_2d(kernel("K2D_COS1"), 0.0, 0.0) == pytest.approx(0.5, abs=1e-15)
    x = 0.83
    assert kernel_eval_2d(kernel("K2D_F1"), x, 0.0) == pytest.approx(1 / math.cosh(math.sqrt(math.pi / 2) * x), rel=1e-15)
    assert kernel_eval_2d(kernel("K2D_ONEMINUSCOS"), 0.0, 1.3) == 0.0


def test_sinsin_removable_limit():
    f = kernel("K2D_SINSIN")
    limit = (1 / SQPI) / math.sinh(SQPI)
    assert kernel_eval_2d(f, 0.0, 1.0) == pytest.approx(limit, rel=1e-14)
    # order x^2 correction from the Taylor expansion is below 1e-12 at 1e-6
    assert kernel_eval_2d(f, 1e-6, 1.0) == pytest.approx(limit, abs=1e-12)
    assert kernel_eval_2d(f, 0.0, 0.0) == pytest.approx(1 / math.pi, rel=1e-14)


@pytest.mark.parametrize("kid", sorted(CATALOG))
def test_every_kernel_finite_on_log_grid(kid):
    f = _descriptor(kid)
    xs = np.concatenate([[0.0], np.geomspace(1e-8, 50, 60)])
    if f.dim == 1:
        v = np.asarray(f(xs))
    else:
        v = np.asarray(f(xs[:, None], xs[None, :]))
    assert np.all(np.isfinite(v))


def _assert_within_envelope(f):
    d = f.decay
    xs = np.linspace(0.0, 12.0, 241)
    env_x = np.exp(-d.rate_x * (xs if d.kind_x == "exp" else xs * xs))
    if f.dim == 1:
        v = np.abs(np.asarray(f(xs)))
        assert np.all(v <= d.amplitude * env_x * (1 + 1e-12) + 1e-300)
    else:
        env_y = np.exp(-d.rate_y * (xs if d.kind_y == "exp" else xs * xs))
        v = np.abs(np.asarray(f(xs[:, None], xs[None, :])))
        assert np.all(v <= d.amplitude * env_x[:, None] * env_y[None, :] * (1 + 1e-12) + 1e-300)


INTEGRABLE = sorted(k for k, s in CATALOG.items() if s.integrable)


@pytest.mark.parametrize("kid", INTEGRABLE)
def test_envelope_bounds_kernel(kid):
    _assert_within_envelope(_descriptor(kid))


@pytest.mark.parametrize("kid", [k for k in INTEGRABLE if CATALOG[k].params == ("alpha",)])
@pytest.mark.parametrize("alpha", [0.2, 1.0, 3.1, 10.0])
def test_envelope_across_alpha(kid, alpha):
    try:
        f = kernel(kid, alpha=alpha)
    except DomainError:
        pytest.skip("outside the kernel domain")
    _assert_within_envelope(f)


def test_non_integrable_kernel_refuses_quadrature():
    f = kernel("KTANH_COS", alpha=1.0)
    assert np.isfinite(kernel_eval_1d(f, 3.0))
    with pytest.raises(DomainError):
        f.integrand()


@pytest.mark.parametrize("kid", SELF_RECIPROCAL_1D)
def test_parity(kid):
    f = kernel(kid)
    xs = np.array([0.1, 0.7, 1.9, 3.3])
    a, b = np.asarray(f(xs)), np.asarray(f(-xs))
    if f.spec.parity == "even":
        assert np.array_equal(a, b)
    else:
        assert np.array_equal(a, -b)


def test_kernel_closed_forms():
    x = np.array([0.3, 1.1, 2.5])
    assert np.allclose(kernel("SRC2")(x), np.cosh(SQPI * x / 2) / np.cosh(SQPI * x), rtol=1e-14)
    assert np.allclose(kernel("SRC3")(x), 1 / (1 + 2 * np.cosh(math.sqrt(2 * math.pi / 3) * x)), rtol=1e-14)
    c = math.cos(math.sqrt(2) * math.pi)
    ref = np.sinh(SQPI * x) / (np.cosh(math.sqrt(2 * math.pi) * x) - c)
    assert np.allclose(kernel("SRS4")(x), ref, rtol=1e-13)


def test_descriptor_validation():
    with pytest.raises(DomainError):
        kernel("NOPE")
    with pytest.raises(DomainError):
        kernel("KHR1")
    with pytest.raises(DomainError):
        kernel("KHR1", alpha=-1.0)
    with pytest.raises(DomainError):
        kernel("KHR1", alpha=1.0, beta=2.0)
    with pytest.raises(DomainError):
        kernel_eval_2d(kernel("SRC1"), 0.1, 0.2)
    with pytest.raises(DomainError):
        kernel_eval_1d(kernel("K2D_COS1"), 0.1)


# --- elliptic -------------------------------------------------------------------

def test_agm_values():
    assert agm(1.0, 1.0) == 1.0
    k = 1 / math.sqrt(2)
    K = math.gamma(0.25) ** 2 / (4 * SQPI)
    assert K == pytest.approx(1.854074677, abs=1e-9)
    assert math.pi / (2 * agm(1.0, k)) == pytest.approx(K, rel=1e-15)
    assert elliptic_K(k) == pytest.approx(K, rel=1e-15)


@pytest.mark.parametrize("b", [1e-3, 0.01, 0.5, 2.0, 100.0, 1e3])
def test_agm_quadratic(b):
    assert agm_steps(1.0, b) <= 8
    assert agm(1.0, b) == pytest.approx(float(mpmath.agm(1, b)), rel=1e-15)


@pytest.mark.parametrize("k", [1e-6, 0.1, 0.3, 0.6, 1 / math.sqrt(2), 0.9, 0.999])
def test_elliptic_against_scipy(k):
    assert elliptic_K(k) == pytest.approx(special.ellipk(k * k), rel=1e-14)
    assert elliptic_E(k) == pytest.approx(special.ellipe(k * k), rel=1e-14)


def test_elliptic_small_modulus():
    assert elliptic_K(1e-12) == pytest.approx(math.pi / 2, rel=1e-15)
    assert elliptic_E(1e-12) == pytest.approx(math.pi / 2, rel=1e-15)


def test_legendre_random():
    rng = np.random.default_rng(7)
    for k in rng.uniform(0.01, 0.99, 20):
        assert abs(EllipticValues.from_modulus(float(k)).legendre_residual()) < 1e-12


@pytest.mark.parametrize("k", [0.3, 1 / math.sqrt(2), 0.9])
def test_legendre_relation(k):
    ev = EllipticValues.from_modulus(k)
    assert ev.E * ev.K_prime + ev.E_prime * ev.K - ev.K * ev.K_prime == pytest.approx(math.pi / 2, abs=1e-12)


@pytest.mark.parametrize("alpha", [0.05, 0.4, 1.0, 2.0, 7.5])
def test_modulus_from_ratio(alpha):
    ev = modulus_from_ratio(alpha)
    assert ev.K_prime / ev.K == pytest.approx(alpha, rel=1e-13)
    assert ev.k ** 2 + ev.k_prime ** 2 == pytest.approx(1.0, rel=1e-14)


def test_self_dual_point():
    ev = modulus_from_ratio(1.0)
    assert ev.k == pytest.approx(1 / math.sqrt(2), rel=1e-15)
    s, K = series_K_check(1.0)
    assert s == pytest.approx(K, abs=1e-13)
    assert K == pytest.approx(elliptic_K(1 / math.sqrt(2)), rel=1e-15)


@pytest.mark.parametrize("alpha", [0.5, 2.0, 3.0])
def test_series_K(alpha):
    s, K = series_K_check(alpha)
    assert abs(s - K) < 1e-10


@pytest.mark.parametrize("k,tol", [(1 / math.sqrt(2), 1e-12), (0.6, 1e-10), (0.2, 1e-12), (1e-4, 1e-12)])
def test_dn_quarter(k, tol):
    a, b = dn_quarter_check(k)
    assert abs(a - b) < tol
    if k == 1 / math.sqrt(2):
        assert b == pytest.approx(1.30656, abs=1e-5)


def test_elliptic_domain():
    for bad in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(DomainError):
            elliptic_K(bad)
    with pytest.raises(DomainError):
        modulus_from_ratio(-1.0)


# --- Bessel -------------------------------------------------------------------------

XS = [1e-4, 0.5, 1.0, 2.0, 5.0, 7.99, 8.0, 8.01, 12.0, 24.99, 25.0, 25.01, 60.0, 300.0]


@pytest.mark.parametrize("x", XS)
def test_j0_y0_against_scipy(x):
    assert bessel_J0(x) == pytest.approx(special.j0(x), abs=1e-13)
    assert bessel_Y0(x) == pytest.approx(special.y0(x), abs=1e-13)


@pytest.mark.parametrize("x", [1e-3, 0.5, 1.99, 2.0, 2.01, 5.0, 20.0, 80.0])
def test_k0_against_scipy(x):
    assert bessel_K0(x) == pytest.approx(special.k0(x), rel=1e-13)


@pytest.mark.parametrize("x", [bessel_mod.SERIES_MAX, bessel_mod.HANKEL_MIN])
def test_bessel_regime_switch_continuous(x):
    lo = bessel_J0(np.nextafter(x, 0)), bessel_Y0(np.nextafter(x, 0))
    hi = bessel_J0(x), bessel_Y0(x)
    assert abs(lo[0] - hi[0]) <= 1e-11 and abs(lo[1] - hi[1]) <= 1e-11


def test_bessel_methods_agree_at_switch():
    x = bessel_mod.SERIES_MAX
    j_s, y_s = bessel_mod._j0_series(x), bessel_mod._y0_series(x)
    j_i, y_i = bessel_mod._jy0_integral(x)
    assert abs(j_s - j_i) <= 1e-11 and abs(y_s - y_i) <= 1e-11
    x = bessel_mod.HANKEL_MIN
    j_h, y_h = bessel_mod._hankel(x)
    j_i, y_i = bessel_mod._jy0_integral(x)
    assert abs(j_h - j_i) <= 1e-11 and abs(y_h - y_i) <= 1e-11
    x = bessel_mod.K0_SERIES_MAX
    assert abs(bessel_mod._k0_series(x) - bessel_mod._k0_trapezoid(x)) <= 1e-12


@pytest.mark.parametrize("x", [0.3, 2.0, 5.0, 10.0, 24.0])
def test_k0_imaginary_relation(x):
    ref = complex(mpmath.besselk(0, 1j * x))
    assert abs(k0_imaginary(x) - ref) < 1e-12
    assert abs(k0_imaginary(x, -1) - ref.conjugate()) < 1e-12
    assert abs(bessel_K0_complex(1j * x) - ref) < 1e-9 * max(1.0, abs(ref))


@settings(max_examples=30, deadline=None)
@given(r=st.floats(0.05, 25), t=st.floats(-3.0, 3.0))
def test_k0_complex_against_mpmath(r, t):
    z = cmath.rect(r, t)
    ref = complex(mpmath.besselk(0, z))
    assert abs(bessel_K0_complex(z) - ref) <= 1e-9 * max(1.0, abs(ref))


def test_bessel_domain():
    with pytest.raises(DomainError):
        bessel_Y0(0.0)
    with pytest.raises(DomainError):
        bessel_K0(-1.0)
    with pytest.raises(DomainError):
        bessel_K0_complex(-2.0)
    with pytest.raises(DomainError):
        bessel_K0_complex(cmath.rect(30, 2.5))
    # the large-argument branch has no size limit in the right sector
    assert abs(bessel_K0_complex(30j) - complex(mpmath.besselk(0, 30j))) < 1e-12


def test_bessel_value_bundle():
    b = BesselValue.at(3.0)
    assert (b.J0, b.Y0, b.K0) == (bessel_J0(3.0), bessel_Y0(3.0), bessel_K0(3.0))
