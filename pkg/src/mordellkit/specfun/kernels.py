"""Catalog of the hyperbolic integrand families.

Each catalog entry knows how to evaluate itself (vectorised, singularity
safe), which parameters it takes and their domain, and a decay envelope
``amplitude*exp(-rate*x)`` / ``amplitude*exp(-rate*x**2)`` per axis that
bounds it on the positive axis or quadrant.  Declared rates are deliberately
a little below the true asymptotic rate where polynomial prefactors appear.

Descriptors are validated when they are built; evaluation does no checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from ..errors import DomainError
from ..quad import Integrand1D, Integrand2D
from ._hyp import (
    cosh_ratio,
    one_minus_tanh_product,
    ratio_amplitude,
    sech,
    sinc,
    sinh_ratio,
    x_coth,
    x_over_sinh,
)

__all__ = [
    "Decay",
    "KernelSpec",
    "KernelDescriptor",
    "CATALOG",
    "kernel",
    "kernel_eval_1d",
    "kernel_eval_2d",
    "SELF_RECIPROCAL_1D",
]

PI = math.pi
SQPI = math.sqrt(PI)


@dataclass(frozen=True)
class Decay:
    rate_x: float
    kind_x: str = "exp"
    amplitude: float = 1.0
    rate_y: float | None = None
    kind_y: str | None = None
    freq_x: float = 0.0
    freq_y: float = 0.0


@dataclass(frozen=True)
class KernelSpec:
    kernel_id: str
    dim: int
    params: tuple
    func: Callable
    decay: Callable[[Mapping], Decay]
    formula: str
    domain: Callable[[Mapping], str | None] | None = None
    parity: str = "even"
    reciprocal: str | None = None
    integrable: bool = True


def _positive(p):
    for name, v in p.items():
        if not (math.isfinite(v) and v > 0):
            return f"{name} must be positive, got {v}"
    return None


def _finite(p):
    for name, v in p.items():
        if not math.isfinite(v):
            return f"{name} must be finite, got {v}"
    return None


def _all(*checks):
    def check(p):
        for c in checks:
            msg = c(p)
            if msg:
                return msg
        return None
    return check


def _positive_names(*names):
    return lambda p: _positive({n: p[n] for n in names})


def _nonnegative_int(*names):
    def check(p):
        for n in names:
            v = p[n]
            if v < 0 or v != int(v):
                return f"{n} must be a non-negative integer, got {v}"
        return None
    return check


CATALOG: dict[str, KernelSpec] = {}


def _register(kernel_id, dim, params, func, decay, formula, domain=None, parity="even", reciprocal=None,
              integrable=True):
    CATALOG[kernel_id] = KernelSpec(
        kernel_id, dim, tuple(params), func, decay, formula,
        domain if domain is not None else (_positive if params else None),
        parity, reciprocal, integrable,
    )


def _exp(rate, amplitude=1.0, freq=0.0):
    return lambda p: Decay(rate, "exp", amplitude=amplitude, freq_x=freq)


# --- self-reciprocal functions of one variable ------------------------------

_R = {
    "c1": math.sqrt(PI / 2),
    "c2a": SQPI / 2, "c2b": SQPI,
    "c3": math.sqrt(2 * PI / 3),
    "c4a": math.sqrt(3 * PI) / 2, "c4b": math.sqrt(4 * PI / 3),
    "c5a": math.sqrt(3 * PI / 2), "c5b": math.sqrt(2 * PI), "c5c": math.cos(math.sqrt(3) * PI),
    "s2a": math.sqrt(PI / 6), "s2b": math.sqrt(2 * PI / 3),
    "s3a": math.sqrt(2 * PI / 3), "s3b": math.sqrt(3 * PI / 2),
    "s4a": SQPI, "s4b": math.sqrt(2 * PI), "s4c": math.cos(math.sqrt(2) * PI),
}

_register("SRC1", 1, (), lambda x: sech(_R["c1"] * x), _exp(_R["c1"], 2.0),
          "1/cosh(sqrt(pi/2) x)", reciprocal="cosine")
_register("SRC2", 1, (), lambda x: cosh_ratio(_R["c2a"], _R["c2b"], x),
          _exp(_R["c2b"] - _R["c2a"], 2.0),
          "cosh(sqrt(pi) x/2)/cosh(sqrt(pi) x)", reciprocal="cosine")
_register("SRC3", 1, (), lambda x: 0.5 * cosh_ratio(0.0, _R["c3"], x, -0.5), _exp(_R["c3"], 1.0),
          "1/(1+2cosh(sqrt(2pi/3) x))", reciprocal="cosine")
_register("SRC4", 1, (), lambda x: 0.5 * cosh_ratio(_R["c4a"], _R["c4b"], x, 0.5),
          _exp(_R["c4b"] - _R["c4a"], 0.5 * ratio_amplitude(0.5)),
          "cosh(sqrt(3pi) x/2)/(2cosh(sqrt(4pi/3) x)-1)", reciprocal="cosine")
_register("SRC5", 1, (), lambda x: cosh_ratio(_R["c5a"], _R["c5b"], x, _R["c5c"]),
          _exp(_R["c5b"] - _R["c5a"], ratio_amplitude(_R["c5c"])),
          "cosh(sqrt(3pi/2) x)/(cosh(sqrt(2pi) x)-cos(sqrt(3) pi))", reciprocal="cosine")
_register("SRS1", 1, (), lambda x: sinh_ratio(_R["c2a"], _R["c2b"], x),
          _exp(_R["c2b"] - _R["c2a"], 2.0),
          "sinh(sqrt(pi) x/2)/cosh(sqrt(pi) x)", parity="odd", reciprocal="sine")
_register("SRS2", 1, (), lambda x: 0.5 * sinh_ratio(_R["s2a"], _R["s2b"], x, 0.5),
          _exp(_R["s2b"] - _R["s2a"], 0.5 * ratio_amplitude(0.5)),
          "sinh(sqrt(pi/6) x)/(2cosh(sqrt(2pi/3) x)-1)", parity="odd", reciprocal="sine")
_register("SRS3", 1, (), lambda x: sinh_ratio(_R["s3a"], _R["s3b"], x),
          _exp(_R["s3b"] - _R["s3a"], 2.0),
          "sinh(sqrt(2pi/3) x)/cosh(sqrt(3pi/2) x)", parity="odd", reciprocal="sine")
_register("SRS4", 1, (), lambda x: sinh_ratio(_R["s4a"], _R["s4b"], x, _R["s4c"]),
          _exp(_R["s4b"] - _R["s4a"], ratio_amplitude(_R["s4c"])),
          "sinh(sqrt(pi) x)/(cosh(sqrt(2pi) x)-cos(sqrt(2) pi))", parity="odd", reciprocal="sine")
_register("GAUSS", 1, (), lambda x: np.exp(-0.5 * x * x), lambda p: Decay(0.5, "gauss"),
          "exp(-x^2/2)", reciprocal="cosine")

SELF_RECIPROCAL_1D = ("SRC1", "SRC2", "SRC3", "SRC4", "SRC5", "SRS1", "SRS2", "SRS3", "SRS4")


# --- functions of two variables ---------------------------------------------

def _cos1(x, y):
    u = SQPI * np.abs(x)
    v = SQPI * np.abs(y)
    m = np.maximum(u, v)
    return 2.0 * np.exp(-m) / (np.exp(u - m) + np.exp(-u - m) + np.exp(v - m) + np.exp(-v - m))


def _sinsin(x, y):
    return sinc(x * y) * x_over_sinh(SQPI * x) * x_over_sinh(SQPI * y) / PI


def _one_minus_cos(x, y):
    h = 0.5 * x * y
    return h * sinc(h) ** 2 * x_over_sinh(SQPI * x) * x_over_sinh(SQPI * y) / PI


_K = math.sqrt(PI / 2)


def _decay2(rx, ry, amplitude=4.0, fx=0.0, fy=0.0, kx="exp", ky="exp"):
    return Decay(rx, kx, amplitude, ry, ky, fx, fy)


# cosh a + cosh b = 2 cosh((a+b)/2) cosh((a-b)/2) >= exp((a+b)/2)
_register("K2D_COS1", 2, (), _cos1, lambda p: _decay2(0.5 * SQPI, 0.5 * SQPI, 1.0),
          "1/(cosh(sqrt(pi) x)+cosh(sqrt(pi) y))", reciprocal="cos-cos")
_register("K2D_SINSIN", 2, (), _sinsin, lambda p: _decay2(0.8 * SQPI, 0.8 * SQPI, 8.0, 4.0, 4.0),
          "sin(xy)/(sinh(sqrt(pi) x) sinh(sqrt(pi) y))", reciprocal="cos-cos")
_register("K2D_F1", 2, (), lambda x, y: np.cos(x * y) * sech(_K * x) * sech(_K * y),
          lambda p: _decay2(0.9 * _K, 0.9 * _K, 4.0, 4.0, 4.0),
          "cos(xy)/(cosh(sqrt(pi/2) x) cosh(sqrt(pi/2) y))")
_register("K2D_ONEMINUSCOS", 2, (), _one_minus_cos,
          lambda p: _decay2(0.8 * SQPI, 0.8 * SQPI, 8.0, 4.0, 4.0),
          "(1-cos(xy))/(sinh(sqrt(pi) x) sinh(sqrt(pi) y))", reciprocal="sin-sin")
_register("KI1", 2, ("p",), lambda x, y, p: np.cos(x * y) * sech(p * x) * sech(PI * y / p),
          lambda q: _decay2(0.9 * q["p"], 0.9 * PI / q["p"], 4.0, 4.0, 4.0),
          "cos(xy)/(cosh(p x) cosh(pi y/p))")
_register("KI2", 2, ("p",), lambda x, y, p: np.sin(x * y) * sech(p * x) * sech(PI * y / p),
          lambda q: _decay2(0.9 * q["p"], 0.9 * PI / q["p"], 4.0, 4.0, 4.0),
          "sin(xy)/(cosh(p x) cosh(pi y/p))")
_C3 = 2 * PI / 3
_register("KI3", 2, (),
          lambda x, y: np.cos(x * y) * 0.25 * cosh_ratio(0.0, 1.0, x, -0.5) * cosh_ratio(0.0, _C3, y, -0.5),
          lambda p: _decay2(0.9, 0.9 * _C3, 1.0, 4.0, 4.0),
          "cos(xy)/((1+2cosh x)(1+2cosh(2pi y/3)))")
_register("KI4", 2, (),
          lambda x, y: np.sin(x * y) * 0.25 * cosh_ratio(0.0, 1.0, x, -0.5) * cosh_ratio(0.0, _C3, y, -0.5),
          lambda p: _decay2(0.9, 0.9 * _C3, 1.0, 4.0, 4.0),
          "sin(xy)/((1+2cosh x)(1+2cosh(2pi y/3)))")


# --- Gaussian weights invariant under alpha <-> beta, and 1D Mordell weights ---

def _gauss(rate, amplitude=1.0, freq=0.0):
    return Decay(rate, "gauss", amplitude=amplitude, freq_x=freq)


_register("KHR1", 1, ("alpha",), lambda x, alpha: np.exp(-x * x) * sech(alpha * x),
          lambda p: _gauss(1.0), "exp(-x^2)/cosh(alpha x)")
_register("KHR2", 1, ("alpha",),
          lambda x, alpha: cosh_ratio(alpha / 2, alpha, x) * np.exp(-x * x),
          lambda p: _gauss(1.0, 2.0), "cosh(alpha x/2)/cosh(alpha x) exp(-x^2)")
# sinh(a/2)/sinh(a) = 1/(2cosh(a/2)): no singularity at 0
_register("KHR3", 1, ("alpha",),
          lambda x, alpha: 0.5 * x * np.exp(-x * x) * sech(alpha * x / 2),
          lambda p: _gauss(0.5, 1.0), "sinh(alpha x/2)/sinh(alpha x) x exp(-x^2)", parity="odd")
_register("KFACT2", 1, ("alpha",),
          lambda x, alpha: sinh_ratio(alpha / 2, alpha, x) * x * np.exp(-x * x),
          lambda p: _gauss(0.5, 2.0), "sinh(alpha x/2)/cosh(alpha x) x exp(-x^2)")

def _cor_weight(x):
    return cosh_ratio(PI / 2, PI, x)


_register("KCOR_I1", 1, ("n",), lambda x, n: _cor_weight(x) * np.cos(PI * n * x * x / 2),
          lambda p: Decay(0.9 * PI / 2, "exp", amplitude=2.0, freq_x=PI * p["n"] * 20.0),
          "cosh(pi x/2)/cosh(pi x) cos(pi n x^2/2)")
_register("KCOR_I2", 1, ("n",), lambda x, n: _cor_weight(x) * np.sin(PI * n * x * x / 2),
          lambda p: Decay(0.9 * PI / 2, "exp", amplitude=2.0, freq_x=PI * p["n"] * 20.0),
          "cosh(pi x/2)/cosh(pi x) sin(pi n x^2/2)")
_register("KCOR_I3", 1, ("n",),
          lambda x, n: x * sinh_ratio(PI / 2, PI, x) * np.cos(PI * n * x * x / 2),
          lambda p: Decay(0.8 * PI / 2, "exp", amplitude=3.0, freq_x=PI * p["n"] * 20.0),
          "x sinh(pi x/2)/cosh(pi x) cos(pi n x^2/2)")
_register("KCOR_I4", 1, ("n",),
          lambda x, n: x * sinh_ratio(PI / 2, PI, x) * np.sin(PI * n * x * x / 2),
          lambda p: Decay(0.8 * PI / 2, "exp", amplitude=3.0, freq_x=PI * p["n"] * 20.0),
          "x sinh(pi x/2)/cosh(pi x) sin(pi n x^2/2)")


def _gauss_linear(c, growth, base_amplitude):
    """Envelope for base*exp(-c x^2 + growth x): exp(-(c/2)x^2) * exp(growth^2/(2c))."""
    g = max(growth, 0.0)
    expo = g * g / (2 * c)
    if expo > 600:
        raise DomainError("Gaussian factor does not dominate the hyperbolic growth")
    return c / 2, base_amplitude * math.exp(expo)


def _mordell_half_decay(p):
    rate, amp = _gauss_linear(p["c"], abs(p["b"]) - PI / 2, 2.0)
    return Decay(rate, "gauss", amplitude=amp)


def _mordell_gen_decay(p):
    rate, amp = _gauss_linear(p["c"], abs(p["b"]) - PI, 2.0)
    return Decay(rate, "gauss", amplitude=amp, freq_x=abs(p["a"]))


_register("KMORDELL_HALF", 1, ("b", "c"),
          lambda x, b, c: cosh_ratio(PI / 2, PI, x) * np.cosh(b * x) * np.exp(-c * x * x),
          _mordell_half_decay, "cosh(pi x/2) cosh(b x)/cosh(pi x) exp(-c x^2)",
          domain=_all(_finite, _positive_names("c")))
_register("KMORDELL_GEN", 1, ("a", "b", "c"),
          lambda x, a, b, c: np.cos(a * x) * np.cosh(b * x) * sech(PI * x) * np.exp(-c * x * x),
          _mordell_gen_decay, "cos(a x) cosh(b x)/cosh(pi x) exp(-c x^2)",
          domain=_all(_finite, _positive_names("c")))


# --- absolute value of the Mordell integral and companions -------------------

def _freq(alpha, xmax, mult=2.0):
    return mult * alpha * xmax


_register("KABS", 1, ("alpha",),
          lambda x, alpha: sinc(alpha * x * x) * x_over_sinh(PI * x) * x_over_sinh(alpha * x) / PI,
          lambda p: Decay(0.9 * (PI + p["alpha"]), "exp", 4.0, freq_x=_freq(p["alpha"], 12.0)),
          "sin(alpha x^2)/(sinh(pi x) sinh(alpha x))")
_register("KSECH_COS", 1, ("alpha",), lambda x, alpha: sech(PI * x) * np.cos(alpha * x * x),
          lambda p: Decay(PI, "exp", 2.0, freq_x=_freq(p["alpha"], 10.0)),
          "cos(alpha x^2)/cosh(pi x)")
_register("KSECH_SIN", 1, ("alpha",), lambda x, alpha: sech(PI * x) * np.sin(alpha * x * x),
          lambda p: Decay(PI, "exp", 2.0, freq_x=_freq(p["alpha"], 10.0)),
          "sin(alpha x^2)/cosh(pi x)")
_register("KHALF_S", 1, ("alpha",),
          lambda x, alpha: 2.0 * sinc(2 * alpha * x * x) * x_over_sinh(PI * x) * x_over_sinh(alpha * x) / PI,
          lambda p: Decay(0.9 * (PI + p["alpha"]), "exp", 8.0, freq_x=_freq(p["alpha"], 12.0, 4.0)),
          "sin(2alpha x^2)/(sinh(pi x) sinh(alpha x))")
_register("KHALF_C", 1, ("alpha",),
          lambda x, alpha: np.cos(2 * alpha * x * x) * sech(PI * x) * sech(alpha * x),
          lambda p: Decay(PI + p["alpha"], "exp", 4.0, freq_x=_freq(p["alpha"], 12.0, 4.0)),
          "cos(2alpha x^2)/(cosh(pi x) cosh(alpha x))")
_register("KHALF_MC", 1, ("alpha",),
          lambda x, alpha: cosh_ratio(PI / 2, PI, x) * np.cos(alpha * x * x / 2),
          lambda p: Decay(PI / 2, "exp", 2.0, freq_x=_freq(p["alpha"], 20.0, 1.0)),
          "cosh(pi x/2)/cosh(pi x) cos(alpha x^2/2)")
_register("KHALF_MS", 1, ("alpha",),
          lambda x, alpha: cosh_ratio(PI / 2, PI, x) * np.sin(alpha * x * x / 2),
          lambda p: Decay(PI / 2, "exp", 2.0, freq_x=_freq(p["alpha"], 20.0, 1.0)),
          "cosh(pi x/2)/cosh(pi x) sin(alpha x^2/2)")


def _cube(x, alpha):
    u = 3 * alpha * x * x / (4 * PI)
    num = sinc(u) * (3 / PI) * x_coth(x / 2) * x_coth(alpha * x / 2) - np.cos(u) / math.sqrt(3)
    return num * 0.25 * cosh_ratio(0.0, 1.0, x, -0.5) * cosh_ratio(0.0, alpha, x, -0.5)


_register("KCUBE", 1, ("alpha",), _cube,
          lambda p: Decay(0.8 * (1 + p["alpha"]), "exp", 4.0, freq_x=_freq(3 * p["alpha"] / (4 * PI), 30.0)),
          "[sin(3a x^2/4pi) coth(x/2) coth(a x/2) - cos(3a x^2/4pi)/sqrt3]/((1+2cosh x)(1+2cosh a x))")
_register("KCUBE_MC", 1, ("alpha",),
          lambda x, alpha: 0.5 * cosh_ratio(0.0, 1.0, x, -0.5) * np.cos(3 * alpha * x * x / (4 * PI)),
          lambda p: Decay(1.0, "exp", 1.0, freq_x=_freq(3 * p["alpha"] / (4 * PI), 35.0)),
          "cos(3alpha x^2/(4pi))/(1+2cosh x)")
_register("KCUBE_MS", 1, ("alpha",),
          lambda x, alpha: 0.5 * cosh_ratio(0.0, 1.0, x, -0.5) * np.sin(3 * alpha * x * x / (4 * PI)),
          lambda p: Decay(1.0, "exp", 1.0, freq_x=_freq(3 * p["alpha"] / (4 * PI), 35.0)),
          "sin(3alpha x^2/(4pi))/(1+2cosh x)")


def _zero_decay(p):
    rate = 2 * min(PI, p["alpha"])
    return Decay(rate, "exp", 4.0, freq_x=4 * p["alpha"] * 30.0 / rate)


_register("KZERO_REM_COS", 1, ("alpha",),
          lambda x, alpha: one_minus_tanh_product(PI, alpha, x) * np.cos(2 * alpha * x * x),
          _zero_decay, "(1 - tanh(pi x) tanh(alpha x)) cos(2alpha x^2)")
_register("KZERO_REM_SIN", 1, ("alpha",),
          lambda x, alpha: one_minus_tanh_product(PI, alpha, x) * np.sin(2 * alpha * x * x),
          _zero_decay, "(1 - tanh(pi x) tanh(alpha x)) sin(2alpha x^2)")
_register("KTANH_COS", 1, ("alpha",),
          lambda x, alpha: np.tanh(PI * x) * np.tanh(alpha * x) * np.cos(2 * alpha * x * x),
          lambda p: Decay(1e-3, "exp", 1.0), "tanh(pi x) tanh(alpha x) cos(2alpha x^2) [not absolutely integrable]",
          integrable=False)
_register("KBYP", 1, ("alpha",),
          lambda x, alpha: sinc(alpha * x * x / 2) * x_over_sinh(PI * x) * x_over_sinh(alpha * x) / PI,
          lambda p: Decay(0.9 * (PI + p["alpha"]), "exp", 8.0, freq_x=_freq(p["alpha"], 12.0, 1.0)),
          "2 sin(alpha x^2/2)/(sinh(pi x) sinh(alpha x))")


def _ram_remainder(x, alpha):
    # cosh(a x)/cosh(pi x) - exp((a-pi) x)
    e = np.exp((alpha - PI) * x)
    return e * (np.exp(-2 * alpha * x) - np.exp(-2 * PI * x)) / (1 + np.exp(-2 * PI * x)) * np.cos(alpha * x * x)


_register("KRAM", 1, ("alpha",),
          lambda x, alpha: cosh_ratio(alpha, PI, x) * np.cos(alpha * x * x),
          lambda p: Decay(PI - p["alpha"], "exp", 2.0, freq_x=_freq(p["alpha"], 30.0 / (PI - p["alpha"]))),
          "cosh(alpha x)/cosh(pi x) cos(alpha x^2)",
          domain=lambda p: None if 0 < p["alpha"] < PI else "alpha must lie in (0, pi)")
_register("KRAM_REM", 1, ("alpha",), _ram_remainder,
          lambda p: Decay(PI + p["alpha"], "exp", 1.0, freq_x=_freq(p["alpha"], 30.0 / (PI + p["alpha"]))),
          "[cosh(alpha x)/cosh(pi x) - exp((alpha-pi)x)] cos(alpha x^2)",
          domain=lambda p: None if 0 < p["alpha"] <= PI else "alpha must lie in (0, pi]")


def _chirp_re(x, lam, a):
    s = lam * x / math.sqrt(2)
    return np.exp(-a * x * x - s) * np.cos(PI / 4 - s)


def _chirp_im(x, lam, a):
    s = lam * x / math.sqrt(2)
    return np.exp(-a * x * x - s) * np.sin(PI / 4 - s)


_chirp_domain = lambda p: (None if p["lam"] >= 0 and p["a"] > 0 and math.isfinite(p["lam"])
                           else "need lam >= 0 and a > 0")
_register("KCHIRP_RE", 1, ("lam", "a"), _chirp_re, lambda p: Decay(p["a"], "gauss", 1.0),
          "Re[e^{i pi/4} exp(-lam e^{i pi/4} u - a u^2)]  (ray image of exp(-lam x + i a x^2))",
          domain=_chirp_domain)
_register("KCHIRP_IM", 1, ("lam", "a"), _chirp_im, lambda p: Decay(p["a"], "gauss", 1.0),
          "Im[e^{i pi/4} exp(-lam e^{i pi/4} u - a u^2)]  (ray image of exp(-lam x + i a x^2))",
          domain=_chirp_domain)


def _gauss_rot(x, k, a, part):
    w = k * x / math.sqrt(2)
    c = np.cos(w) * np.cosh(w)
    s = np.sin(w) * np.sinh(w)
    g = np.exp(-0.5 * a * x * x) / math.sqrt(2)
    return g * (c + s) if part == 0 else g * (c - s)


def _gauss_rot_decay(p):
    rate, amp = _gauss_linear(p["a"] / 2, abs(p["k"]) / math.sqrt(2), 1.0)
    return Decay(rate, "gauss", amp)


_gauss_rot_domain = lambda p: None if p["a"] > 0 and math.isfinite(p["k"]) else "need a > 0, finite k"
_register("KGAUSS_ROT_RE", 1, ("k", "a"), lambda x, k, a: _gauss_rot(x, k, a, 0), _gauss_rot_decay,
          "Re of ray image of cos(k s) exp(i a s^2/2)", domain=_gauss_rot_domain)
_register("KGAUSS_ROT_IM", 1, ("k", "a"), lambda x, k, a: _gauss_rot(x, k, a, 1), _gauss_rot_decay,
          "Im of ray image of cos(k s) exp(i a s^2/2)", domain=_gauss_rot_domain)

_register("KSQ_COS", 1, ("alpha",),
          lambda x, alpha: np.cos(alpha * x * x) * sech(PI * x) * sech(alpha * x),
          lambda p: Decay(PI + p["alpha"], "exp", 4.0, freq_x=_freq(p["alpha"], 12.0)),
          "cos(alpha x^2)/(cosh(pi x) cosh(alpha x))")
_register("KSQ_SIN", 1, ("alpha",),
          lambda x, alpha: np.sin(alpha * x * x) * sech(PI * x) * sech(alpha * x),
          lambda p: Decay(PI + p["alpha"], "exp", 4.0, freq_x=_freq(p["alpha"], 12.0)),
          "sin(alpha x^2)/(cosh(pi x) cosh(alpha x))")
_register("KSQ_CC", 1, ("alpha",),
          lambda x, alpha: cosh_ratio(PI / 2, PI, x) * cosh_ratio(alpha / 2, alpha, x),
          lambda p: Decay((PI + p["alpha"]) / 2, "exp", 4.0),
          "cosh(pi x/2) cosh(alpha x/2)/(cosh(pi x) cosh(alpha x))")
_register("KSQ_SS", 1, ("alpha",),
          lambda x, alpha: sinh_ratio(PI / 2, PI, x) * sinh_ratio(alpha / 2, alpha, x),
          lambda p: Decay((PI + p["alpha"]) / 2, "exp", 4.0),
          "sinh(pi x/2) sinh(alpha x/2)/(cosh(pi x) cosh(alpha x))")


# --- lattice kernels ---------------------------------------------------------

_register("KLAT_RC", 1, (), lambda x: cosh_ratio(0.5, 1.0, x * x), lambda p: Decay(0.5, "gauss", 2.0),
          "cosh(x^2/2)/cosh(x^2)")
_register("KLAT_RS", 1, (), lambda x: sinh_ratio(0.5, 1.0, x * x), lambda p: Decay(0.5, "gauss", 2.0),
          "sinh(x^2/2)/cosh(x^2)")
_register("KLAT2D_C", 2, (), lambda x, y: np.cos(x * x * y * y / PI) * sech(x * x) * sech(y * y),
          lambda p: _decay2(1.0, 1.0, 4.0, 25.0, 25.0, "gauss", "gauss"),
          "cos(x^2 y^2/pi)/(cosh(x^2) cosh(y^2))")
_register("KLAT2D_S", 2, (), lambda x, y: np.sin(x * x * y * y / PI) * sech(x * x) * sech(y * y),
          lambda p: _decay2(1.0, 1.0, 4.0, 25.0, 25.0, "gauss", "gauss"),
          "sin(x^2 y^2/pi)/(cosh(x^2) cosh(y^2))")
_register("KLAT_INNER", 1, ("n", "x0"),
          lambda y, n, x0: np.exp(-(2 * n + 1) * y * y) * np.cos(x0 * x0 * y * y / PI),
          lambda p: Decay(2 * p["n"] + 1, "gauss", 1.0, freq_x=2 * p["x0"] ** 2 * 6 / PI),
          "exp(-(2n+1) y^2) cos(x0^2 y^2/pi)",
          domain=_all(_finite, _nonnegative_int("n")))


def _lat_k0(x, m, n, sign, part):
    z = 1.0 / np.sqrt(PI * (2 * m + 1) + sign * 1j * x * x)
    return np.exp(-(2 * n + 1) * x * x) * (z.real if part == 0 else z.imag)


_lat_k0_domain = _all(_nonnegative_int("m", "n"),
                      lambda p: None if p["sign"] in (1.0, -1.0) else "sign must be +1 or -1")
_register("KLAT_K0_RE", 1, ("m", "n", "sign"), lambda x, m, n, sign: _lat_k0(x, m, n, sign, 0),
          lambda p: Decay(2 * p["n"] + 1, "gauss", 1.0), "Re exp(-(2n+1)x^2)/sqrt(pi(2m+1) +- i x^2)",
          domain=_lat_k0_domain)
_register("KLAT_K0_IM", 1, ("m", "n", "sign"), lambda x, m, n, sign: _lat_k0(x, m, n, sign, 1),
          lambda p: Decay(2 * p["n"] + 1, "gauss", 1.0), "Im exp(-(2n+1)x^2)/sqrt(pi(2m+1) +- i x^2)",
          domain=_lat_k0_domain)


def _k0_gauss(t, x, part):
    z = 1.0 / np.sqrt(t * t + 2j * x)
    return np.exp(-t * t) * (z.real if part == 0 else z.imag)


def _k0_decay(p):
    return Decay(1.0, "gauss", max(1.0, 1.0 / math.sqrt(2.0 * p["x"])))


# K0(ix) = 2 exp(-ix) times the integral of these over t
_register("KK0_RE", 1, ("x",), lambda t, x: _k0_gauss(t, x, 0), lambda p: _k0_decay(p),
          "Re exp(-t^2)/sqrt(t^2 + 2ix)")
_register("KK0_IM", 1, ("x",), lambda t, x: _k0_gauss(t, x, 1), lambda p: _k0_decay(p),
          "Im exp(-t^2)/sqrt(t^2 + 2ix)")


# --- two-dimensional Mordell integrands --------------------------------------

_register("KLANDEN2", 2, ("alpha", "beta"),
          lambda x, y, alpha, beta: np.cos(2 * x * y) * np.exp(-x * x - y * y) * sech(alpha * x) * sech(beta * y),
          lambda p: _decay2(1.0, 1.0, 4.0, 12.0, 12.0, "gauss", "gauss"),
          "cos(2xy) exp(-x^2-y^2)/(cosh(alpha x) cosh(beta y))")
_register("KFACT2_2D", 2, ("alpha", "beta"),
          lambda x, y, alpha, beta: x * y * np.sin(2 * x * y) * np.exp(-x * x - y * y) * sech(alpha * x) * sech(beta * y),
          lambda p: _decay2(0.5, 0.5, 4.0, 12.0, 12.0, "gauss", "gauss"),
          "xy sin(2xy) exp(-x^2-y^2)/(cosh(alpha x) cosh(beta y))")


def _cor2d(outer, inner, weighted):
    def f(x, y, n):
        q = 0.5 * PI * (n * x * x - y * y / n)
        v = (np.cos(q) if outer == "c" else np.sin(q)) * (np.cos(PI * x * y) if inner == "c" else np.sin(PI * x * y))
        v = v * sech(PI * x) * sech(PI * y)
        return v * x * y if weighted else v
    return f


def _cor2d_decay(weighted):
    def d(p):
        n = p["n"]
        rate = 0.8 * PI if weighted else PI
        fx = PI * (n * 8.0 + 8.0)
        fy = PI * (8.0 / n + 8.0)
        return _decay2(rate, rate, 4.0 if not weighted else 8.0, fx, fy)
    return d


for _o, _i, _w, _txt in [
    ("c", "c", False, "cos(pi/2 (n x^2 - y^2/n)) cos(pi xy)/(cosh(pi x) cosh(pi y))"),
    ("s", "c", False, "sin(pi/2 (n x^2 - y^2/n)) cos(pi xy)/(cosh(pi x) cosh(pi y))"),
    ("c", "s", True, "xy cos(pi/2 (n x^2 - y^2/n)) sin(pi xy)/(cosh(pi x) cosh(pi y))"),
    ("s", "s", True, "xy sin(pi/2 (n x^2 - y^2/n)) sin(pi xy)/(cosh(pi x) cosh(pi y))"),
    ("s", "c", True, "xy sin(pi/2 (n x^2 - y^2/n)) cos(pi xy)/(cosh(pi x) cosh(pi y))"),
]:
    _register(f"KCOR_{_o.upper()}{_i.upper()}{'_XY' if _w else ''}", 2, ("n",), _cor2d(_o, _i, _w),
              _cor2d_decay(_w), _txt)


def _phi_parts(x, y, alpha, beta, theta_re, theta_im, phi_re, phi_im):
    a = np.cos(theta_re * x) * np.cosh(theta_im * x)
    b = np.sin(theta_re * x) * np.sinh(theta_im * x)
    c = np.cos(phi_re * y) * np.cosh(phi_im * y)
    d = np.sin(phi_re * y) * np.sinh(phi_im * y)
    base = np.cos(PI * x * y) * sech(PI * x) * sech(PI * y) * np.exp(-0.5 * PI * (alpha * x * x + beta * y * y))
    return base, a, b, c, d


def _phi_re(x, y, **p):
    base, a, b, c, d = _phi_parts(x, y, **p)
    return base * (a * c - b * d)


def _phi_im(x, y, **p):
    base, a, b, c, d = _phi_parts(x, y, **p)
    return -base * (a * d + b * c)


def _phi_decay(p):
    rx, ax = _gauss_linear(PI * p["alpha"] / 2, abs(p["theta_im"]) - PI, 2.0)
    ry, ay = _gauss_linear(PI * p["beta"] / 2, abs(p["phi_im"]) - PI, 2.0)
    fx = PI * 6.0 + abs(p["theta_re"])
    fy = PI * 6.0 + abs(p["phi_re"])
    return _decay2(rx, ry, ax * ay, fx, fy, "gauss", "gauss")


_PHI_PARAMS = ("alpha", "beta", "theta_re", "theta_im", "phi_re", "phi_im")
_phi_domain = _all(_finite, _positive_names("alpha", "beta"))
_register("KPHI_RE", 2, _PHI_PARAMS, _phi_re, _phi_decay,
          "Re cos(pi xy) cos(theta x) cos(phi y)/(cosh(pi x) cosh(pi y)) exp(-pi/2 (alpha x^2 + beta y^2))",
          domain=_phi_domain)
_register("KPHI_IM", 2, _PHI_PARAMS, _phi_im, _phi_decay,
          "Im cos(pi xy) cos(theta x) cos(phi y)/(cosh(pi x) cosh(pi y)) exp(-pi/2 (alpha x^2 + beta y^2))",
          domain=_phi_domain)
_register("KPHI_SHIFT_SUM", 2, ("alpha", "beta", "theta", "phi"),
          lambda x, y, alpha, beta, theta, phi: 2 * np.cos(PI * x * y) * np.cos(theta * x) * np.cos(phi * y)
          * sech(PI * y) * np.exp(-0.5 * PI * (alpha * x * x + beta * y * y)),
          lambda p: _decay2(PI * p["alpha"] / 2, PI * p["beta"] / 2, 4.0,
                            PI * 6 + abs(p["theta"]), PI * 6 + abs(p["phi"]), "gauss", "gauss"),
          "2 cos(pi xy) cos(theta x) cos(phi y)/cosh(pi y) exp(-pi/2 (alpha x^2 + beta y^2))",
          domain=_all(_finite, _positive_names("alpha", "beta")))
_register("KPSI", 2, ("alpha", "beta", "theta", "phi"),
          lambda x, y, alpha, beta, theta, phi: np.sin(PI * x * y) * np.sin(theta * x) * np.sin(phi * y)
          * sech(PI * x) * sech(PI * y) * np.exp(-0.5 * PI * (alpha * x * x + beta * y * y)),
          lambda p: _decay2(PI * p["alpha"] / 2, PI * p["beta"] / 2, 4.0,
                            PI * 6 + abs(p["theta"]), PI * 6 + abs(p["phi"]), "gauss", "gauss"),
          "sin(pi xy) sin(theta x) sin(phi y)/(cosh(pi x) cosh(pi y)) exp(-pi/2 (alpha x^2 + beta y^2))",
          domain=_all(_finite, _positive_names("alpha", "beta")))


# --- series summand ----------------------------------------------------------

_register("KFBETA", 1, ("beta", "theta"),
          lambda n, beta, theta: 1.0 / (np.cosh(beta * n) - math.cos(theta)),
          lambda p: Decay(p["beta"], "exp", 2.0 / (1.0 - math.cos(p["theta"]))),
          "1/(cosh(beta n) - cos(theta))",
          domain=_all(_positive_names("beta"),
                      lambda p: None if 0 < p["theta"] < PI else "theta must lie in (0, pi)"))


# --- descriptors --------------------------------------------------------------

@dataclass(frozen=True)
class KernelDescriptor:
    """A catalog kernel with concrete parameter values."""

    kernel_id: str
    params: tuple = field(default=())

    def __post_init__(self):
        spec = CATALOG.get(self.kernel_id)
        if spec is None:
            raise DomainError(f"unknown kernel {self.kernel_id!r}")
        given = dict(self.params)
        missing = set(spec.params) - set(given)
        extra = set(given) - set(spec.params)
        if missing or extra:
            raise DomainError(
                f"{self.kernel_id} takes parameters {spec.params}; missing {sorted(missing)}, unexpected {sorted(extra)}"
            )
        values = {k: float(given[k]) for k in spec.params}
        if spec.domain is not None:
            msg = spec.domain(values)
            if msg:
                raise DomainError(f"{self.kernel_id}: {msg}")
        object.__setattr__(self, "params", tuple(values.items()))
        # surfaces envelope problems (e.g. unbounded growth) at construction
        spec.decay(values)

    @property
    def spec(self) -> KernelSpec:
        return CATALOG[self.kernel_id]

    @property
    def p(self) -> dict:
        return dict(self.params)

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def decay(self) -> Decay:
        return self.spec.decay(self.p)

    def __call__(self, *args):
        args = [np.asarray(a, dtype=float) for a in args]
        return self.spec.func(*args, **self.p)

    def integrand(self, weight=None, frequency=0.0) -> Integrand1D:
        """Integrand1D for ``kernel(x) * weight(x)``; ``weight`` must be bounded by 1."""
        if self.dim != 1:
            raise DomainError(f"{self.kernel_id} is two-dimensional")
        if not self.spec.integrable:
            raise DomainError(f"{self.kernel_id} has no decay envelope; evaluate it pointwise only")
        d = self.decay
        func, p = self.spec.func, self.p
        if weight is None:
            ev = lambda x: func(x, **p)
        else:
            ev = lambda x: func(x, **p) * weight(x)
        return Integrand1D(ev, d.rate_x, d.kind_x, d.amplitude, d.freq_x + frequency)

    def integrand2d(self, weight=None, frequency_x=0.0, frequency_y=0.0) -> Integrand2D:
        if self.dim != 2:
            raise DomainError(f"{self.kernel_id} is one-dimensional")
        d = self.decay
        func, p = self.spec.func, self.p
        if weight is None:
            ev = lambda x, y: func(x, y, **p)
        else:
            ev = lambda x, y: func(x, y, **p) * weight(x, y)
        return Integrand2D(ev, d.rate_x, d.rate_y, d.kind_x, d.kind_y, d.amplitude,
                           d.freq_x + frequency_x, d.freq_y + frequency_y)


def kernel(kernel_id: str, **params) -> KernelDescriptor:
    return KernelDescriptor(kernel_id, tuple(params.items()))


def kernel_eval_1d(desc: KernelDescriptor, x):
    if desc.dim != 1:
        raise DomainError(f"{desc.kernel_id} is two-dimensional")
    out = desc(x)
    return float(out) if np.ndim(out) == 0 else out


def kernel_eval_2d(desc: KernelDescriptor, x, y):
    if desc.dim != 2:
        raise DomainError(f"{desc.kernel_id} is one-dimensional")
    out = desc(x, y)
    return float(out) if np.ndim(out) == 0 else out
