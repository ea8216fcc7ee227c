"""Order-zero Bessel functions J0, Y0, K0.

J0 and Y0 switch between three regimes: the ascending series below 8, the
Bessel integral representations on [8, 25) and the Hankel expansion from 25
on.  At 8 the Hankel expansion alone is only good to about 1e-7, hence the
middle band.  K0 uses its ascending series up to 2 and the trapezoid rule on
exp(-x cosh t) above.  Complex K0 uses the ascending series near the origin
and the large-argument expansion for |z|(3 + cos arg z) > 40 in the sector
|arg z| <= 2pi/3: the series loses about exp(|z| + Re z) ulps to cancellation
while the expansion is good to about exp(-2|z|).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError

PI = math.pi
EULER_GAMMA = 0.57721566490153286061

SERIES_MAX = 8.0
HANKEL_MIN = 25.0
K0_SERIES_MAX = 2.0
K0_CROSSOVER = 40.0

_GL_X, _GL_W = np.polynomial.legendre.leggauss(48)


def _gauss_legendre(f, a, b, panels):
    edges = np.linspace(a, b, panels + 1)
    lo, hi = edges[:-1, None], edges[1:, None]
    x = 0.5 * (hi - lo) * (_GL_X + 1.0) + lo
    w = 0.5 * (hi - lo) * _GL_W
    return float(np.sum(w * f(x)))


def _j0_series(x):
    z = -0.25 * x * x
    term, total = 1.0, 1.0
    for k in range(1, 80):
        term *= z / (k * k)
        total += term
        if abs(term) < 1e-17 * max(1.0, abs(total)):
            break
    return total


def _y0_series(x):
    z = 0.25 * x * x
    term, total, h = 1.0, 0.0, 0.0
    for k in range(1, 80):
        term *= -z / (k * k)
        h += 1.0 / k
        total -= term * h
        if abs(term * h) < 1e-17 * max(1.0, abs(total)):
            break
    return 2.0 / PI * ((math.log(0.5 * x) + EULER_GAMMA) * _j0_series(x) + total)


def _jy0_integral(x):
    panels = max(4, int(x / 4) + 2)
    j = _gauss_legendre(lambda t: np.cos(x * np.sin(t)), 0.0, PI, panels) / PI
    s = _gauss_legendre(lambda t: np.sin(x * np.sin(t)), 0.0, PI, panels) / PI
    top = math.asinh(40.0 / x)
    e = _gauss_legendre(lambda t: np.exp(-x * np.sinh(t)), 0.0, top, 6)
    return j, s - 2.0 / PI * e


def _hankel(x):
    p, q = 0.0, 0.0
    a = 1.0
    prev = math.inf
    for k in range(0, 60):
        if k > 0:
            a *= -((2 * k - 1) ** 2) / (8.0 * k)
        term = a / x ** k
        if abs(term) > prev:
            break  # asymptotic series: stop at the smallest term
        prev = abs(term)
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            p += sign * term
        else:
            q += sign * term
        if abs(term) < 1e-17:
            break
    chi = x - 0.25 * PI
    amp = math.sqrt(2.0 / (PI * x))
    c, s = math.cos(chi), math.sin(chi)
    return amp * (p * c - q * s), amp * (p * s + q * c)


def bessel_J0(x: float) -> float:
    x = abs(float(x))
    if x < SERIES_MAX:
        return _j0_series(x)
    if x < HANKEL_MIN:
        return _jy0_integral(x)[0]
    return _hankel(x)[0]


def bessel_Y0(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError("Y0 needs a positive argument")
    if x < SERIES_MAX:
        return _y0_series(x)
    if x < HANKEL_MIN:
        return _jy0_integral(x)[1]
    return _hankel(x)[1]


def _k0_series(x):
    z = 0.25 * x * x
    term, i0, tail, h = 1.0, 1.0, 0.0, 0.0
    for k in range(1, 80):
        term *= z / (k * k)
        h += 1.0 / k
        i0 += term
        tail += term * h
        if term * h < 1e-17 * tail:
            break
    return -(math.log(0.5 * x) + EULER_GAMMA) * i0 + tail


def _k0_trapezoid(x, h=0.125):
    # exp(-x cosh t) = exp(-x) exp(-x (cosh t - 1)); stop once below 1e-18
    top = math.acosh(1.0 + 42.0 / x)
    t = np.arange(0.0, top + h, h)
    f = np.exp(-x * (np.cosh(t) - 1.0))
    return math.exp(-x) * h * (float(np.sum(f)) - 0.5)


def bessel_K0(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise DomainError("K0 needs a positive argument")
    if x <= K0_SERIES_MAX:
        return _k0_series(x)
    return _k0_trapezoid(x)


def _k0_series_complex(z):
    w = 0.25 * z * z
    term, i0, tail, h = 1.0 + 0j, 1.0 + 0j, 0j, 0.0
    for k in range(1, 200):
        term *= w / (k * k)
        h += 1.0 / k
        i0 += term
        tail += term * h
        if abs(term) * h < 1e-18 * max(1.0, abs(tail)):
            break
    return -(cmath.log(0.5 * z) + EULER_GAMMA) * i0 + tail


def _k0_asymptotic(z):
    # sqrt(pi/2z) e^{-z} sum a_k z^{-k}, a_k = -a_{k-1} (2k-1)^2/(8k); stop at the smallest term
    total, term = 1.0 + 0j, 1.0 + 0j
    for k in range(1, 60):
        nxt = -term * (2 * k - 1) ** 2 / (8.0 * k * z)
        if abs(nxt) >= abs(term):
            break
        term = nxt
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return cmath.sqrt(PI / (2.0 * z)) * cmath.exp(-z) * total


def bessel_K0_complex(z: complex) -> complex:
    """K0 on the principal branch.

    Large-argument expansion where it is the more accurate of the two (see
    the module notes); ascending series otherwise, limited to |z| <= 25.
    """
    z = complex(z)
    if z == 0 or (z.imag == 0 and z.real < 0):
        raise DomainError("K0 is singular on the non-positive real axis")
    theta = cmath.phase(z)
    if abs(theta) <= 2 * PI / 3 and abs(z) * (3.0 + math.cos(theta)) > K0_CROSSOVER:
        return _k0_asymptotic(z)
    if abs(z) > 25.0:
        raise DomainError("complex K0 limited to |z| <= 25 for |arg z| > 2pi/3")
    return _k0_series_complex(z)


def k0_imaginary(x: float, sign: int = 1) -> complex:
    """K0(sign*i*x) for real x > 0 through K0(ix) = -(pi/2)(Y0(x) + i J0(x))."""
    v = -0.5 * PI * complex(bessel_Y0(x), bessel_J0(x))
    return v if sign > 0 else v.conjugate()


@dataclass(frozen=True)
class BesselValue:
    x: float
    J0: float
    Y0: float
    K0: float

    @classmethod
    def at(cls, x: float) -> "BesselValue":
        return cls(x, bessel_J0(x), bessel_Y0(x), bessel_K0(x))
