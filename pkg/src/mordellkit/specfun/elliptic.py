"""Complete elliptic integrals by the arithmetic-geometric mean."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, NonConvergence

PI = math.pi


# stop once a and b are within a couple of ulps; a tighter test can cycle on rounding
_AGM_RTOL = 4e-16


def _agm_run(a, b):
    n = 0
    while abs(a - b) > _AGM_RTOL * a and n < 64:
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        n += 1
    return 0.5 * (a + b), n


def agm(a: float, b: float) -> float:
    if not (a > 0 and b > 0):
        raise DomainError("agm needs positive arguments")
    return _agm_run(a, b)[0]


def agm_steps(a: float, b: float) -> int:
    """Number of iterations agm() performs; used to check quadratic convergence."""
    return _agm_run(a, b)[1]


def _check_modulus(k):
    if not (0.0 < k < 1.0):
        raise DomainError(f"modulus must lie in (0, 1), got {k}")


def _kprime(k):
    # sqrt(1-k^2) without cancellation near k=1
    return math.sqrt((1.0 - k) * (1.0 + k))


def _agm_KE(k, kp):
    a, b = 1.0, kp
    c = k
    s = 0.5 * c * c
    p = 0.5
    for _ in range(64):
        if abs(c) <= 1e-17:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
        c = c * c / (4.0 * a)  # (a_n - b_n)/2 without the subtraction
        p *= 2.0
        s += p * c * c
    K = PI / (2.0 * a)
    return K, K * (1.0 - s)


def elliptic_K(k: float) -> float:
    _check_modulus(k)
    return PI / (2.0 * agm(1.0, _kprime(k)))


def elliptic_E(k: float) -> float:
    _check_modulus(k)
    return _agm_KE(k, _kprime(k))[1]


@dataclass(frozen=True)
class EllipticValues:
    k: float
    k_prime: float
    K: float
    K_prime: float
    E: float
    E_prime: float
    q: float
    alpha_ratio: float

    @classmethod
    def from_modulus(cls, k: float, k_prime: float | None = None) -> "EllipticValues":
        if k_prime is None:
            _check_modulus(k)
            kp = _kprime(k)
        else:
            # an explicit complement keeps precision when k rounds to 1
            if not (0.0 < k <= 1.0 and 0.0 < k_prime <= 1.0):
                raise DomainError(f"moduli must lie in (0, 1], got {k}, {k_prime}")
            kp = k_prime
        K, E = _agm_KE(k, kp)
        Kp, Ep = _agm_KE(kp, k)
        alpha = Kp / K
        return cls(k, kp, K, Kp, E, Ep, math.exp(-PI * alpha), alpha)

    def legendre_residual(self) -> float:
        return self.E * self.K_prime + self.E_prime * self.K - self.K * self.K_prime - PI / 2


def modulus_from_ratio(alpha: float, tol: float = 1e-14) -> EllipticValues:
    """Elliptic data whose ratio K'/K equals ``alpha``.

    Bisection on log k over the half k <= 1/sqrt(2), where K'/K >= 1; smaller
    ratios use the duality k <-> k', alpha <-> 1/alpha.  Working with the small
    one of k, k' keeps full relative precision in both.
    """
    if not (alpha > 0 and math.isfinite(alpha)):
        raise DomainError("ratio must be positive")
    if alpha == 1.0:
        r = math.sqrt(0.5)
        return EllipticValues.from_modulus(r, r)
    target = alpha if alpha > 1.0 else 1.0 / alpha

    def ratio(t):
        k = math.exp(t)
        return agm(1.0, _kprime(k)) / agm(1.0, k)  # K'/K

    lo, hi = -740.0, 0.5 * math.log(0.5)
    if not ratio(lo) > target:
        raise NonConvergence(f"ratio {alpha} outside the representable range")
    for _ in range(400):
        t = 0.5 * (lo + hi)
        r = ratio(t)
        if abs(r - target) <= tol * target or not lo < t < hi:
            break
        if r > target:
            lo = t
        else:
            hi = t
    else:
        raise NonConvergence("modulus bisection did not converge")
    k = math.exp(t)
    kp = _kprime(k)
    if alpha > 1.0:
        return EllipticValues.from_modulus(k, kp)
    return EllipticValues.from_modulus(kp, k)


def _bilateral_sech(alpha):
    n = np.arange(1, int(40.0 / (PI * alpha)) + 3, dtype=float)
    t = 1.0 / np.cosh(PI * alpha * n)
    return 1.0 + 2.0 * math.fsum(t[::-1])


def series_K_check(alpha: float) -> tuple[float, float]:
    """(pi/2) sum sech(pi alpha n) against K of the modulus with K'/K = alpha."""
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    series = 0.5 * PI * _bilateral_sech(alpha)
    return series, modulus_from_ratio(alpha).K


def dn_quarter_check(k: float) -> tuple[float, float]:
    """(pi/2K) sum cosh(pi a n/2)/cosh(pi a n) with a = K'/K, against sqrt(1+k)."""
    ev = EllipticValues.from_modulus(k)
    a = ev.alpha_ratio
    n = np.arange(1, int(80.0 / (PI * a)) + 3, dtype=float)
    e = np.exp(-PI * a * n)
    t = np.sqrt(e) * (1.0 + e) / (1.0 + e * e)  # cosh(x/2)/cosh(x), x = pi a n
    s = 1.0 + 2.0 * math.fsum(t[::-1])
    return PI / (2.0 * ev.K) * s, math.sqrt(1.0 + k)
