"""Bilateral, character-weighted and conditionally convergent sums.

Exponentially decaying sums are cut where a geometric tail bound drops below
the tolerance and accumulated exactly with ``math.fsum`` (n = 0 first, then
the pairs (n, -n) in increasing order).  The Lerch-type sum converges only
conditionally and goes through iterated averaging instead.

The ``*_sides`` helpers return both sides of a sum identity as
:class:`SeriesResult` values; the ``*_check`` wrappers add the difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConstraintViolation, DomainError, NonConvergence
from .specfun._hyp import cosh_ratio, sech
from .specfun.kernels import KernelDescriptor
from .transforms import fourier_1d

__all__ = [
    "SeriesTerm",
    "SeriesResult",
    "CheckFragment",
    "chi",
    "sum_bilateral",
    "sum_one_sided",
    "sum_character",
    "sum_lerch",
    "poisson_check_1d",
    "poisson_f1_check",
    "legendre_sum_check",
    "landen_sum_check",
    "elliptic1_check",
    "elliptic2_residual",
    "fbeta_check",
]

PI = math.pi
SQ3 = math.sqrt(3.0)
N_CAP = 1_000_000
CONSTRAINT_TOL = 1e-14


@dataclass(frozen=True)
class SeriesTerm:
    """Summand with |term(n)| <= amplitude*exp(-decay_rate*|n|).

    ``term`` is vectorised over float arrays of integers.  ``decay_rate`` is
    None for conditionally convergent sums.
    """

    term: Callable
    decay_rate: float | None
    amplitude: float = 1.0

    def __post_init__(self):
        if self.decay_rate is not None and not self.decay_rate > 0:
            raise DomainError("decay_rate must be positive")


@dataclass(frozen=True)
class SeriesResult:
    value: float
    tail_bound: float
    terms_used: int

    def __post_init__(self):
        if not self.tail_bound >= 0:
            raise ValueError("tail_bound must be non-negative")

    # products and sums of results, with first-order error propagation
    def __mul__(self, other):
        if isinstance(other, SeriesResult):
            return SeriesResult(
                self.value * other.value,
                abs(self.value) * other.tail_bound + abs(other.value) * self.tail_bound
                + self.tail_bound * other.tail_bound,
                self.terms_used + other.terms_used,
            )
        return SeriesResult(self.value * other, abs(other) * self.tail_bound, self.terms_used)

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, SeriesResult):
            return SeriesResult(self.value + other.value, self.tail_bound + other.tail_bound,
                                self.terms_used + other.terms_used)
        return SeriesResult(self.value + other, self.tail_bound, self.terms_used)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-1.0) * other

    def __rsub__(self, other):
        return (-1.0) * self + other


@dataclass(frozen=True)
class CheckFragment:
    lhs: float
    rhs: float
    lhs_error: float
    rhs_error: float
    terms_used: int

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)

    @classmethod
    def of(cls, lhs: SeriesResult, rhs: SeriesResult) -> "CheckFragment":
        return cls(lhs.value, rhs.value, lhs.tail_bound, rhs.tail_bound, lhs.terms_used + rhs.terms_used)


def chi(n):
    """Primitive character mod 4, sin(pi n/2), exactly."""
    r = np.mod(np.asarray(n, dtype=np.int64), 4)
    return np.choose(r, [0, 1, 0, -1]).astype(float)


def _terms_for(t: SeriesTerm, tol: float, factor: float) -> tuple[int, float]:
    """N with factor*A*exp(-c(N+1))/(1-exp(-c)) <= tol, and that bound."""
    if t.decay_rate is None:
        raise DomainError("summand has no exponential decay bound")
    c, a = t.decay_rate, t.amplitude
    geo = factor * a / -math.expm1(-c)
    n = max(0, math.ceil(math.log(max(geo / tol, 1.0)) / c))
    if n > N_CAP:
        raise NonConvergence(f"needs {n} terms, above the cap of {N_CAP}")
    return n, geo * math.exp(-c * (n + 1))


def sum_bilateral(t: SeriesTerm, tol: float = 1e-15) -> SeriesResult:
    """sum over all integers n of t(n)."""
    n, tail = _terms_for(t, tol, 2.0)
    k = np.arange(1, n + 1, dtype=float)
    parts = [float(np.asarray(t.term(np.zeros(1)))[0])]
    if n:
        parts.extend((np.asarray(t.term(k)) + np.asarray(t.term(-k))).tolist())
    return SeriesResult(math.fsum(parts), tail, 2 * n + 1)


def sum_one_sided(t: SeriesTerm, tol: float = 1e-15, start: int = 1) -> SeriesResult:
    """sum over n >= start of t(n)."""
    n, tail = _terms_for(t, tol, 1.0)
    n = max(n, start)
    k = np.arange(start, n + 1, dtype=float)
    return SeriesResult(math.fsum(np.asarray(t.term(k)).tolist()), tail, k.size)


def sum_character(t: SeriesTerm, tol: float = 1e-15) -> SeriesResult:
    """sum over n >= 1 of chi(n) t(n)."""
    n, tail = _terms_for(t, tol, 1.0)
    k = np.arange(1, max(n, 1) + 1, 2, dtype=float)  # chi vanishes on even n
    vals = chi(k) * np.asarray(t.term(k))
    return SeriesResult(math.fsum(vals.tolist()), tail, k.size)


# --- conditionally convergent Lerch-type sum ----------------------------------

LERCH_MIN_TOL = 1e-5


def _lerch_partial(p: float, n_max: int) -> np.ndarray:
    """Symmetric partial sums S_1..S_n_max, pairing n with -n."""
    s = p / math.sqrt(2.0)
    w = math.sqrt(2.0) * PI / p
    n = np.arange(1, n_max + 1, dtype=float)
    t = np.sin(w * n) * ((n + s) ** -0.5 - np.abs(n - s) ** -0.5)
    return np.cumsum(t)


def _averaged(partials: np.ndarray, index: int, depth: int) -> float:
    a = partials[index:index + depth + 1].copy()
    for _ in range(depth):
        a = 0.5 * (a[:-1] + a[1:])
    return float(a[0])


def sum_lerch(p: float, tol: float = 1e-4, depth: int = 8) -> SeriesResult:
    """sum over n of sin(sqrt2 pi n/p)/|n + p/sqrt2|^(1/2), 1/sqrt2 < p < sqrt2.

    Symmetric partial sums are smoothed by ``depth`` rounds of neighbour
    averaging; the tail bound is the change between N/2 and N.
    """
    if not (1 / math.sqrt(2.0) < p < math.sqrt(2.0)):
        raise DomainError("p must lie in (1/sqrt2, sqrt2)")
    if tol < LERCH_MIN_TOL:
        raise NonConvergence(f"conditionally convergent sum: tolerance below {LERCH_MIN_TOL:g} is not supported")
    n = 1 << 12
    while n <= N_CAP:
        partials = _lerch_partial(p, n + depth + 1)
        hi = _averaged(partials, n - 1, depth)
        lo = _averaged(partials, n // 2 - 1, depth)
        tail = abs(hi - lo)
        if tail <= tol:
            return SeriesResult(hi, tail, n + depth)
        n *= 2
    raise NonConvergence("Lerch sum did not settle", estimate=tail)


# --- Poisson summation ----------------------------------------------------------

def _check_product(name, a, b, target):
    if abs(a * b - target) > CONSTRAINT_TOL * max(1.0, abs(target)):
        raise ConstraintViolation(f"{name}: product {a * b!r} != {target!r}")


def poisson_sides(f: KernelDescriptor, alpha: float, beta: float | None = None, tol: float = 1e-14):
    """sqrt(a) sum phi(a n) and sqrt(b) sum phi_c(b n) with a b = 2 pi."""
    if f.dim != 1 or f.spec.parity != "even":
        raise DomainError(f"{f.kernel_id} is not an even function of one variable")
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    if beta is None:
        beta = 2 * PI / alpha
    _check_product("poisson", alpha, beta, 2 * PI)
    d = f.decay
    phi = f.spec.func
    p = f.p

    def lattice_term(step):
        if d.kind_x == "exp":
            return SeriesTerm(lambda n: phi(step * n, **p), d.rate_x * step, d.amplitude)
        # exp(-c s^2 n^2) <= exp(c s^2/4) exp(-c s^2 n)
        c = d.rate_x * step * step
        return SeriesTerm(lambda n: phi(step * n, **p), c, d.amplitude * math.exp(c / 4))

    left = sum_bilateral(lattice_term(alpha), tol / math.sqrt(alpha))
    if f.spec.reciprocal == "cosine":
        right = sum_bilateral(lattice_term(beta), tol / math.sqrt(beta))
    else:
        # transform evaluated term by term until it falls below the tolerance
        qt = max(tol / 10, 2e-13)
        vals = [fourier_1d(f, "cosine", 0.0, qt)]
        n = 1
        while True:
            v = fourier_1d(f, "cosine", beta * n, qt)
            vals.append(2.0 * v)
            if abs(v) < qt or n > 10_000:
                break
            n += 1
        right = SeriesResult(math.fsum(vals), (2 * n + 1) * qt, 2 * n + 1)
    return math.sqrt(alpha) * left, math.sqrt(beta) * right


def poisson_check_1d(f: KernelDescriptor, alpha: float, tol: float = 1e-12, beta: float | None = None) -> CheckFragment:
    return CheckFragment.of(*poisson_sides(f, alpha, beta, tol / 10))


def _k():
    return math.sqrt(PI / 2)


def poisson_f1_sides(alpha: float, beta: float, tol: float = 1e-13):
    """Double-sum Poisson pair of the cos/cosh kernel (partners gamma = 2pi/alpha, delta = 2pi/beta)."""
    if not (alpha > 0 and beta > 0):
        raise DomainError("alpha and beta must be positive")
    k = _k()
    gamma, delta = 2 * PI / alpha, 2 * PI / beta

    def box(c):
        return int(math.ceil(math.log(64.0 / (tol * -math.expm1(-c))) / c)) + 1

    m_l, n_l = box(k * alpha), box(k * beta)
    if max(m_l, n_l) > 20000:
        raise NonConvergence("double sum too long")
    m = np.arange(-m_l, m_l + 1, dtype=float)[:, None]
    n = np.arange(-n_l, n_l + 1, dtype=float)[None, :]
    lhs = np.cos(alpha * beta * m * n) * sech(k * alpha * m) * sech(k * beta * n)

    m_r, n_r = box(0.5 * k * gamma), box(0.5 * k * delta)
    if max(m_r, n_r) > 20000:
        raise NonConvergence("double sum too long")
    m = np.arange(-m_r, m_r + 1, dtype=float)[:, None]
    n = np.arange(-n_r, n_r + 1, dtype=float)[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        rhs = np.sin(gamma * delta * m * n) / (np.sinh(k * gamma * m) * np.sinh(k * delta * n))
        # limits on the axes: sin(g d m n)/(sinh(k g m) sinh(k d n)) as m -> 0 or n -> 0
        row = delta * n / (k * np.sinh(k * delta * n))
        col = gamma * m / (k * np.sinh(k * gamma * m))
    rhs = np.where(m == 0, row, rhs)
    rhs = np.where(n == 0, col, rhs)
    rhs = np.where((m == 0) & (n == 0), 1.0 / (k * k), rhs)
    tail = tol / 4
    left = SeriesResult(math.sqrt(alpha * beta) * math.fsum(lhs.ravel().tolist()), tail, lhs.size)
    right = SeriesResult(math.sqrt(gamma * delta) * math.fsum(rhs.ravel().tolist()), tail, rhs.size)
    return left, right


def poisson_f1_check(alpha: float, beta: float, tol: float = 1e-10) -> CheckFragment:
    return CheckFragment.of(*poisson_f1_sides(alpha, beta, tol / 10))


# --- elliptic-type sum identities ---------------------------------------------------

def _sech_sum(a, tol):
    """sum over Z of sech(pi a n)."""
    return sum_bilateral(SeriesTerm(lambda n: sech(PI * a * n), PI * a, 2.0), tol)


def _ratio_sum(a, tol):
    """sum over Z of cosh(pi a n/2)/cosh(pi a n)."""
    return sum_bilateral(SeriesTerm(lambda n: cosh_ratio(0.5 * PI * a, PI * a, n), 0.5 * PI * a, 2.0), tol)


def _n_over_sinh(a, tol):
    """sum over n >= 1 of a n/sinh(pi a n)."""
    c = PI * a

    def term(n):
        return 2.0 * a * n * np.exp(-c * n) / -np.expm1(-2.0 * c * n)

    amp = 2.0 * a * (2.0 / (c * math.e)) / -math.expm1(-2.0 * c)
    return sum_one_sided(SeriesTerm(term, 0.5 * c, amp), tol)


def legendre_sides(alpha: float, tol: float = 1e-14):
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    beta = 1.0 / alpha
    lhs = _sech_sum(alpha, tol) * _sech_sum(beta, tol)
    rhs = 2.0 / PI + 4.0 * _n_over_sinh(alpha, tol) + 4.0 * _n_over_sinh(beta, tol)
    return lhs, rhs


def legendre_sum_check(alpha: float, tol: float = 1e-10) -> CheckFragment:
    return CheckFragment.of(*legendre_sides(alpha, tol / 100))


def landen_sides(alpha: float, tol: float = 1e-14):
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    beta = 2.0 / alpha
    lhs = math.sqrt(2.0) * (_sech_sum(alpha, tol) * _sech_sum(beta, tol))
    rhs = _ratio_sum(alpha, tol) * _ratio_sum(beta, tol)
    return lhs, rhs


def landen_sum_check(alpha: float, tol: float = 1e-10) -> CheckFragment:
    return CheckFragment.of(*landen_sides(alpha, tol / 100))


def _ell1_part(a, tol):
    """a * sum over n >= 1 of n cosh(pi a n/sqrt3)/sinh(pi a n sqrt3)."""
    u = PI * a / SQ3  # cosh(u n)/sinh(3 u n)
    c = 2.0 * u

    def term(n):
        e = np.exp(-2.0 * u * n)
        return a * n * e * (1.0 + e) / -np.expm1(-6.0 * u * n)

    amp = a * (2.0 / (0.5 * c * math.e)) * 2.0 / -math.expm1(-6.0 * u)
    return sum_one_sided(SeriesTerm(term, 0.5 * c, amp), tol)


def elliptic1_sides(alpha: float, tol: float = 1e-14):
    if not alpha > 0:
        raise DomainError("alpha must be positive")
    lhs = _ell1_part(alpha, tol) + _ell1_part(1.0 / alpha, tol)
    c = 2.0 * PI * alpha / SQ3
    s = sum_bilateral(SeriesTerm(lambda n: cosh_ratio(0.0, c, n, -0.5), c, 4.0), tol)
    rhs = -1.0 / (2.0 * PI * SQ3) + 0.25 * alpha * (s * s)
    return lhs, rhs


def elliptic1_check(alpha: float, tol: float = 1e-9) -> CheckFragment:
    return CheckFragment.of(*elliptic1_sides(alpha, tol / 100))


def _ell2_factor_left(a, tol):
    c = PI * a / SQ3
    # sum over n >= 0 of 1/(1/2 + cosh(c (2n+1)))
    t = SeriesTerm(lambda n: cosh_ratio(0.0, c, 2.0 * n + 1.0, -0.5), 2.0 * c, 2.0 * math.exp(-c))
    return sum_one_sided(t, tol, start=0)


def _ell2_factor_right(a, tol):
    # sum over n >= 1 of chi(n) cosh(pi a n/(2 sqrt3))/sinh(pi a n sqrt3/2)
    u = PI * a / (2.0 * SQ3)

    def term(n):
        return cosh_ratio(u, 3.0 * u, n) / np.tanh(3.0 * u * n)

    return sum_character(SeriesTerm(term, 2.0 * u, 2.0 / -math.expm1(-6.0 * u)), tol)


def elliptic2_sides(alpha: float, beta: float, tol: float = 1e-14):
    """Both sides of the chi-weighted product identity with the summation index
    restored in the denominators; no relation between alpha and beta assumed."""
    if not (alpha > 0 and beta > 0):
        raise DomainError("alpha and beta must be positive")
    lhs = (SQ3 / 4.0) * (_ell2_factor_left(alpha, tol) * _ell2_factor_left(beta, tol))
    rhs = _ell2_factor_right(alpha, tol) * _ell2_factor_right(beta, tol)
    return lhs, rhs


def elliptic2_residual(alpha: float, beta: float, tol: float = 1e-12) -> CheckFragment:
    return CheckFragment.of(*elliptic2_sides(alpha, beta, tol / 100))


def _f_beta(beta, theta, tol):
    c = math.cos(theta)
    return sum_bilateral(SeriesTerm(lambda n: cosh_ratio(0.0, beta, n, c), beta, _fb_amp(c)), tol)


def _fb_amp(c):
    # cosh x - c >= (1 - max(c, 0)) e^x / 2
    return 2.0 / (1.0 - max(c, 0.0))


def fbeta_sides(beta: float, theta: float, tol: float = 1e-14):
    if not beta > 0:
        raise DomainError("beta must be positive")
    if not 0 < theta < PI:
        raise DomainError("theta must lie in (0, pi)")
    c1, c2 = math.cos(theta), math.cos(2 * theta)
    s2 = math.sin(theta) ** 2
    f1 = _f_beta(beta, theta, tol)
    f2 = _f_beta(beta, 2 * theta, tol)
    lhs = f1 * f1 - (2.0 * c1) * (f1 * f2) + (c1 / s2) * f1
    sq = sum_bilateral(
        SeriesTerm(lambda n: cosh_ratio(0.0, beta, n, c1) ** 2, 2 * beta, _fb_amp(c1) ** 2), tol
    )

    def coth_term(n):
        e = np.exp(-beta * n)
        return 4.0 * n * (1.0 + e) / (1.0 - e) * cosh_ratio(0.0, beta, n, c2)

    amp = 4.0 * (2.0 / (0.5 * beta * math.e)) * (1.0 + math.exp(-beta)) / -math.expm1(-beta) * _fb_amp(c2)
    rhs = sq + sum_one_sided(SeriesTerm(coth_term, 0.5 * beta, amp), tol)
    return lhs, rhs


def fbeta_check(beta: float, theta: float, tol: float = 1e-9) -> CheckFragment:
    return CheckFragment.of(*fbeta_sides(beta, theta, tol / 100))
