"""Double-exponential quadrature on [0, inf) and on the positive quadrant.

Integrands are vectorised callables: ``eval(x)`` receives a float array and
must return an array of the same shape.  Each integrand declares how fast it
decays (an envelope ``A*exp(-c*x)`` or ``A*exp(-c*x**2)``), which fixes the
truncation point and the choice of variable transform:

* non-oscillatory exponential decay uses the exp-sinh map
  ``x = s*exp(pi/2*sinh t)``;
* Gaussian decay, or any integrand flagged with a non-zero ``frequency``,
  is truncated at :func:`truncation_cutoff` and integrated with tanh-sinh
  on the finite interval.

Both rules are trapezoid sums in ``t`` with step ``h = H0/2**level``; every
refinement halves ``h`` and only evaluates the new (odd) nodes.  The error
estimate is the difference of the last two levels plus the truncated tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, InvalidDecay, NonConvergence

__all__ = [
    "Integrand1D",
    "Integrand2D",
    "QuadResult",
    "truncation_cutoff",
    "tail_bound",
    "integrate_semi_infinite",
    "integrate_quadrant",
]

DECAY_KINDS = ("exp", "gauss")

H0 = 0.5
MIN_LEVEL = 3
MAX_LEVEL = 10
MAX_LEVEL_OSCILLATORY = 12
HIGH_FREQUENCY = 10.0

# tanh-sinh: weights below ~1e-21 of the interval length beyond |t| = 3.5
_TS_TMAX = 3.5
# exp-sinh: the left end stops at x = s*exp(-45)
_ES_ULOW = 45.0

_MAX_BLOCK = 1 << 20
_TOL_FLOOR_1D = 1e-13
_TOL_FLOOR_2D = 1e-10


@dataclass(frozen=True)
class QuadResult:
    value: float
    abs_error_estimate: float
    evaluations: int

    def __post_init__(self):
        if not self.abs_error_estimate >= 0:
            raise ValueError("error estimate must be non-negative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be >= 1")


@dataclass(frozen=True)
class Integrand1D:
    """A function on [0, inf) with a proven decay envelope.

    ``amplitude * exp(-decay_rate * x)`` (kind ``"exp"``) or
    ``amplitude * exp(-decay_rate * x**2)`` (kind ``"gauss"``) must bound
    ``|eval(x)|``.  ``frequency`` is a rough upper bound on the angular
    frequency of any oscillating factor; it sets the starting refinement
    level and, above 10, raises the refinement cap.
    """

    eval: Callable[[np.ndarray], np.ndarray]
    decay_rate: float
    decay_kind: str = "exp"
    amplitude: float = 1.0
    frequency: float = 0.0


@dataclass(frozen=True)
class Integrand2D:
    """A function on the closed quadrant with per-axis decay envelopes.

    ``eval(x, y)`` must broadcast (it is called with a column of x values
    against a row of y values).
    """

    eval: Callable[[np.ndarray, np.ndarray], np.ndarray]
    decay_rate_x: float
    decay_rate_y: float
    decay_kind_x: str = "exp"
    decay_kind_y: str = "exp"
    amplitude: float = 1.0
    frequency_x: float = 0.0
    frequency_y: float = 0.0

    def transposed(self) -> "Integrand2D":
        f = self.eval
        return Integrand2D(
            lambda y, x: f(x, y),
            self.decay_rate_y,
            self.decay_rate_x,
            self.decay_kind_y,
            self.decay_kind_x,
            self.amplitude,
            self.frequency_y,
            self.frequency_x,
        )


def _check_decay(rate, kind):
    if kind not in DECAY_KINDS:
        raise InvalidDecay(f"unknown decay kind {kind!r}")
    if not (isinstance(rate, (int, float, np.floating)) and rate > 0 and math.isfinite(rate)):
        raise InvalidDecay(f"decay rate must be a positive finite number, got {rate!r}")


def tail_bound(decay_rate: float, decay_kind: str, x: float) -> float:
    """Integral of the unit envelope over [x, inf)."""
    _check_decay(decay_rate, decay_kind)
    if decay_kind == "exp":
        return math.exp(-decay_rate * x) / decay_rate
    r = math.sqrt(decay_rate)
    return 0.5 * math.sqrt(math.pi) / r * math.erfc(r * x)


def truncation_cutoff(decay_rate: float, decay_kind: str, tol: float) -> float:
    """Smallest X >= 0 whose unit-envelope tail is at most ``tol/10``."""
    _check_decay(decay_rate, decay_kind)
    if not tol > 0:
        raise ValueError("tol must be positive")
    target = tol / 10.0
    if decay_kind == "exp":
        return max(0.0, math.log(1.0 / (target * decay_rate)) / decay_rate)
    if tail_bound(decay_rate, "gauss", 0.0) <= target:
        return 0.0
    # erfc tail is monotone; bracket then bisect
    lo, hi = 0.0, 1.0
    while tail_bound(decay_rate, "gauss", hi) > target:
        lo, hi = hi, 2.0 * hi
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if tail_bound(decay_rate, "gauss", mid) > target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-15 * hi:
            break
    return hi


class _TanhSinh:
    """tanh-sinh nodes on [0, X]."""

    def __init__(self, length: float):
        self.length = length

    def nodes(self, level: int):
        h = H0 / 2**level
        kmax = int(math.ceil(_TS_TMAX / h))
        k = np.arange(-kmax, kmax + 1) if level == 0 else np.arange(-kmax + (kmax + 1) % 2, kmax + 1, 2)
        t = k * h
        u = 0.5 * math.pi * np.sinh(t)
        # x = X/(1+exp(-2u)) keeps full relative precision near both ends
        x = self.length / (1.0 + np.exp(-2.0 * u))
        w = self.length * 0.25 * math.pi * np.cosh(t) / np.cosh(u) ** 2
        return x, w, h


class _ExpSinh:
    """exp-sinh nodes x = s*exp(pi/2*sinh t), truncated beyond X."""

    def __init__(self, scale: float, xmax: float):
        self.scale = scale
        self.t_lo = -math.asinh(2.0 * _ES_ULOW / math.pi)
        ratio = max(xmax / scale, math.e)
        self.t_hi = math.asinh(2.0 * math.log(ratio) / math.pi)

    def nodes(self, level: int):
        h = H0 / 2**level
        k_lo = int(math.ceil(self.t_lo / h))
        k_hi = int(math.floor(self.t_hi / h))
        k = np.arange(k_lo, k_hi + 1)
        if level > 0:
            k = k[k % 2 != 0]
        t = k * h
        x = self.scale * np.exp(0.5 * math.pi * np.sinh(t))
        w = x * 0.5 * math.pi * np.cosh(t)
        return x, w, h


def _make_rule(rate, kind, amplitude, frequency, tol):
    """Pick the rule for one axis; return (rule, tail, span, min_level, max_level)."""
    _check_decay(rate, kind)
    scaled = tol / max(amplitude, 1e-300)
    xmax = truncation_cutoff(rate, kind, scaled)
    if xmax == 0.0:
        xmax = 1.0 / rate if kind == "exp" else 1.0 / math.sqrt(rate)
    tail = amplitude * tail_bound(rate, kind, xmax)
    max_level = MAX_LEVEL_OSCILLATORY if frequency > HIGH_FREQUENCY else MAX_LEVEL
    if kind == "exp" and frequency <= 0:
        return _ExpSinh(1.0 / rate, xmax), tail, xmax, MIN_LEVEL, max_level
    # central node spacing is X*h*pi/4; keep it below half a period
    min_level = MIN_LEVEL
    if frequency > 0:
        h_needed = 4.0 / (xmax * frequency)
        if h_needed < H0:
            min_level = max(MIN_LEVEL, int(math.ceil(math.log2(H0 / h_needed))))
    min_level = min(min_level, max_level)
    return _TanhSinh(xmax), tail, xmax, min_level, max_level


def _check_finite(values, x):
    bad = ~np.isfinite(values)
    if bad.any():
        cols = bad.reshape(-1, x.size).any(axis=0)
        raise DomainError(f"integrand is not finite at x={x[cols][:3]}")


def _refine(rule, fn, tol, min_level, max_level):
    """Run the level loop on ``fn`` (possibly vector valued along axis 0).

    Returns (value, estimate, evaluations, level).
    """
    x, w, h = rule.nodes(0)
    vals = fn(x)
    _check_finite(vals, x)
    acc = vals @ w
    evals = x.size
    prev = h * acc
    est = np.inf
    for level in range(1, max_level + 1):
        x, w, h = rule.nodes(level)
        if x.size:
            vals = fn(x)
            _check_finite(vals, x)
            acc = acc + vals @ w
            evals += x.size
        cur = h * acc
        est = float(np.max(np.abs(cur - prev)))
        if level >= min_level and est <= tol:
            return cur, est, evals, level
        prev = cur
    raise NonConvergence(
        f"refinement limit ({max_level} levels) reached with estimate {est:.3g} > {tol:.3g}",
        estimate=est,
    )


def integrate_semi_infinite(f: Integrand1D, tol: float = 1e-10) -> QuadResult:
    """Integrate ``f`` over [0, inf) to absolute accuracy ``tol``."""
    if not tol >= _TOL_FLOOR_1D:
        raise ValueError(f"tol must be >= {_TOL_FLOOR_1D:g}")
    _check_decay(f.decay_rate, f.decay_kind)
    rule, tail, _, lo, hi = _make_rule(f.decay_rate, f.decay_kind, f.amplitude, f.frequency, tol)
    budget = tol - tail
    value, est, evals, _ = _refine(rule, lambda x: np.asarray(f.eval(x), dtype=float), budget, lo, hi)
    return QuadResult(float(value), est + tail, evals)


def _inner_integrals(f, xs, rule, tol, lo, hi):
    """Integrate f(x_i, .) over y for every x_i at once."""
    out = np.empty(xs.size)
    total = 0
    worst = 0.0
    # bound the (rows x new nodes) block for the first few levels
    rows = min(2048, max(16, 2 * _MAX_BLOCK // (7 * 2 ** min(hi, lo + 3))))
    for start in range(0, xs.size, rows):
        col = xs[start:start + rows, None]
        vals, est, evals, _ = _refine(
            rule,
            lambda y, col=col: np.asarray(f.eval(col, y[None, :]), dtype=float).reshape(col.shape[0], y.size),
            tol, lo, hi,
        )
        out[start:start + rows] = vals
        total += evals * col.shape[0]
        worst = max(worst, est)
    return out, worst, total


def integrate_quadrant(f: Integrand2D, tol: float = 1e-8, swap: bool = False) -> QuadResult:
    """Integrate ``f`` over [0, inf)^2 as an iterated integral.

    The outer (x) integral gets half the budget.  Inner integrals are held
    to ``tol/(2*W)`` with ``W = max(1, X)``, X the outer truncation point,
    so their accumulated error stays inside the other half.  ``swap=True``
    integrates over x on the inside instead.
    """
    if not tol >= _TOL_FLOOR_2D:
        raise ValueError(f"tol must be >= {_TOL_FLOOR_2D:g}")
    if swap:
        f = f.transposed()
    _check_decay(f.decay_rate_x, f.decay_kind_x)
    _check_decay(f.decay_rate_y, f.decay_kind_y)
    # envelope of the inner integral as a function of x
    outer_amplitude = f.amplitude * max(1.0, tail_bound(f.decay_rate_y, f.decay_kind_y, 0.0))
    outer, tail_x, span_x, lo_x, hi_x = _make_rule(
        f.decay_rate_x, f.decay_kind_x, outer_amplitude, f.frequency_x, tol / 2
    )
    width = max(1.0, span_x)
    inner_tol = tol / (2.0 * width)
    inner, tail_y, _, lo_y, hi_y = _make_rule(
        f.decay_rate_y, f.decay_kind_y, f.amplitude, f.frequency_y, inner_tol
    )
    inner_budget = inner_tol - tail_y
    stats = {"evals": 0, "worst": 0.0}

    def g(xs):
        vals, worst, evals = _inner_integrals(f, xs, inner, inner_budget, lo_y, hi_y)
        stats["evals"] += evals
        stats["worst"] = max(stats["worst"], worst)
        return vals

    value, est, _, _ = _refine(outer, g, tol / 2 - tail_x, lo_x, hi_x)
    error = est + tail_x + width * (stats["worst"] + tail_y)
    return QuadResult(float(value), error, stats["evals"])
