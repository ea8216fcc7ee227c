"""Records, parameter domains, numeric estimates and verification outcomes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from ..errors import ConstraintViolation, DomainError
from ..quad import QuadResult
from ..series import SeriesResult

CONSTRAINT_TOL = 1e-14


@dataclass(frozen=True)
class Estimate:
    """A value with an absolute error bound and the work spent on it."""

    value: float
    error: float = 0.0
    evaluations: int = 0

    @classmethod
    def exact(cls, value: float) -> "Estimate":
        return cls(float(value), 0.0, 0)

    @classmethod
    def of(cls, r) -> "Estimate":
        if isinstance(r, QuadResult):
            return cls(r.value, r.abs_error_estimate, r.evaluations)
        if isinstance(r, SeriesResult):
            return cls(r.value, r.tail_bound, r.terms_used)
        return cls.exact(r)

    def __add__(self, other):
        o = other if isinstance(other, Estimate) else Estimate.exact(other)
        return Estimate(self.value + o.value, self.error + o.error, self.evaluations + o.evaluations)

    __radd__ = __add__

    def __neg__(self):
        return Estimate(-self.value, self.error, self.evaluations)

    def __sub__(self, other):
        return self + (-other if isinstance(other, Estimate) else -float(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Estimate):
            return Estimate(
                self.value * other.value,
                abs(self.value) * other.error + abs(other.value) * self.error + self.error * other.error,
                self.evaluations + other.evaluations,
            )
        return Estimate(self.value * other, abs(other) * self.error, self.evaluations)

    __rmul__ = __mul__

    def square(self) -> "Estimate":
        return self * self


Side = "Estimate | tuple[Estimate, ...]"


def components(side) -> tuple[Estimate, ...]:
    return side if isinstance(side, tuple) else (side,)


@dataclass(frozen=True)
class Param:
    """One named parameter: bounds, integrality, default, or a derivation."""

    name: str
    default: float | None = None
    lower: float | None = None
    upper: float | None = None
    closed_lower: bool = False
    closed_upper: bool = False
    integer: bool = False
    derived: Callable[[Mapping], float] | None = None
    choices: tuple | None = None

    @property
    def free(self) -> bool:
        return self.derived is None

    def describe(self) -> str:
        if self.choices is not None:
            dom = "{" + ", ".join(f"{c:g}" for c in self.choices) + "}"
        elif self.integer:
            dom = f"integer >= {self.lower:g}"
        else:
            lo = "-inf" if self.lower is None else f"{self.lower:g}"
            hi = "inf" if self.upper is None else f"{self.upper:g}"
            dom = ("[" if self.closed_lower else "(") + f"{lo}, {hi}" + ("]" if self.closed_upper else ")")
        return f"{self.name} in {dom}"

    def check(self, v: float) -> None:
        if not math.isfinite(v):
            raise DomainError(f"{self.name} must be finite")
        if self.choices is not None:
            if v not in self.choices:
                raise DomainError(f"{self.describe()}, got {v:g}")
            return
        if self.integer and v != int(v):
            raise DomainError(f"{self.name} must be an integer, got {v:g}")
        if self.lower is not None and (v < self.lower or (v == self.lower and not self.closed_lower)):
            raise DomainError(f"{self.describe()}, got {v:g}")
        if self.upper is not None and (v > self.upper or (v == self.upper and not self.closed_upper)):
            raise DomainError(f"{self.describe()}, got {v:g}")


def positive(name, default=None, derived=None) -> Param:
    return Param(name, default, lower=0.0, derived=derived)


def real(name, default=None) -> Param:
    return Param(name, default)


@dataclass(frozen=True)
class IdentityRecord:
    """One identity: a family of sides that should agree on a parameter domain.

    ``sides`` are callables ``(params, tol) -> Estimate | tuple[Estimate, ...]``
    (tuples hold real and imaginary parts).  ``constraint`` is printed as is;
    ``constraint_residual`` returns the relative violation.
    """

    id: str
    citation: str
    params: tuple[Param, ...]
    sides: tuple[Callable, ...]
    default_tol: float
    constraint: str | None = None
    constraint_residual: Callable[[Mapping], float] | None = None
    derivation: str | None = None
    side_names: tuple[str, ...] = ("lhs", "rhs")
    asserted: bool = True
    method: str = "quad1d"
    note: str = ""

    def __post_init__(self):
        if len(self.sides) < 2:
            raise ValueError("an identity needs at least two sides")
        if len(self.side_names) != len(self.sides):
            object.__setattr__(self, "side_names", tuple(f"side{i}" for i in range(len(self.sides))))
        if self.constraint is not None:
            names = {p.name for p in self.params}
            used = {tok for tok in _identifiers(self.constraint) if tok not in _MATH_WORDS}
            if not used <= names:
                raise ValueError(f"{self.id}: constraint uses undeclared {sorted(used - names)}")

    @property
    def free_params(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params if p.free)

    def domain_text(self) -> str:
        return "; ".join(p.describe() for p in self.params if p.free) or "-"

    def resolve(self, given: Mapping[str, float] | None = None) -> dict:
        """Fill defaults and derived partners, check domains and the constraint."""
        given = dict(given or {})
        known = {p.name for p in self.params}
        unknown = set(given) - known
        if unknown:
            raise DomainError(f"{self.id} has no parameter(s) {sorted(unknown)}; expected {sorted(known)}")
        values: dict = {}
        for p in self.params:
            if p.free:
                if p.name in given:
                    values[p.name] = float(given[p.name])
                elif p.default is not None:
                    values[p.name] = float(p.default)
                else:
                    raise DomainError(f"{self.id}: parameter {p.name} is required")
                p.check(values[p.name])
        for p in self.params:
            if not p.free:
                values[p.name] = float(given[p.name]) if p.name in given else float(p.derived(values))
                p.check(values[p.name])
        if self.constraint_residual is not None:
            r = self.constraint_residual(values)
            if not r <= CONSTRAINT_TOL:
                raise ConstraintViolation(f"{self.id}: constraint {self.constraint} violated (relative {r:.3g})")
        return {p.name: values[p.name] for p in self.params}


_MATH_WORDS = {"pi", "sqrt", "exp", "log", "cos", "sin"}


def _identifiers(text):
    tok, out = "", []
    for ch in text + " ":
        if ch.isalnum() or ch == "_":
            tok += ch
        else:
            if tok and not tok[0].isdigit():
                out.append(tok)
            tok = ""
    return out


def product_constraint(a: str, b: str, target: float, text: str):
    """(text, residual, derive-b) for a constraint a*b = target."""
    def residual(p):
        return abs(p[a] * p[b] - target) / abs(target)

    def derive(p):
        return target / p[a]

    return text, residual, derive


@dataclass
class VerificationOutcome:
    identity_id: str
    params: dict
    lhs: float | list
    rhs: float | list
    abs_diff: float
    rel_diff: float
    passed: bool
    tol: float
    evaluations: int
    elapsed: float
    lhs_error: float
    rhs_error: float
    asserted: bool = True
    status: str = "pass"
    sides: list = field(default_factory=list)
    side_errors: list = field(default_factory=list)
    message: str = ""

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "pass": self.passed,
            "tol": self.tol,
            "evaluations": self.evaluations,
            "lhs_error": self.lhs_error,
            "rhs_error": self.rhs_error,
            "asserted": self.asserted,
            "status": self.status,
            "sides": self.sides,
            "side_errors": self.side_errors,
            "message": self.message,
        }
        if timings:
            d["elapsed"] = self.elapsed
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "VerificationOutcome":
        return cls(
            identity_id=d["identity_id"],
            params=dict(d["params"]),
            lhs=d["lhs"],
            rhs=d["rhs"],
            abs_diff=d["abs_diff"],
            rel_diff=d["rel_diff"],
            passed=d["pass"],
            tol=d["tol"],
            evaluations=d["evaluations"],
            elapsed=d.get("elapsed", 0.0),
            lhs_error=d["lhs_error"],
            rhs_error=d["rhs_error"],
            asserted=d.get("asserted", True),
            status=d.get("status", "pass" if d["pass"] else "fail"),
            sides=list(d.get("sides", [])),
            side_errors=list(d.get("side_errors", [])),
            message=d.get("message", ""),
        )


def as_public(side: Sequence[Estimate] | Estimate, method: str):
    """QuadResult/SeriesResult view of a side (tuple for complex sides)."""
    def one(e: Estimate):
        if method == "series":
            return SeriesResult(e.value, e.error, max(1, e.evaluations))
        return QuadResult(e.value, e.error, max(1, e.evaluations))

    if isinstance(side, tuple):
        return tuple(one(e) for e in side)
    return one(side)
