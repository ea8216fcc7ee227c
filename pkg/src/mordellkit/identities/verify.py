"""Generic verifier over the registry."""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Mapping

from ..errors import DomainError, NonConvergence
from .model import IdentityRecord, VerificationOutcome, as_public, components
from .registry import FLOOR, RECORDS

# each side gets this share of the comparison tolerance
SIDE_SHARE = 0.1


@dataclass(frozen=True)
class IdentitySummary:
    id: str
    citation: str
    domain: str
    constraint: str | None
    asserted: bool
    default_tol: float


def get_record(identity_id: str) -> IdentityRecord:
    try:
        return RECORDS[identity_id]
    except KeyError:
        raise DomainError(f"unknown identity {identity_id!r}") from None


def list_identities() -> list[IdentitySummary]:
    return [
        IdentitySummary(r.id, r.citation, r.domain_text(), r.constraint, r.asserted, r.default_tol)
        for r in (RECORDS[k] for k in sorted(RECORDS))
    ]


def _side_index(rec: IdentityRecord, side) -> int:
    if isinstance(side, int):
        if not 0 <= side < len(rec.sides):
            raise DomainError(f"{rec.id} has {len(rec.sides)} sides")
        return side
    names = {"lhs": 0, "rhs": 1}
    if side in names:
        return names[side]
    if side in rec.side_names:
        return rec.side_names.index(side)
    raise DomainError(f"unknown side {side!r}; use lhs, rhs or a side index")


def _side_tol(rec: IdentityRecord, tol: float) -> float:
    return max(SIDE_SHARE * tol, FLOOR[rec.method])


def evaluate_side(identity_id: str, side="lhs", params: Mapping | None = None, tol: float | None = None):
    """One side as a QuadResult/SeriesResult (a tuple of them for complex sides)."""
    rec = get_record(identity_id)
    p = rec.resolve(params)
    tol = rec.default_tol if tol is None else tol
    if not tol > 0:
        raise DomainError("tol must be positive")
    est = rec.sides[_side_index(rec, side)](p, _side_tol(rec, tol))
    return as_public(est, "series" if rec.method in ("series", "lerch") else "quad")


def _scalar(side):
    c = components(side)
    return c[0].value if len(c) == 1 else [e.value for e in c]


def _error(side):
    return sum(e.error for e in components(side))


def _compare(a, b):
    ca, cb = components(a), components(b)
    diff = max(abs(x.value - y.value) for x, y in zip(ca, cb))
    scale = max(max(abs(x.value) for x in ca), max(abs(y.value) for y in cb))
    rel = diff / scale if scale > 0 else (0.0 if diff == 0 else math.inf)
    return diff, rel


def verify(identity_id: str, params: Mapping | None = None, tol: float | None = None) -> VerificationOutcome:
    """Evaluate every side, compare all pairs, and report.

    Passes when the worst pairwise difference is within ``tol`` absolutely or
    relatively.  A side that fails to converge makes the outcome
    ``inconclusive``.
    """
    rec = get_record(identity_id)
    p = rec.resolve(params)
    tol = rec.default_tol if tol is None else float(tol)
    if not tol > 0:
        raise DomainError("tol must be positive")
    st = _side_tol(rec, tol)
    start = time.perf_counter()
    try:
        sides = [f(p, st) for f in rec.sides]
    except NonConvergence as exc:
        return VerificationOutcome(
            rec.id, p, math.nan, math.nan, math.nan, math.nan, False, tol, 0,
            time.perf_counter() - start, math.nan, math.nan, rec.asserted, "inconclusive",
            message=str(exc),
        )
    elapsed = time.perf_counter() - start
    abs_diff, rel_diff = 0.0, 0.0
    for a, b in itertools.combinations(sides, 2):
        d, r = _compare(a, b)
        abs_diff, rel_diff = max(abs_diff, d), max(rel_diff, r)
    passed = abs_diff <= tol or rel_diff <= tol
    evals = sum(e.evaluations for s in sides for e in components(s))
    return VerificationOutcome(
        identity_id=rec.id,
        params=p,
        lhs=_scalar(sides[0]),
        rhs=_scalar(sides[1]),
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        passed=passed,
        tol=tol,
        evaluations=max(1, evals),
        elapsed=elapsed,
        lhs_error=_error(sides[0]),
        rhs_error=_error(sides[1]),
        asserted=rec.asserted,
        status="pass" if passed else "fail",
        sides=[_scalar(s) for s in sides],
        side_errors=[_error(s) for s in sides],
        message=rec.note,
    )
