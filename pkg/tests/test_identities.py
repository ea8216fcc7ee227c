import math

import numpy as np
import pytest

from mordellkit import evaluate_side, fresnel, list_identities, phi, psi, verify
from mordellkit.errors import ConstraintViolation, DomainError, NonConvergence
from mordellkit.identities import RECORDS, Estimate, IdentityRecord, VerificationOutcome, get_record
from mordellkit.quad import QuadResult
from mordellkit.series import SeriesResult

ASSERTED = sorted(k for k, r in RECORDS.items() if r.asserted)
EXPLORATORY = sorted(k for k, r in RECORDS.items() if not r.asserted)


@pytest.mark.parametrize("rid", ASSERTED)
def test_asserted_records_pass_at_defaults(rid):
    o = verify(rid)
    assert o.status == "pass", (o.abs_diff, o.rel_diff)
    assert o.passed and o.asserted


def test_exploratory_set():
    assert set(EXPLORATORY) >= {"ELL2", "BESSEL-DSUM", "PHI-COMBINED"}
    for rid in EXPLORATORY:
        o = verify(rid)
        assert not o.asserted
        assert o.status in ("pass", "fail", "inconclusive")


def test_printed_variants_fail():
    assert verify("COR2b-PRINTED", {"n": 3}).status == "fail"
    assert verify("LAT-INNER-PRINTED").status == "fail"
    assert verify("ELL2", {"alpha": 1.0, "beta": 2.0}).status == "fail"
    assert verify("ELL2", {"alpha": 2.0, "beta": 0.5}).status == "pass"


def test_list_is_sorted_and_complete():
    ids = [s.id for s in list_identities()]
    assert ids == sorted(RECORDS)
    fact1 = next(s for s in list_identities() if s.id == "FACT1")
    assert fact1.constraint == "alpha*beta=2*pi"


def test_domain_errors():
    with pytest.raises(DomainError):
        verify("NOPE")
    with pytest.raises(DomainError):
        verify("RAM", {"alpha": -1.0})
    with pytest.raises(DomainError):
        verify("RAM", {"alpha": 4.0})
    with pytest.raises(DomainError):
        verify("RAM", {"beta": 1.0})
    with pytest.raises(DomainError):
        verify("LAT-INNER", {"n": 0.5})
    with pytest.raises(DomainError):
        verify("RAM", tol=0.0)


def test_constraint_violation():
    with pytest.raises(ConstraintViolation):
        verify("HR-2", {"alpha": 1.0, "beta": 1.0})
    o = verify("HR-2", {"alpha": 1.0, "beta": 2 * math.pi})
    assert o.params["beta"] == 2 * math.pi and o.status == "pass"


@pytest.mark.parametrize("rid", ["HR-1", "HR-2", "HR-3", "LANDEN2"])
def test_alpha_beta_swap(rid):
    rec = get_record(rid)
    a = 1.5
    p = rec.resolve({"alpha": a})
    q = rec.resolve({"alpha": p["beta"]})
    assert q["beta"] == pytest.approx(a, rel=1e-15)
    x, y = verify(rid, p), verify(rid, q)
    assert x.lhs == pytest.approx(y.rhs, rel=1e-7)
    assert x.rhs == pytest.approx(y.lhs, rel=1e-7)


def test_phi_real_arguments():
    re, im = phi(1.0, 1.0, 0.3, 0.0, 0.3, 0.0)
    assert im == 0.0 and re > 0
    re2, _ = phi(1.0, 1.0, 0.3, phi_re=0.3)
    assert re2 == re


def test_phi_swap():
    a, _ = phi(1.2, 0.8, 0.3, 0.0, 0.5)
    b, _ = phi(0.8, 1.2, 0.5, 0.0, 0.3)
    assert a == pytest.approx(b, abs=1e-9)


def test_psi_zero_and_symmetry():
    assert psi(1.0, 1.0, 0.0, 0.4) == 0.0
    assert psi(1.0, 1.3, 0.5, 0.2) == pytest.approx(psi(1.3, 1.0, 0.2, 0.5), abs=1e-9)
    assert psi(1.0, 1.0, -0.5, 0.5) == pytest.approx(-psi(1.0, 1.0, 0.5, 0.5), abs=1e-12)


def test_psi_monte_carlo():
    rng = np.random.default_rng(7)
    n = 10_000_000
    # half-normal draws with density sqrt2 exp(-pi x^2/2)
    x = np.abs(rng.normal(0.0, 1 / math.sqrt(math.pi), n))
    y = np.abs(rng.normal(0.0, 1 / math.sqrt(math.pi), n))
    h = np.sin(math.pi * x * y) * np.sin(0.5 * x) * np.sin(0.5 * y) / (np.cosh(math.pi * x) * np.cosh(math.pi * y))
    mean, sd = h.mean() / 2, h.std() / 2 / math.sqrt(n)
    assert abs(psi(1.0, 1.0, 0.5, 0.5) - mean) < 3 * sd


def test_fresnel():
    assert fresnel(1.0) == pytest.approx(math.sqrt(math.pi / 4) / 2)


def test_evaluate_side():
    lhs = evaluate_side("RAM", "lhs", {"alpha": 1.0})
    rhs = evaluate_side("RAM", "rhs", {"alpha": 1.0})
    assert isinstance(lhs, QuadResult)
    assert lhs.value == pytest.approx(0.5 * math.cos(0.25), abs=1e-9)
    assert rhs.value == 0.5 * math.cos(0.25)
    s = evaluate_side("LEGENDRE", 0, {"alpha": 1.3})
    assert isinstance(s, SeriesResult)
    z = evaluate_side("K0-JY", "lhs", {"x": 2.0})
    assert isinstance(z, tuple) and len(z) == 2
    with pytest.raises(DomainError):
        evaluate_side("RAM", "middle")
    with pytest.raises(DomainError):
        evaluate_side("RAM", 5)


def test_outcome_round_trip():
    o = verify("HALF", {"alpha": 1.7})
    d = o.to_dict(timings=True)
    assert d["pass"] is True and "elapsed" in d
    back = VerificationOutcome.from_dict(d)
    assert back == o
    assert "elapsed" not in o.to_dict()


def test_tolerance_override():
    loose = verify("RAM", {"alpha": 2.0}, tol=1e-4)
    assert loose.tol == 1e-4 and loose.passed
    # below the Lerch floor the sides keep their floor accuracy and the comparison fails
    assert verify("LERCH", {"p": 1.2}, tol=1e-8).status == "fail"


def test_nonconvergence_is_inconclusive(monkeypatch):
    def stuck(p, tol):
        raise NonConvergence("stuck", estimate=0.0)

    rec = IdentityRecord("STUCK", "a side that never settles", (), (stuck, lambda p, tol: Estimate.exact(1.0)), 1e-6)
    monkeypatch.setitem(RECORDS, "STUCK", rec)
    o = verify("STUCK")
    assert o.status == "inconclusive" and not o.passed
    assert math.isnan(o.abs_diff) and "stuck" in o.message


def test_acceptance_closed_forms():
    assert verify("EX1").lhs == pytest.approx(0.1494292, abs=1e-6)
    assert verify("EX2").lhs == pytest.approx(0.0473672, abs=1e-6)
    assert verify("EX3").rhs == pytest.approx(1 / (8 * math.sqrt(2) * math.pi ** 2), abs=1e-15)
