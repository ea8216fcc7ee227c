"""One test per acceptance criterion, each timed against its wall-clock limit.

Every criterion prints a single PASS/FAIL line (also collected into the
terminal summary by conftest.py).
"""

import json
import math
import time

import numpy as np
import pytest

from mordellkit import kernel, self_reciprocity_residual, verify
from mordellkit.cli import main
from mordellkit.quad import integrate_semi_infinite
from mordellkit.series import sum_lerch
from mordellkit.specfun import SELF_RECIPROCAL_1D, dn_quarter_check, elliptic_E, elliptic_K
from test_quad import EXACT, SUITE, trapezoid_oracle

PI = math.pi
PROBES_2D = [(0.0, 0.0), (0.4, 0.9), (1.2, 0.3), (1.5, 1.5)]


def _diff(rid, params=None, rel=False):
    o = verify(rid, params)
    return o.rel_diff if rel else o.abs_diff


def check(acceptance, num, title, limit, rows):
    """``rows`` is a callable returning (label, error, bound) triples."""
    start = time.perf_counter()
    try:
        got = rows()
        error = None
    except Exception as exc:  # a crash is a failed criterion, not a test error
        got, error = [], f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    bad = [(lab, e, b) for lab, e, b in got if not e < b]
    ok = error is None and not bad and elapsed < limit
    worst = max((e / b for _, e, b in got if b > 0), default=0.0)
    detail = f"{len(got)} checks, worst err/bound {worst:.2g}, {elapsed:.1f}s of {limit:g}s"
    if bad:
        detail += "; failing " + ", ".join(f"{lab} ({e:.3g} >= {b:g})" for lab, e, b in bad[:4])
    if error:
        detail += "; " + error
    acceptance.append((num, title, ok, detail))
    print(f"\n[{'PASS' if ok else 'FAIL'}] {num:2d}. {title}: {detail}")
    assert ok, detail


def test_criterion_01_self_reciprocity(acceptance):
    def rows():
        return [(kid, self_reciprocity_residual(kernel(kid)), 1e-8) for kid in SELF_RECIPROCAL_1D]
    check(acceptance, 1, "1D self-reciprocal kernels", 10, rows)


def test_criterion_02_self_reciprocity_2d(acceptance):
    def rows():
        return [(f"{rid}{ab}", _diff(rid, {"a": ab[0], "b": ab[1]}), 1e-7)
                for rid in ("SR2D-COS1", "SR2D-SINSIN", "SR2D-ONEMINUSCOS") for ab in PROBES_2D]
    check(acceptance, 2, "2D self-reciprocal kernels", 60, rows)


def test_criterion_03_alpha_beta_invariance(acceptance):
    def rows():
        return [(f"{rid} alpha={a}", _diff(rid, {"alpha": a}, rel=True), 1e-9)
                for rid in ("HR-1", "HR-2", "HR-3") for a in (1.0, 1.5)]
    check(acceptance, 3, "alpha<->beta invariance of Gaussian integrals", 5, rows)


def test_criterion_04_poisson_and_k_series(acceptance):
    def rows():
        return [(f"{rid} alpha={a}", _diff(rid, {"alpha": a}), 1e-10)
                for rid in ("POISSON-ELL", "K-SERIES") for a in (1.0, 2.0)]
    check(acceptance, 4, "Poisson sech sum and K series", 2, rows)


def test_criterion_05_legendre(acceptance):
    def rows():
        out = [(f"LEGENDRE alpha={a}", _diff("LEGENDRE", {"alpha": a}), 1e-10) for a in (1.0, 1.3)]
        for k in (0.3, 1 / math.sqrt(2), 0.9):
            kp = math.sqrt(1 - k * k)
            K, E, K1, E1 = elliptic_K(k), elliptic_E(k), elliptic_K(kp), elliptic_E(kp)
            out.append((f"EK'+E'K-KK' k={k:.4g}", abs(E * K1 + E1 * K - K * K1 - PI / 2), 1e-12))
        return out
    check(acceptance, 5, "Legendre relation", 2, rows)


def test_criterion_06_landen(acceptance):
    def rows():
        out = [(f"LANDEN alpha={a:.4g}", _diff("LANDEN", {"alpha": a}), 1e-10) for a in (math.sqrt(2), 1.0, 2.5)]
        lhs, rhs = dn_quarter_check(0.6)
        out.append(("dn quarter k=0.6", abs(lhs - rhs), 1e-10))
        return out
    check(acceptance, 6, "Landen sums", 2, rows)


def test_criterion_07_elliptic_and_fbeta(acceptance):
    def rows():
        out = [(f"ELL1 alpha={a}", _diff("ELL1", {"alpha": a}), 1e-9) for a in (1.0, 1.5)]
        out.append(("FBETA (2, pi/3)", _diff("FBETA", {"beta": 2.0, "theta": PI / 3}), 1e-9))
        return out
    check(acceptance, 7, "elliptic sum and f_beta identity", 3, rows)


def test_criterion_08_factorizations(acceptance):
    def rows():
        return [(f"{rid} alpha={a:.4g}", _diff(rid, {"alpha": a}, rel=True), 1e-7)
                for rid in ("FACT1", "FACT2", "LANDEN2") for a in (math.sqrt(2 * PI), 2.0, 3.0)]
    check(acceptance, 8, "double-integral factorizations", 120, rows)


def test_criterion_09_closed_forms(acceptance):
    def rows():
        out = [(rid, _diff(rid), 1e-6) for rid in ("EX1", "EX2", "EX3")]
        out += [(f"{rid} n={n}", _diff(rid, {"n": n}), 1e-6)
                for rid in ("COR1a", "COR1b", "COR2a", "COR2b") for n in (1.0, 3.0)]
        return out
    check(acceptance, 9, "closed forms and corollaries", 180, rows)


def test_criterion_10_mordell_suite(acceptance):
    def rows():
        out = [(f"{rid} alpha={a}", _diff(rid, {"alpha": a}), 1e-8)
               for rid in ("ABS", "HALF", "BYPRODUCT", "SQRT2-COS", "SQRT2-SIN") for a in (1.0, 2.0)]
        for a in np.geomspace(0.5, 4.0, 7):
            o = verify("ZERO", {"alpha": float(a)})
            out.append((f"ZERO alpha={a:.3g}", abs(o.lhs), 1e-7))
        out += [(f"RAM alpha={a:.4g}", _diff("RAM", {"alpha": a}), 1e-9) for a in (1.0, 2.0, PI)]
        return out
    check(acceptance, 10, "Mordell-integral suite", 60, rows)


def test_criterion_11_phi(acceptance):
    def rows():
        return [
            ("PHI-FUNC", _diff("PHI-FUNC", {"alpha": 1, "beta": 1, "theta": 0.3, "phi": 0.3}), 1e-6),
            ("PHI-SHIFT", _diff("PHI-SHIFT", {"alpha": 1, "beta": 1, "theta": 0.4, "phi": 0.2}), 1e-6),
        ]
    check(acceptance, 11, "Phi functional equations", 120, rows)


def test_criterion_12_lattice(acceptance):
    def rows():
        out = [(rid, _diff(rid), 1e-6) for rid in ("LAT1", "LAT2")]
        for m, n in ((0, 0), (0, 1), (2, 1)):
            out.append((f"LAT-INNER n={n} x={m + 1}", _diff("LAT-INNER", {"n": n, "x": m + 1.0}), 1e-8))
            for s in (1, -1):
                out.append((f"LAT-K0 ({m},{n},{s})", _diff("LAT-K0", {"m": m, "n": n, "sign": s}), 1e-8))
        out += [(f"K0-JY x={x}", _diff("K0-JY", {"x": x}), 1e-9) for x in (2.0, 5.0, 10.0)]
        return out
    check(acceptance, 12, "lattice integrals and K0 split", 90, rows)


def test_criterion_13_engine(acceptance):
    def rows():
        out = []
        for name, f in SUITE:
            r = integrate_semi_infinite(f, 1e-9)
            out.append((f"oracle {name}", abs(r.value - trapezoid_oracle(f.eval)), 1e-8))
            if name in EXACT:
                for tol in (1e-6, 1e-12):
                    r = integrate_semi_infinite(f, tol)
                    err = abs(r.value - EXACT[name])
                    out.append((f"estimate {name} {tol:g}", err, max(5 * r.abs_error_estimate, tol) * (1 + 1e-12)))
        out.append(("Lerch p=1.2", abs(sum_lerch(1.2).value - sum_lerch(1 / 1.2).value), 1e-4))
        return out
    check(acceptance, 13, "engine soundness", 600, rows)


def test_criterion_14_exploratory(acceptance, capsys):
    def rows():
        out = []
        for argv in (["verify", "ELL2", "PHI-COMBINED", "BESSEL-DSUM"],
                     ["sweep", "BESSEL-DSUM", "--range", "terms:10:40:3"],
                     ["sweep", "ELL2", "--range", "alpha:0.5:2:3"]):
            capsys.readouterr()
            rc = main(argv + ["--format", "json"])
            doc = json.loads(capsys.readouterr().out)
            flags = [o["asserted"] for o in doc["outcomes"]]
            out.append((" ".join(argv[:2]) + " exit code", float(rc), 0.5))
            out.append((" ".join(argv[:2]) + " asserted flags", float(any(flags)), 0.5))
        return out
    check(acceptance, 14, "exploratory items reported, never failing", 120, rows)
