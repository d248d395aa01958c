from __future__ import annotations

import random

import pytest

from blancert.certifier import (
    CertificateError,
    LinearForm,
    RECURRENCE,
    base_formulas,
    degree_recurrence,
    displayed_formulas,
    nonnegative_on_cone,
    orbit_sanity,
    poly_diff,
    positive_on_cone,
    preserves_degree_order,
)
from blancert.polyring import STANDARD, Dyadic, PolyError
from blancert.reduction import certified_levels, marker_profile, mod_2I

DEFAULT = {"2001": 2, "1200": 5, "1110": 7, "1101": 11, "0210": 13}


def test_degree_recurrence_from_base_degrees():
    d0, d1, d2_bound, d3 = degree_recurrence((15, 17, 15, 16))
    assert (d0, d1, d3) == (436, 439, 438)
    assert d2_bound == 436


def test_recurrence_preserves_admissibility():
    rng = random.Random(0)
    for _ in range(300):
        d2 = rng.randint(0, 50)
        d0 = d2 + rng.randint(0, 50)
        d3 = d0 + 1 + rng.randint(0, 50)
        d1 = d3 + 1 + rng.randint(0, 50)
        assert preserves_degree_order((d0, d1, d2, d3))
        assert preserves_degree_order((d0, d1, d2, d3), d2_new=0)


def test_preserves_degree_order_rejects_bad_input():
    with pytest.raises(PolyError):
        preserves_degree_order((5, 4, 1, 6))


def test_cone_signs():
    assert positive_on_cone(RECURRENCE["gt3"] - RECURRENCE["M0"])
    assert positive_on_cone(RECURRENCE["M1"] - RECURRENCE["gt3"])
    assert nonnegative_on_cone(LinearForm((0, 0, 0, 0)))
    assert not positive_on_cone(LinearForm((1, -1, 0, 0)))
    # exhaustive check on a box of admissible tuples
    form = RECURRENCE["M1"] - RECURRENCE["gt3"]
    for d2 in range(4):
        for d0 in range(d2, 6):
            for d3 in range(d0 + 1, 8):
                for d1 in range(d3 + 1, 10):
                    assert form((d0, d1, d2, d3)) > 0


def test_step_identities(step_certificate):
    cert = step_certificate
    assert cert.identities == {name: True for name in
                               ("M0_head", "M1_head", "q2_mod_2I", "gt2_head", "q3_mod_2I", "gt3_head")}
    assert not cert.diffs


def test_step_degree_and_form_conditions(step_certificate):
    cert = step_certificate
    assert all(cert.degree_checks.values())
    assert all(cert.form_conditions.values())
    assert cert.output_degrees == ("11*d0 + 15*d1 + 1*d3", "10*d0 + 17*d1",
                                   "11*d0 + 15*d1 + 1*d3", "10*d0 + 16*d1 + 1*d3")
    assert cert.inductive


def test_step_primaries_use_only_heads(step_certificate):
    form = step_certificate.form
    allowed = {"a_2001", "a_1200", "a_1110", "a_1101", "a_0210", "M0", "M1", "gt2", "gt3"}
    for p in (form.M0, form.M1, form.gt2, form.gt3):
        assert {v.name for v in p.variables_used()} <= allowed


def test_q_components_are_certified_even(quadruples):
    q1, _ = quadruples
    for c in q1:
        t, e = c.raw_terms()
        assert e == 0
        for m, coeff in t.items():
            level_r, _ = certified_levels(marker_profile(c, m), Dyadic(coeff).valuation())
            assert level_r >= 1


def test_ideal_point_reductions(quadruples):
    _, q2 = quadruples
    want = displayed_formulas()
    assert mod_2I(q2[2]) == want["q2_mod_2I"]
    assert mod_2I(q2[3]) == want["q3_mod_2I"]


def test_ideal_point_specializes_to_marker_point(quadruples):
    q1, q2 = quadruples
    vals = {"a_2001": 3, "a_1200": -1, "a_1110": 2, "a_1101": 1, "a_0210": 5,
            "M0": 2, "M1": -1, "N0": 1, "N1": 3, "gt2": 4, "g2": -2, "gt3": 6, "g3": 2}
    ideal_vals = dict(vals)
    ideal_vals["p2"] = vals["gt2"] + 2 * vals["g2"]
    ideal_vals["p3"] = vals["gt3"] + 2 * vals["g3"]
    for k in range(4):
        assert q1[k].evaluate(vals) == q2[k].evaluate(ideal_vals)


def test_base_certificate(base_certificate):
    cert = base_certificate
    assert cert.output_degrees == (15, 17, 15, 16)
    assert cert.passed and cert.inductive
    want = base_formulas()
    for n in ("M0", "M1", "gt2", "gt3"):
        assert cert.form.__dict__[n].leading_part_in("Y") == want[n]


def test_poly_diff_truncates():
    a = STANDARD.parse(" + ".join(f"M0^{i}" for i in range(1, 61)))
    lines = poly_diff(a, STANDARD.zero(), limit=50)
    assert len(lines) == 51 and lines[-1] == "... 10 more terms"
    assert poly_diff(a, a) == []


def test_orbit_pattern_holds():
    report = orbit_sanity(DEFAULT, 3, 5, 3)
    assert len(report.steps) == 4
    assert not report.contradiction
    assert report.pattern_holds


def test_orbit_random_assignments():
    rng = random.Random(12)
    for _ in range(5):
        a = {k: rng.randrange(1, 30) | 1 for k in DEFAULT}
        a["2001"] = 2 * rng.randrange(1, 15)
        report = orbit_sanity(a, rng.randint(1, 9), rng.randint(1, 9), 3)
        assert report.pattern_holds and not report.contradiction


def test_orbit_seed_only_and_preconditions():
    assert len(orbit_sanity(DEFAULT, 1, 1, 0).steps) == 1
    with pytest.raises(PolyError):
        orbit_sanity({**DEFAULT, "2001": 3}, 1, 1, 2)
    with pytest.raises(PolyError):
        orbit_sanity(DEFAULT, 0, 0, 1)


def test_orbit_rejects_indeterminate_seed():
    with pytest.raises(CertificateError):
        orbit_sanity(DEFAULT, 0, 1, 1)
