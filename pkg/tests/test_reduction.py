from __future__ import annotations

import random

import pytest

from blancert.polyring import STANDARD
from blancert.reduction import (
    ContractViolation,
    MarkerProfile,
    UncertifiableTermError,
    certified_levels,
    divide_by,
    in_target,
    mod_2I,
    mod_4,
    mod_8,
    split_base,
    split_step,
    substitute_markers,
    w_polynomial,
)

from reduction_cases import check_mod, run_cases

P = STANDARD.parse


def test_mod_4_rules():
    p = P("5*M0 + 3*a_1200*gt2 + 7*gt2*gt3 + 6*g2 + 9*M1*g2*g3")
    assert mod_4(p) == P("M0 + a_1200*gt2")


def test_mod_8_rules():
    p = P("13*M0 + 7*gt2 + 3*gt2*gt3 + 3*g2 + 5*gt2^3")
    assert mod_8(p) == P("5*M0 + 3*gt2 + gt2*gt3 + 3*g2")


def test_mod_2I_rules():
    p = P("13*M0 + 3*p2 + 5*p2*p3")
    assert mod_2I(p) == P("5*M0 + p2")


def test_marker_kinds_are_checked():
    with pytest.raises(ContractViolation):
        mod_4(P("p2"))
    with pytest.raises(ContractViolation):
        mod_2I(P("gt2"))


def test_containment_table():
    assert certified_levels(MarkerProfile(0, 0, 0), 0) == (0, -2)
    assert certified_levels(MarkerProfile(1, 0, 0), 0) == (1, 0)
    assert certified_levels(MarkerProfile(2, 0, 0), 0) == (2, 1)
    assert certified_levels(MarkerProfile(0, 1, 0), 0) == (1, -1)
    assert certified_levels(MarkerProfile(1, 0, 0), -1) == (0, -1)


@pytest.mark.parametrize("op", ["mod_2I", "mod_4", "mod_8", "split_M", "split_g"])
def test_soundness_by_substitution(op):
    passed, attempted = run_cases(op, 150, seed=hash(op) % 1000)
    assert attempted == 150 and passed == attempted


def test_checker_detects_a_wrong_reduction():
    # p - mod_4(p) is certified in 4R but usually not in 8R
    rng = random.Random(4)
    misses = 0
    for _ in range(50):
        p = P("5*M0 + gt2 + 5*g2*M1")
        if not in_target(substitute_markers(p - mod_4(p), rng), "8R"):
            misses += 1
    assert misses > 0


def test_split_step_m_role():
    q = P("2*M0 + 6*M1 + a_1200*gt2 + 4*N0 + 2*gt2*gt3")
    prim, rem = split_step(q, "M")
    assert prim == P("M0 + M1 + 1/2*a_1200*gt2")
    assert rem == P("2*M1 + 2*N0 + gt2*gt3")


def test_split_step_rejects_uncertifiable_terms():
    with pytest.raises(UncertifiableTermError) as exc:
        split_step(P("g2"), "M")
    assert exc.value.terms
    with pytest.raises(UncertifiableTermError):
        split_step(P("3*gt2"), "g")


def test_split_base_roles():
    q = P("6*X^2 + 14*X*Y + 16*Y^2")
    prim, rem = split_base(q, "M")
    assert prim == P("X^2 + X*Y") and (prim + rem.scale(2)).scale(2) == q
    prim, rem = split_base(q, "g")
    assert prim == P("3*X^2 + 3*X*Y") and (prim + rem.scale(2)).scale(2) == q


def test_divide_by_w():
    w = w_polynomial()
    f = P("a_1200*M0 + 3*a_1101")
    quo, rem = divide_by(w * f + P("M1"), w)
    assert quo == f and rem == P("M1")


def test_in_target_examples():
    w = w_polynomial()
    two = STANDARD.constant(2)
    assert not in_target(two, "1I")
    assert in_target(w.scale(2), "1I")
    assert in_target(STANDARD.constant(4), "1I")
    assert in_target(w.scale(4), "2I")
    assert not in_target(STANDARD.constant(4), "2I")
    assert in_target(P("8*M0 + 4*a_2001*a_0210 + 4*a_1110*a_1101"), "2I")
    assert not in_target(P("4*a_2001*a_0210"), "2I")


def test_seeded_mod_checks_are_deterministic():
    a = [check_mod(random.Random(9), "mod_8") for _ in range(3)]
    assert a == [True, True, True]
