from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blancert.polyring import (
    STANDARD,
    Dyadic,
    PolyError,
    PolynomialSyntaxError,
    Ring,
    RingMismatchError,
    UnknownVariableError,
    Variable,
    VarKind,
)

from oracles import as_dense, dense_add, dense_eval, dense_mul

SMALL = Ring([Variable("a_2001", VarKind.PARAMETER), Variable("x0", VarKind.COORDINATE),
              Variable("M0", VarKind.BOOKKEEPING)])


def random_dense(rng, nvars=3, nterms=4, maxdeg=3, halves=True):
    out = {}
    for _ in range(rng.randint(0, nterms)):
        k = tuple(rng.randint(0, maxdeg) for _ in range(nvars))
        c = Fraction(rng.randint(-9, 9), 2 ** rng.randint(0, 2) if halves else 1)
        out[k] = out.get(k, Fraction(0)) + c
    return {k: v for k, v in out.items() if v != 0}


def test_dyadic_normalization():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(6, 3).numerator == 3 and Dyadic(6, 3).exponent == 2
    assert Dyadic(0, 5).exponent == 0
    assert Dyadic.coerce(Fraction(3, 8)) == Dyadic(3, 3)
    with pytest.raises(PolyError):
        Dyadic.coerce(Fraction(1, 3))


def test_dyadic_valuation():
    assert Dyadic(12).valuation() == 2
    assert Dyadic(1, 1).valuation() == -1
    assert Dyadic(3, 2).valuation() == -2


def test_sparse_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(2000):
        a, b = random_dense(rng), random_dense(rng)
        pa, pb = SMALL.from_terms(a), SMALL.from_terms(b)
        assert as_dense(pa) == a
        assert as_dense(pa + pb) == dense_add(a, b)
        assert as_dense(pa * pb) == dense_mul(a, b)
        assert as_dense(pa - pa) == {}


def test_evaluate_matches_dense():
    rng = random.Random(3)
    for _ in range(200):
        a = random_dense(rng)
        pt = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(3)]
        assert SMALL.from_terms(a).evaluate(dict(zip(("a_2001", "x0", "M0"), pt))) == dense_eval(a, pt)


def test_terms_are_in_graded_order():
    p = STANDARD.parse("M0 + M1^2 + a_1200*M0^2 + 3")
    degs = [sum(e) for e, _ in p.terms()]
    assert degs == sorted(degs, reverse=True)


def test_format_examples():
    p = STANDARD.parse("2*a_1200*M0^2 - M1")
    assert p.format() == "2*a_1200*M0^2 - M1"
    assert STANDARD.parse("1/2*a_1110*gt2").format() == "1/2*a_1110*gt2"
    assert STANDARD.parse("3/2^2*M0").format() == "3/4*M0"
    assert STANDARD.zero().format() == "0"


names = st.sampled_from(["a_2001", "a_1200", "M0", "M1", "gt2", "X", "Y"])
monomials = st.lists(st.tuples(names, st.integers(1, 4)), max_size=3)
coeffs = st.tuples(st.integers(-50, 50), st.integers(0, 3))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(coeffs, monomials), max_size=5))
def test_parse_format_roundtrip(terms):
    p = STANDARD.zero()
    for (n, e), mono in terms:
        t = STANDARD.constant(Dyadic(n, e))
        for name, k in mono:
            t = t * STANDARD.gen(name) ** k
        p = p + t
    assert STANDARD.parse(p.format()) == p


def test_parse_errors_carry_position():
    with pytest.raises(PolynomialSyntaxError) as exc:
        STANDARD.parse("M0 + * M1")
    assert exc.value.position == 5
    with pytest.raises(UnknownVariableError):
        STANDARD.parse("M0 + zz")
    with pytest.raises(PolyError):
        STANDARD.parse("1/3*M0")


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        SMALL.gen("M0") + STANDARD.gen("M0")


def test_derivative_and_substitute():
    p = STANDARD.parse("a_1200*x0*x1^2 + 3*x1*x3")
    assert p.derivative("x1") == STANDARD.parse("2*a_1200*x0*x1 + 3*x3")
    q = p.substitute({"x1": STANDARD.parse("X + Y"), "x3": 0})
    assert q == STANDARD.parse("a_1200*x0*X^2 + 2*a_1200*x0*X*Y + a_1200*x0*Y^2")


def test_degree_queries():
    p = STANDARD.parse("M0^3*M1 + M1^4*gt2 + a_1101^7")
    assert p.total_degree() == 7
    assert p.degree_in("M1") == 4
    assert p.leading_part_in("M1") == STANDARD.parse("M1^4*gt2")
    assert p.weighted_degree({"M0": 2, "M1": 3, "gt2": 1}) == 13
    assert p.coefficients_in("M1")[1] == STANDARD.parse("M0^3")


def test_half_and_scale():
    p = STANDARD.parse("3*M0 + 2*M1")
    assert p.half() == STANDARD.parse("3/2*M0 + M1")
    assert p.half().denominator_exponent == 1
    assert p.scale(Fraction(1, 4)).scale(4) == p


def test_power_and_equality_hash():
    x = STANDARD.parse("M0 + 2*N0")
    assert x ** 3 == x * x * x
    assert hash(x ** 2) == hash(x * x)
    assert x ** 0 == STANDARD.one()
