"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from fractions import Fraction


def dense_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Fraction(0)) + v
    return {k: v for k, v in out.items() if v != 0}


def dense_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = out.get(k, Fraction(0)) + va * vb
    return {k: v for k, v in out.items() if v != 0}


def as_dense(p) -> dict:
    return {exps: c.to_fraction() for exps, c in p.terms()}


def dense_eval(a: dict, point) -> Fraction:
    total = Fraction(0)
    for k, v in a.items():
        term = v
        for x, e in zip(point, k):
            term *= Fraction(x) ** e
        total += term
    return total
