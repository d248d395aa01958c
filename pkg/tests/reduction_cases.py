"""Random instances for the reduction soundness checks.

Each checker returns True when, after replacing every marker by a random
element of its submodule, the dropped or remaining part lands in the
claimed target.
"""

from __future__ import annotations

import random

from blancert.polyring import STANDARD
from blancert.reduction import (
    UncertifiableTermError,
    in_target,
    mod_2I,
    mod_4,
    mod_8,
    random_marker_polynomial,
    split_step,
    substitute_markers,
)

BASE = ("a_2001", "a_1200", "a_1110", "a_1101", "a_0210", "M0", "M1")


def _poly(rng, markers, scale=1, **kw):
    return random_marker_polynomial(rng, STANDARD, markers, **kw).scale(scale)


def check_mod(rng, op: str) -> bool:
    if op == "mod_2I":
        p = _poly(rng, ("p2", "p3"), n_terms=6, max_deg=4)
        dropped = p - mod_2I(p)
        target = "2I"
    else:
        p = _poly(rng, ("gt2", "gt3", "g2", "g3"), n_terms=6, max_deg=4)
        red = mod_4(p) if op == "mod_4" else mod_8(p)
        dropped = p - red
        target = "4R" if op == "mod_4" else "8R"
    return in_target(substitute_markers(dropped, rng), target)


def _split_input(rng, role):
    g = STANDARD.gen
    q = _poly(rng, (), scale=2, n_terms=5, max_deg=3)
    for t in ("gt2", "gt3"):
        q = q + _poly(rng, (), scale=2 if role == "g" else 1, n_terms=2, max_deg=2) * g(t)
    for e in ("g2", "g3"):
        q = q + _poly(rng, (), scale=2, n_terms=2, max_deg=2) * g(e)
    q = q + _poly(rng, (), n_terms=2, max_deg=1) * g("gt2") * g("gt3")
    if role == "M":
        q = q + _poly(rng, (), scale=2, n_terms=2, max_deg=1) * g("gt2") * g("g3")
    return q


def check_split(rng, role: str) -> bool | None:
    """None when the random input is outside the split's domain."""
    q = _split_input(rng, role)
    try:
        prim, rem = split_step(q, role)
    except UncertifiableTermError:
        return None
    if (prim + rem).scale(2) != q:
        return False
    return in_target(substitute_markers(rem, rng), "2R" if role == "M" else "4R")


def run_cases(op: str, n: int, seed: int = 0) -> tuple[int, int]:
    """``(passed, attempted)`` over ``n`` in-domain instances."""
    rng = random.Random(seed)
    passed = attempted = 0
    tries = 0
    while attempted < n:
        tries += 1
        if tries > 20 * n:
            break
        if op.startswith("split_"):
            verdict = check_split(rng, op[-1])
            if verdict is None:
                continue
        else:
            verdict = check_mod(rng, op)
        attempted += 1
        passed += bool(verdict)
    return passed, attempted
