from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from blancert.certifier import RECURRENCE, LinearForm, base_formulas, preserves_degree_order
from blancert.cli import EXIT_OK, main
from blancert.cubicmaps import (
    DegenerateLocusError,
    involution_numeric,
    on_gamma,
    point_on_cubic,
    projectively_equal,
)
from blancert.lattice import (
    DivisorClass,
    NuBasis,
    PullbackMatrix,
    charpoly,
    dynamical_degrees,
    flop_negativity,
    flop_pushforward,
    flopped_class,
    flopped_out_class,
    pairing,
    phi_pullback,
    real_roots,
    sigma_pullback,
    theta1,
    theta_dot_L,
)
from blancert.polyring import Ring, Variable, VarKind

from conftest import ACCEPTANCE_LINES
from oracles import as_dense, dense_add, dense_mul
from reduction_cases import run_cases


def record(n: int, ok: bool, detail: str):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def _cli_json(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)["section"]


def test_criterion_1_step_identities(capsys):
    t = time.perf_counter()
    code, doc = _cli_json(capsys, "certify", "--mode", "step")
    elapsed = time.perf_counter() - t
    flags = doc["step"]["identities"]
    names = ("M0_head", "M1_head", "q2_mod_2I", "gt2_head", "q3_mod_2I", "gt3_head")
    ok = code == EXIT_OK and all(flags.get(n) for n in names) and len(flags) == 6 and elapsed <= 600
    record(1, ok, f"six exact identities {sorted(k for k, v in flags.items() if v)} in {elapsed:.1f}s")


def test_criterion_2_base_certificate(capsys):
    t = time.perf_counter()
    code, doc = _cli_json(capsys, "certify", "--mode", "base")
    elapsed = time.perf_counter() - t
    base = doc["base"]
    want = {f"{n}_lead": p.format() for n, p in base_formulas().items()}
    ok = (code == EXIT_OK and base["output_degrees"] == [15, 17, 15, 16]
          and all(base["heads"][k] == v for k, v in want.items()) and elapsed <= 60)
    record(2, ok, f"degrees {tuple(base['output_degrees'])}, four leading terms exact, {elapsed:.2f}s")


def test_criterion_3_degree_recurrences(step_certificate):
    forms = step_certificate.form.degrees
    exact = (forms[0] == LinearForm((11, 15, 0, 1)) and forms[1] == LinearForm((10, 17, 0, 0))
             and forms[3] == LinearForm((10, 16, 0, 1)))
    checks = all(step_certificate.degree_checks.values())
    rng = random.Random(2024)
    preserved = 0
    for _ in range(1000):
        d2 = rng.randint(0, 10 ** 6)
        d0 = d2 + rng.randint(0, 10 ** 6)
        d3 = d0 + 1 + rng.randint(0, 10 ** 6)
        d1 = d3 + 1 + rng.randint(0, 10 ** 6)
        preserved += preserves_degree_order((d0, d1, d2, d3)) and preserves_degree_order((d0, d1, d2, d3), d2_new=0)
    ok = exact and checks and preserved == 1000 and RECURRENCE["gt2"] == RECURRENCE["M0"]
    record(3, ok, f"recurrences exact, cone checks {checks}, degree order preserved on {preserved}/1000 tuples")


def test_criterion_4_lattice_spectrum():
    t = time.perf_counter()
    M = phi_pullback((1, 2, 3), 3)
    p = charpoly(M)
    l1, l2 = dynamical_degrees(M)
    roots = real_roots(p)
    lam, alpha = theta1(M)
    emb = NuBasis(3).embed(alpha)
    residual = max(abs(float(x - lam * y)) for x, y in zip((M @ emb).coords, emb.coords))
    elapsed = time.perf_counter() - t
    margin = Fraction(1, 10 ** 6)
    ok = (l1 > 1 + margin and abs(l1 - l2) < Fraction(1, 10 ** 9) and l1 * l1 - l2 > margin
          and any(abs(r - l1) < Fraction(1, 10 ** 12) for r in roots)
          and residual < 1e-9 and elapsed < 1.0)
    record(4, ok, f"lambda1 = {float(l1):.12f} = lambda2, residual {residual:.1e}, {elapsed:.3f}s")


def test_criterion_5_theta1():
    _, alpha = theta1(phi_pullback((1, 2, 3), 3))
    a = [float(x) for x in alpha]
    m = 1e-6
    tdl = theta_dot_L(alpha)
    closed = 2 * sum(alpha) - 3 * alpha[0] - alpha[1]
    ok = (a[0] - a[1] > m and a[1] - a[2] > m and a[2] > m and a[0] - a[1] - 2 * a[2] > m
          and tdl < -m and abs(tdl - closed) < Fraction(1, 10 ** 12))
    record(5, ok, f"alpha = ({a[0]:.6f}, {a[1]:.6f}, {a[2]:.6f}), theta.L = {float(tdl):.6f}")


def test_criterion_6_involutions():
    squares = all(sigma_pullback(i, 3) @ sigma_pullback(i, 3) == PullbackMatrix.identity(3) for i in (1, 2, 3))
    rng = random.Random(66)
    keys = ("2001", "1200", "1110", "1101", "0210")
    inv_points = fixed_points = 0
    while inv_points < 100:
        params = {k: rng.choice([-1, 1]) * rng.randint(1, 15) for k in keys}
        x = tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(4))
        if not any(x):
            continue
        try:
            ok_pt = all(projectively_equal(involution_numeric(i, involution_numeric(i, x, params), params), x)
                        for i in (1, 2, 3))
        except DegenerateLocusError:
            continue
        assert ok_pt
        inv_points += 1
    while fixed_points < 100:
        params = {k: rng.choice([-1, 1]) * rng.randint(1, 15) for k in keys}
        pt = point_on_cubic(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(-9, 9), params)
        if pt is None or not any(pt):
            continue
        for i in (1, 2, 3):
            if not on_gamma(i, pt, params):
                assert projectively_equal(involution_numeric(i, pt, params), pt)
        fixed_points += 1
    record(6, squares, f"pullbacks square to identity; {inv_points} involutive points, {fixed_points} cubic points fixed")


def test_criterion_7_reduction_soundness():
    results = {op: run_cases(op, 500, seed=7) for op in ("mod_2I", "mod_4", "mod_8", "split_M", "split_g")}
    ok = all(p == a == 500 for p, a in results.values())
    record(7, ok, ", ".join(f"{op} {p}/{a}" for op, (p, a) in results.items()))


def test_criterion_8_oracle_equivalence():
    ring = Ring([Variable(n, VarKind.BOOKKEEPING) for n in ("M0", "M1", "N0")])
    rng = random.Random(8)
    agree = 0
    for _ in range(10_000):
        def rand():
            out = {}
            for _ in range(rng.randint(0, 4)):
                k = tuple(rng.randint(0, 3) for _ in range(3))
                out[k] = out.get(k, Fraction(0)) + Fraction(rng.randint(-9, 9), 2 ** rng.randint(0, 2))
            return {k: v for k, v in out.items() if v}
        a, b = rand(), rand()
        pa, pb = ring.from_terms(a), ring.from_terms(b)
        agree += as_dense(pa + pb) == dense_add(a, b) and as_dense(pa * pb) == dense_mul(a, b)
    record(8, agree == 10_000, f"sparse add/multiply agree with the dense oracle on {agree}/10000 instances")


def test_criterion_9_flops():
    k = 3
    C = flopped_class(k)
    maps = flop_pushforward(C) == -flopped_out_class(C)
    rng = random.Random(9)
    flipped = 0
    while flipped < 100:
        D = DivisorClass(k, tuple(rng.randint(-10, 10) for _ in range(1 + 2 * k)))
        before = pairing(D, C)
        if before <= 0:
            continue
        b, after = flop_negativity(D)
        assert b == before and after == -before < 0
        flipped += 1
    record(9, maps and flipped == 100, f"f1 - f2 maps to -[C+]; sign flip on {flipped} random classes")


def test_criterion_10_report(full_reports):
    codes, texts = full_reports
    doc = json.loads(texts[0])
    ok = codes == [EXIT_OK, EXIT_OK] and texts[0] == texts[1] and doc["verdict"] == "certified"
    record(10, ok, f"verdict {doc['verdict']!r}, byte-identical across thread counts: {texts[0] == texts[1]}")
