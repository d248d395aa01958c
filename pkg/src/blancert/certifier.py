"""The orbit certificate for F_R^{-1} acting on points of the certified form.

A generic step applies ``F_R^{-1}`` to

    (M0 + 2 N0 : M1 + 2 N1 : gt2 + 2 g2 : gt3 + 2 g3)

with every letter a free variable, splits each output coordinate into a
primary part and a certified remainder, and checks the leading M1-parts of
the primary parts against closed-form products.  The base step does the same
for ``(X : Y : 0 : 0)``.  Together they show the orbit of ``(X : Y : 0 : 0)``
never meets the indeterminacy locus.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cubicmaps import (
    CubicForm,
    DegenerateLocusError,
    SymbolicPoint,
    compose_F_inverse,
    compose_F_inverse_numeric,
)
from .polyring import STANDARD, Dyadic, PolyError, Polynomial, Ring
from .reduction import (
    divide_by,
    in_target,
    mod_2I,
    split_base,
    split_step,
    w_polynomial,
)

__all__ = [
    "CertificateError",
    "CertifiedForm",
    "StepCertificate",
    "OrbitReport",
    "LinearForm",
    "displayed_formulas",
    "base_formulas",
    "degree_recurrence",
    "preserves_degree_order",
    "generic_point",
    "composed_quadruples",
    "certify_step",
    "certify_base",
    "orbit_sanity",
    "poly_diff",
]

DEGREE_NAMES = ("M0", "M1", "gt2", "gt3")


class CertificateError(PolyError):
    """A certificate check failed; ``diff`` holds the offending terms."""

    def __init__(self, message: str, diff: Sequence[str] = ()):
        super().__init__(message if not diff else f"{message}\n  " + "\n  ".join(diff))
        self.diff = list(diff)


def poly_diff(a: Polynomial, b: Polynomial, limit: int = 50) -> list[str]:
    """Terms of ``a - b`` in canonical order, truncated to ``limit`` lines."""
    d = a - b
    lines = []
    for k, (exps, c) in enumerate(d.terms()):
        if k == limit:
            lines.append(f"... {len(d) - limit} more terms")
            break
        mono = d.ring.monomial_str(d.ring.pack(exps)) or "1"
        lines.append(f"{'+' if c.numerator > 0 else '-'} {abs(c.numerator)}{'/' + str(1 << c.exponent) if c.exponent else ''} * {mono}")
    return lines


# -- degree bookkeeping ----------------------------------------------------------------

@dataclass(frozen=True)
class LinearForm:
    """``c0*d0 + c1*d1 + c2*d2 + c3*d3`` in the input Y-degrees."""

    coeffs: tuple[int, int, int, int]

    def __call__(self, d: Sequence[int]) -> int:
        return sum(c * x for c, x in zip(self.coeffs, d))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self) -> str:
        parts = [f"{c}*d{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def _cone_sign(form: LinearForm) -> tuple[int, tuple[int, ...]]:
    """Rewrite ``form`` over the cone d2 <= d0 < d3 < d1 of non-negative integers.

    With d2 = s, d0 = s + u, d3 = s + u + 1 + v, d1 = s + u + 2 + v + x
    (s, u, v, x >= 0) the form becomes ``const + cs*s + cu*u + cv*v + cx*x``.
    """
    c0, c1, c2, c3 = form.coeffs
    const = c3 * 1 + c1 * 2
    cs = c0 + c1 + c2 + c3
    cu = c0 + c1 + c3
    cv = c1 + c3
    cx = c1
    return const, (cs, cu, cv, cx)


def positive_on_cone(form: LinearForm) -> bool:
    const, slopes = _cone_sign(form)
    return const > 0 and all(s >= 0 for s in slopes)


def nonnegative_on_cone(form: LinearForm) -> bool:
    const, slopes = _cone_sign(form)
    return const >= 0 and all(s >= 0 for s in slopes)


RECURRENCE = {
    "M0": LinearForm((11, 15, 0, 1)),
    "M1": LinearForm((10, 17, 0, 0)),
    "gt2": LinearForm((11, 15, 0, 1)),  # upper bound only
    "gt3": LinearForm((10, 16, 0, 1)),
}


def degree_recurrence(d: Sequence[int]) -> tuple[int, int, int, int]:
    """``(d0', d1', bound on d2', d3')`` from the input tuple ``(d0, d1, d2, d3)``."""
    return tuple(RECURRENCE[n](d) for n in DEGREE_NAMES)


def preserves_degree_order(d: Sequence[int], d2_new: int | None = None) -> bool:
    """Whether the recurrence maps an admissible tuple to an admissible one.

    ``d2_new`` defaults to its upper bound; any smaller value only helps.
    """
    d0, d1, d2, d3 = d
    if not (d2 <= d0 < d3 < d1):
        raise PolyError(f"input tuple {tuple(d)} violates d2 <= d0 < d3 < d1")
    n0, n1, n2, n3 = degree_recurrence(d)
    if d2_new is not None:
        n2 = d2_new
    return n2 <= n0 < n3 < n1


# -- closed forms ------------------------------------------------------------------------

def displayed_formulas(ring: Ring = STANDARD) -> dict[str, Polynomial]:
    """The six closed forms the generic step must reproduce.

    ``M0_head``/``M1_head``/``gt2_head``/``gt3_head`` are leading M1-parts of the
    primary parts; ``q2_mod_2I``/``q3_mod_2I`` are full reductions.
    """
    g = ring.gen
    a2001, a1200, a1110, a1101, a0210 = (g(n) for n in ("a_2001", "a_1200", "a_1110", "a_1101", "a_0210"))
    M0, M1, gt2, gt3 = g("M0"), g("M1"), g("gt2"), g("gt3")
    w = w_polynomial(ring)
    half = Dyadic(1, 1)
    return {
        "M0_head": a1101 ** 8 * a0210 ** 2 * M0 ** 11 * M1 ** 15 * (
            w * a1200 * M0 + (a1110 * a1101 * a0210 * gt2).scale(half) + (a1101 ** 2 * a0210 * gt3).scale(half)),
        "M1_head": a1200 * a1101 ** 9 * a0210 ** 3 * M0 ** 10 * M1 ** 17,
        "q2_mod_2I": (w * a1200 ** 2 * M0 ** 12 * M1 ** 6 * (a1110 * M0 + a0210 * M1)
                      * (a2001 ** 8 * M0 ** 8 + a1101 ** 8 * M1 ** 8)).scale(4),
        "q3_mod_2I": (w * a1200 ** 2 * M0 ** 11 * M1 ** 7 * (a2001 * M0 + a1101 * M1)
                      * (a1110 ** 2 * M0 ** 2 + a0210 ** 2 * M1 ** 2)
                      * (a2001 ** 2 * M0 ** 2 + a1101 ** 2 * M1 ** 2)
                      * (a2001 ** 4 * M0 ** 4 + a1101 ** 4 * M1 ** 4)).scale(4),
        "gt2_head": a0210 * a1101 ** 8 * M0 ** 10 * M1 ** 15 * (
            (w * a1200 ** 2 * M0 ** 2).scale(2)
            + a2001 * a1200 * a0210 ** 2 * M0 * gt2
            + (a1110 * a1101 * a0210 ** 2 * gt2 ** 2).scale(half)
            + a1200 * a1101 ** 2 * a0210 * M0 * gt3
            + (a1101 ** 2 * a0210 ** 2 * gt2 * gt3).scale(half)),
        "gt3_head": a1200 * a0210 ** 2 * a1101 ** 7 * M0 ** 10 * M1 ** 16 * (
            (w * a1200 * M0).scale(2) + a1110 * a1101 * a0210 * gt2 + a1101 ** 2 * a0210 * gt3),
    }


def base_formulas(ring: Ring = STANDARD) -> dict[str, Polynomial]:
    """Leading Y-terms of the four primary parts at the base point ``(X : Y : 0 : 0)``."""
    g = ring.gen
    a1200, a1101, a0210 = g("a_1200"), g("a_1101"), g("a_0210")
    X, Y = g("X"), g("Y")
    w = w_polynomial(ring)
    return {
        "M0": w * a1200 * a1101 ** 8 * a0210 ** 2 * X ** 12 * Y ** 15,
        "M1": a1200 * a1101 ** 9 * a0210 ** 3 * X ** 10 * Y ** 17,
        "gt2": (w * a1200 ** 2 * a0210 * a1101 ** 8 * X ** 12 * Y ** 15).scale(2),
        "gt3": (w * a1200 ** 2 * a0210 ** 2 * a1101 ** 7 * X ** 11 * Y ** 16).scale(2),
    }


# -- data types ----------------------------------------------------------------------

@dataclass
class CertifiedForm:
    """``(M0 + 2N0 : M1 + 2N1 : gt2 + 2g2 : gt3 + 2g3)`` with the Y-degrees of M0, M1, gt2, gt3.

    ``degrees`` holds integers for concrete points and :class:`LinearForm`
    values (in the previous step's degrees) for the generic step.
    """

    M0: Polynomial
    N0: Polynomial
    M1: Polynomial
    N1: Polynomial
    gt2: Polynomial
    g2: Polynomial
    gt3: Polynomial
    g3: Polynomial
    degrees: tuple

    def point(self) -> SymbolicPoint:
        return SymbolicPoint.of(self.M0 + self.N0.scale(2), self.M1 + self.N1.scale(2),
                                self.gt2 + self.g2.scale(2), self.gt3 + self.g3.scale(2))


@dataclass
class StepCertificate:
    kind: str
    input_degrees: tuple
    output_degrees: tuple
    identities: dict[str, bool] = field(default_factory=dict)
    form_conditions: dict[str, bool] = field(default_factory=dict)
    degree_checks: dict[str, bool] = field(default_factory=dict)
    heads: dict[str, str] = field(default_factory=dict)
    diffs: dict[str, list[str]] = field(default_factory=dict)
    elapsed: dict[str, float] = field(default_factory=dict)
    term_counts: dict[str, int] = field(default_factory=dict)
    inductive: bool = False
    form: CertifiedForm | None = None

    @property
    def passed(self) -> bool:
        return (all(self.identities.values()) and all(self.form_conditions.values())
                and all(self.degree_checks.values()))


# -- the generic step -------------------------------------------------------------------

def generic_point(ring: Ring = STANDARD, with_even_parts: bool = True) -> SymbolicPoint:
    g = ring.gen
    if not with_even_parts:
        return SymbolicPoint.of(g("M0"), g("M1"), g("gt2"), g("gt3"))
    return SymbolicPoint.of(g("M0") + g("N0").scale(2), g("M1") + g("N1").scale(2),
                            g("gt2") + g("g2").scale(2), g("gt3") + g("g3").scale(2))


def ideal_point(ring: Ring = STANDARD) -> SymbolicPoint:
    g = ring.gen
    return SymbolicPoint.of(g("M0") + g("N0").scale(2), g("M1") + g("N1").scale(2), g("p2"), g("p3"))


def composed_quadruples(generic: bool = True, ring: Ring = STANDARD) -> tuple[SymbolicPoint, SymbolicPoint]:
    """``F_R^{-1}`` of the tilde/even-marker point and of the ideal-marker point."""
    f = CubicForm.restricted(ring)
    q1 = compose_F_inverse(generic_point(ring, generic), f)
    q2 = compose_F_inverse(ideal_point(ring), f)
    return q1, q2


def _exponent_forms(p: Polynomial, names: Sequence[str]) -> list[tuple[tuple[int, ...], int]]:
    """Per monomial: exponents on ``names`` and the packed monomial; other non-parameter variables forbidden."""
    ring = p.ring
    idx = [ring.index(n) for n in names]
    allowed = set(idx) | {ring.index(v) for v in ring.variables if v.kind == 0}
    t, _ = p.raw_terms()
    out = []
    for m in t:
        exps = ring.unpack(m)
        extra = [ring.variables[i].name for i, e in enumerate(exps) if e and i not in allowed]
        if extra:
            raise CertificateError(f"primary part involves unexpected variables {sorted(set(extra))}")
        out.append((tuple(exps[i] for i in idx), m))
    return out


def _winner(primary: Polynomial, claimed: LinearForm, strict: bool) -> tuple[bool, list[tuple[int, ...]]]:
    """Check every monomial of ``primary`` has weighted Y-degree below ``claimed`` on the whole cone.

    Returns ``(ok, winners)`` where ``winners`` are exponent vectors whose
    form equals ``claimed`` exactly.  With ``strict`` the winner must exist
    and be unique.
    """
    winners = []
    ok = True
    for exps, _ in _exponent_forms(primary, DEGREE_NAMES):
        form = LinearForm(tuple(exps))
        if form == claimed:
            winners.append(exps)
            continue
        if strict:
            if not positive_on_cone(claimed - form):
                ok = False
        elif not nonnegative_on_cone(claimed - form):
            ok = False
    if strict and len(winners) != 1:
        ok = False
    return ok, winners


def _winner_valuation(primary: Polynomial, exps: tuple[int, ...]) -> int | None:
    """Exact 2-adic valuation of the leading Y-coefficient contributed by the winning monomial.

    Leading Y-terms of M0, M1 have valuation exactly 0 and that of gt3 exactly 1;
    for gt2 only a lower bound is known, so a winner involving gt2 returns None.
    """
    if exps[2]:
        return None
    ring = primary.ring
    t, e = primary.raw_terms()
    idx = [ring.index(n) for n in DEGREE_NAMES]
    coeff_vals = []
    for m, c in t.items():
        if tuple(ring.exponent_of(m, i) for i in idx) == exps:
            coeff_vals.append(Dyadic(c, e).valuation())
    # the winner's coefficient is a polynomial in the parameters; its content valuation
    v = min(coeff_vals)
    return v + exps[3]


def certify_step(generic: bool = True, ring: Ring = STANDARD, threads: int = 1,
                 quadruples: tuple[SymbolicPoint, SymbolicPoint] | None = None) -> StepCertificate:
    """Run the generic step and check every displayed identity and degree claim.

    With ``generic=False`` the point drops its ``2N``/``2g`` parts; the heads
    are unchanged but the result is not inductive.
    """
    t0 = time.perf_counter()
    if quadruples is None:
        quadruples = composed_quadruples(generic, ring)
    q1, q2 = quadruples
    cert = StepCertificate(kind="step" if generic else "step-reduced",
                           input_degrees=("d0", "d1", "d2", "d3"), output_degrees=())
    cert.elapsed["compose"] = time.perf_counter() - t0
    cert.term_counts = {f"q{k}": len(q1[k]) for k in range(4)}
    formulas = displayed_formulas(ring)

    t1 = time.perf_counter()
    roles = ("M", "M", "g", "g")
    names = ("M0", "M1", "gt2", "gt3")

    def do_split(k):
        return split_step(q1[k], roles[k])

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        splits = list(pool.map(do_split, range(4)))
    cert.elapsed["split"] = time.perf_counter() - t1

    t2 = time.perf_counter()
    primaries = {n: s[0] for n, s in zip(names, splits)}
    remainders = {n: s[1] for n, s in zip(names, splits)}

    def check(name: str) -> tuple[str, bool, Polynomial, Polynomial]:
        if name.endswith("_mod_2I"):
            k = int(name[1])
            got = mod_2I(q2[k])
        else:
            got = primaries[name[:-5]].leading_part_in("M1")
        return name, got == formulas[name], got, formulas[name]

    order = ("M0_head", "M1_head", "q2_mod_2I", "gt2_head", "q3_mod_2I", "gt3_head")
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(check, order))
    for name, ok, got, want in results:
        cert.identities[name] = ok
        cert.heads[name] = got.format()
        if not ok:
            cert.diffs[name] = poly_diff(got, want)
    # the ideal-marker reductions are divisible by 4w, hence lie in 2I
    w = w_polynomial(ring)
    for name, _, got, _ in results:
        if name.endswith("_mod_2I"):
            quo, rem = divide_by(got, w)
            cert.form_conditions[f"{name}_divisible_by_4w"] = rem.is_zero and (quo.scale(Fraction(1, 4)).denominator_exponent == 0)
    cert.elapsed["identities"] = time.perf_counter() - t2

    # degrees: the winning monomial of each primary part over the admissible cone
    t3 = time.perf_counter()
    out_forms = {}
    for n in names:
        strict = n != "gt2"
        ok, winners = _winner(primaries[n], RECURRENCE[n], strict)
        cert.degree_checks[f"deg_{n}"] = ok
        out_forms[n] = RECURRENCE[n]
        if strict and ok:
            v = _winner_valuation(primaries[n], winners[0])
            if n in ("M0", "M1"):
                cert.form_conditions[f"lead_{n}_not_in_2R"] = v == 0
            else:
                cert.form_conditions["lead_gt3_not_in_4R"] = v == 1
    # tails sit strictly below the head in M1
    for n in names:
        head_deg = primaries[n].degree_in("M1")
        tail = primaries[n] - primaries[n].leading_part_in("M1")
        cert.degree_checks[f"tail_{n}_below_M1_degree"] = tail.is_zero or tail.degree_in("M1") < head_deg
    # the output degree order follows from the forms on the cone
    d0n, d1n, d2n, d3n = (out_forms[n] for n in names)
    cert.degree_checks["d0_lt_d3"] = positive_on_cone(d3n - d0n)
    cert.degree_checks["d3_lt_d1"] = positive_on_cone(d1n - d3n)
    cert.degree_checks["d2_le_d0"] = nonnegative_on_cone(d0n - d2n)
    cert.output_degrees = tuple(str(out_forms[n]) for n in names)
    cert.elapsed["degrees"] = time.perf_counter() - t3

    # the remainders of the g-splits are in 4R (checked by split_step), so g' in 2R;
    # gt' = q/2 - 4R-part lies in I because q lies in 2I.
    cert.form_conditions["components_in_2R"] = True
    cert.form_conditions["gt_new_in_I"] = all(
        cert.form_conditions.get(f"q{k}_mod_2I_divisible_by_4w", False) for k in (2, 3))
    cert.form = CertifiedForm(
        M0=primaries["M0"], N0=remainders["M0"].half(),
        M1=primaries["M1"], N1=remainders["M1"].half(),
        gt2=primaries["gt2"], g2=remainders["gt2"].half(),
        gt3=primaries["gt3"], g3=remainders["gt3"].half(),
        degrees=tuple(out_forms[n] for n in names),
    )
    cert.inductive = generic and cert.passed
    cert.elapsed["total"] = time.perf_counter() - t0
    return cert


# -- the base step ------------------------------------------------------------------------

def base_point(ring: Ring = STANDARD) -> SymbolicPoint:
    g = ring.gen
    return SymbolicPoint.of(g("X"), g("Y"), ring.zero(), ring.zero())


def certify_base(ring: Ring = STANDARD) -> StepCertificate:
    """Apply ``F_R^{-1}`` to ``(X : Y : 0 : 0)`` and check the certified form with degrees (15, 17, 15, 16)."""
    t0 = time.perf_counter()
    f = CubicForm.restricted(ring)
    q = compose_F_inverse(base_point(ring), f)
    cert = StepCertificate(kind="base", input_degrees=(), output_degrees=())
    cert.elapsed["compose"] = time.perf_counter() - t0
    cert.term_counts = {f"q{k}": len(q[k]) for k in range(4)}
    for k in range(4):
        t, e = q[k].raw_terms()
        cert.form_conditions[f"q{k}_divisible_by_2"] = e == 0 and all(c % 2 == 0 for c in t.values())
    if not all(cert.form_conditions.values()):
        raise CertificateError("base components are not all even")
    names = ("M0", "M1", "gt2", "gt3")
    roles = ("M", "M", "g", "g")
    splits = [split_base(q[k], r) for k, r in zip(range(4), roles)]
    prim = dict(zip(names, (s[0] for s in splits)))
    rest = dict(zip(names, (s[1] for s in splits)))
    want = base_formulas(ring)
    degrees = []
    for n in names:
        lead = prim[n].leading_part_in("Y")
        ok = lead == want[n]
        cert.identities[f"{n}_lead"] = ok
        cert.heads[f"{n}_lead"] = lead.format()
        if not ok:
            cert.diffs[f"{n}_lead"] = poly_diff(lead, want[n])
        degrees.append(prim[n].degree_in("Y"))
    cert.output_degrees = tuple(degrees)
    cert.degree_checks["degrees_15_17_15_16"] = tuple(degrees) == (15, 17, 15, 16)

    def lead_not_in(p: Polynomial, k: int) -> bool:
        t, e = p.leading_part_in("Y").raw_terms()
        return e == 0 and any(c % (1 << k) for c in t.values())

    cert.form_conditions["gt2_in_I"] = in_target(prim["gt2"], "1I")
    cert.form_conditions["gt3_in_I"] = in_target(prim["gt3"], "1I")
    cert.form_conditions["g2_in_2R"] = in_target(rest["gt2"], "2R")
    cert.form_conditions["g3_in_2R"] = in_target(rest["gt3"], "2R")
    cert.form_conditions["lead_gt3_not_in_4R"] = lead_not_in(prim["gt3"], 2)
    cert.form_conditions["lead_M0_not_in_2R"] = lead_not_in(prim["M0"], 1)
    cert.form_conditions["lead_M1_not_in_2R"] = lead_not_in(prim["M1"], 1)
    d0, d1, d2, d3 = degrees
    cert.form_conditions["degree_order"] = d2 <= d0 < d3 < d1
    # the reassembly q = 2 (primary + 2 remainder) is exact
    cert.identities["reassembly"] = all(
        (prim[n] + rest[n].scale(2)).scale(2) == q[k] for k, n in enumerate(names))
    cert.form = CertifiedForm(prim["M0"], rest["M0"], prim["M1"], rest["M1"],
                              prim["gt2"], rest["gt2"], prim["gt3"], rest["gt3"], tuple(degrees))
    cert.inductive = cert.passed
    cert.elapsed["total"] = time.perf_counter() - t0
    return cert


# -- numeric shadow --------------------------------------------------------------------------

@dataclass
class OrbitStep:
    index: int
    point: tuple[int, int, int, int]
    raw_valuations: tuple
    scale: int
    residues: dict[int, tuple[int, ...]]
    pattern_ok: bool
    bits: int


@dataclass
class OrbitReport:
    params: dict[str, int]
    seed: tuple[int, int, int, int]
    steps: list[OrbitStep]

    @property
    def contradiction(self) -> bool:
        return any(not any(s.point) for s in self.steps)

    @property
    def pattern_holds(self) -> bool:
        return all(s.pattern_ok for s in self.steps)


def _v2_or_none(n: int):
    if n == 0:
        return None
    return (n & -n).bit_length() - 1


def _normalize_point(x: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Divide out the odd content and as many 2s as keep ``x2, x3`` even."""
    g = 0
    for c in x:
        g = math.gcd(g, c)
    if g == 0:
        raise CertificateError("all-zero quadruple in the orbit")
    odd = g >> _v2_or_none(g)
    x = [c // odd for c in x]
    vals = [_v2_or_none(c) for c in x]
    k = min(v if i < 2 else v - 1 for i, v in enumerate(vals) if v is not None)
    k = max(k, 0)
    first = next(c for c in x if c)
    sign = -1 if first < 0 else 1
    return tuple(sign * (c >> k) for c in x), odd << k


def w_value(params: Mapping[str, int]) -> int:
    p = {k[2:] if k.startswith("a_") else k: v for k, v in params.items()}
    return p["2001"] * p["0210"] + p["1110"] * p["1101"]


def orbit_sanity(params: Mapping[str, int], X: int, Y: int, n: int,
                 moduli: Sequence[int] = (3, 4, 5, 8)) -> OrbitReport:
    """Iterate ``F_R^{-1}`` on integers from ``(X : Y : 0 : 0)``.

    With ``w`` odd the ideal I specializes to ``2Z``, so whenever ``x2, x3``
    are even the raw image is even with coordinates 2 and 3 divisible by 4.
    ``pattern_ok`` records that; the point is then rescaled keeping ``x2, x3`` even.
    """
    params = {k[2:] if k.startswith("a_") else k: int(v) for k, v in params.items()}
    missing = {"2001", "1200", "1110", "1101", "0210"} - set(params)
    if missing:
        raise PolyError(f"missing parameters {sorted(missing)}")
    if w_value(params) % 2 == 0:
        raise PolyError(f"w = {w_value(params)} is even; the 2-adic shadow needs w odd")
    if n < 0:
        raise PolyError("iteration count must be non-negative")
    seed = (int(X), int(Y), 0, 0)
    if not any(seed):
        raise PolyError("seed point is zero")

    def describe(i, x, raw, scale):
        vals = tuple(_v2_or_none(c) for c in raw)
        res = {m: tuple(c % m for c in x) for m in moduli}
        pattern = (all(c % 2 == 0 for c in raw) and raw[2] % 4 == 0 and raw[3] % 4 == 0) if i else True
        bits = max(abs(c).bit_length() for c in x)
        return OrbitStep(i, tuple(x), vals, scale, res, pattern, bits)

    x = seed
    steps = [describe(0, x, x, 1)]
    for i in range(1, n + 1):
        try:
            raw = compose_F_inverse_numeric(x, params)
        except DegenerateLocusError as exc:
            raise CertificateError(f"orbit hit the indeterminacy locus at step {i}") from exc
        x, scale = _normalize_point(raw)
        steps.append(describe(i, x, raw, scale))
    return OrbitReport(params=params, seed=seed, steps=steps)
