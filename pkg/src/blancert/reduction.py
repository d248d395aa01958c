"""Termwise 2-adic reductions modulo I = (4, 2w) and its relatives.

Marker variables stand for unspecified elements of fixed submodules of
R[X, Y], R = Z[a_2001, a_1200, a_1110, a_1101, a_0210]:

* tilde markers ``gt2, gt3`` are elements of I,
* even markers ``g2, g3`` are elements of 2R[X, Y],
* ideal markers ``p2, p3`` are elements of I.

Every decision below comes from one containment table (:func:`certified_levels`)
built from I ⊂ 2R, I^s ⊂ 2^s R, I^s ⊂ 2^(s-1) I (s >= 1) and 4R ⊂ I.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .polyring import (
    STANDARD,
    Dyadic,
    PolyError,
    Polynomial,
    Ring,
    VarKind,
)

__all__ = [
    "MarkerProfile",
    "ContractViolation",
    "UncertifiableTermError",
    "certified_levels",
    "marker_profile",
    "mod_2I",
    "mod_4",
    "mod_8",
    "split_step",
    "split_base",
    "w_polynomial",
    "divide_by",
    "in_target",
    "substitute_markers",
    "random_marker_polynomial",
]

_TILDE = (VarKind.MARKER_TILDE,)
_EVEN = (VarKind.MARKER_EVEN,)
_IDEAL = (VarKind.MARKER_IDEAL,)


class ContractViolation(PolyError):
    """Input outside the documented domain of a reduction."""


class UncertifiableTermError(PolyError):
    """A term whose (profile, coefficient) pair is outside the containment table."""

    def __init__(self, message: str, terms: list[str]):
        shown = "; ".join(terms[:10])
        more = f" (+{len(terms) - 10} more)" if len(terms) > 10 else ""
        super().__init__(f"{message}: {shown}{more}")
        self.terms = terms


@dataclass(frozen=True)
class MarkerProfile:
    tilde_degree: int = 0
    even_degree: int = 0
    ideal_degree: int = 0

    @property
    def total(self) -> int:
        return self.tilde_degree + self.even_degree + self.ideal_degree

    @property
    def ideal_like(self) -> int:
        """Degree in markers known to lie in I."""
        return self.tilde_degree + self.ideal_degree


class _ProfileReader:
    """Extracts marker profiles from packed monomials of one ring."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.tilde = [ring.index(v) for v in ring.vars_of_kind(*_TILDE)]
        self.even = [ring.index(v) for v in ring.vars_of_kind(*_EVEN)]
        self.ideal = [ring.index(v) for v in ring.vars_of_kind(*_IDEAL)]

    def __call__(self, m: int) -> MarkerProfile:
        e = self.ring.exponent_of
        return MarkerProfile(
            sum(e(m, i) for i in self.tilde),
            sum(e(m, i) for i in self.even),
            sum(e(m, i) for i in self.ideal),
        )


def marker_profile(p: Polynomial, monomial) -> MarkerProfile:
    m = monomial if isinstance(monomial, int) else p.ring.pack(monomial)
    return _ProfileReader(p.ring)(m)


def certified_levels(profile: MarkerProfile, valuation: int) -> tuple[int, int | None]:
    """Certified containments of ``c * m`` where ``c`` has 2-adic valuation ``valuation``.

    Returns ``(r, i)``: the term lies in ``2^r R[X,Y]``, and in ``2^i I`` when
    ``i`` is not None.  Negative levels are meaningful (``2^-1 R``), and
    ``i`` is None when no I-containment follows from the table.
    """
    a = profile.ideal_like
    t = profile.even_degree
    level_r = valuation + a + t
    if a >= 1:
        level_i = valuation + t + a - 1
    else:
        level_i = valuation + t - 2
    return level_r, level_i


def _dyadic_mod(c: Dyadic, j: int) -> Dyadic:
    """Residue of ``c`` modulo ``2^j`` (``j`` may be negative), in ``[0, 2^j)``."""
    e = max(c.exponent, -j, 0)
    num = c.numerator << (e - c.exponent)
    mod = 1 << (j + e)
    return Dyadic(num % mod, e)


def _reduce(p: Polynomial, modulus_exp: Callable[[MarkerProfile], int]) -> Polynomial:
    """Replace each coefficient by its residue modulo ``2^modulus_exp(profile)``."""
    ring = p.ring
    prof = _ProfileReader(ring)
    t, e = p.raw_terms()
    if e:
        raise ContractViolation("reduction expects integer coefficients")
    out = {}
    for m, c in t.items():
        j = modulus_exp(prof(m))
        if j <= 0:
            continue
        r = c % (1 << j)
        if r:
            out[m] = r
    return Polynomial._normalized(ring, out, 0)


def _require_kinds(p: Polynomial, allowed: Iterable[VarKind], name: str):
    bad = [v.name for v in p.variables_used() if v.kind not in allowed]
    if bad:
        raise ContractViolation(f"{name} does not accept variables {bad}")


_BASE_KINDS = (VarKind.PARAMETER, VarKind.COORDINATE, VarKind.BOOKKEEPING)


def mod_2I(p: Polynomial) -> Polynomial:
    """Drop everything certified in 2I; ideal markers only.

    Per monomial with ideal-marker degree d: d >= 2 dropped, d = 1 coefficient
    mod 2, d = 0 coefficient mod 8.
    """
    _require_kinds(p, _BASE_KINDS + _IDEAL, "mod_2I")

    def j(profile: MarkerProfile) -> int:
        # smallest j with 2^j * m certified in 2I
        _, li = certified_levels(profile, 0)
        return max(0, 1 - li)

    return _reduce(p, j)


def _mod_power(p: Polynomial, k: int, name: str) -> Polynomial:
    _require_kinds(p, _BASE_KINDS + _TILDE + _EVEN, name)

    def j(profile: MarkerProfile) -> int:
        lr, _ = certified_levels(profile, 0)
        return max(0, k - lr)

    return _reduce(p, j)


def mod_4(p: Polynomial) -> Polynomial:
    """Drop everything certified in 4R[X,Y]; s = marker degree, s >= 2 dropped, s = 1 mod 2, s = 0 mod 4."""
    return _mod_power(p, 2, "mod_4")


def mod_8(p: Polynomial) -> Polynomial:
    """Drop everything certified in 8R[X,Y]; s >= 3 dropped, then mod 2, 4, 8 for s = 2, 1, 0."""
    return _mod_power(p, 3, "mod_8")


# kept (profile, residue) pairs allowed in the primary part of each split
def _m_split_allowed(profile: MarkerProfile, r: Dyadic) -> bool:
    if profile.total == 0:
        return r == 1
    return (profile.tilde_degree == 1 and profile.even_degree == 0 and profile.ideal_degree == 0
            and r == Dyadic(1, 1))


def _g_split_allowed(profile: MarkerProfile, r: Dyadic) -> bool:
    s = profile.total
    if s == 0:
        return r.is_integer
    if s == 1:
        return r == 1
    if s == 2:
        return r == Dyadic(1, 1) and profile.even_degree == 0
    return False


_ROLES = {"M": (1, _m_split_allowed), "g": (2, _g_split_allowed)}


def _role(role: str) -> str:
    key = {"M": "M", "M-split": "M", "m": "M", "g": "g", "g-split": "g", "G": "g"}.get(role)
    if key is None:
        raise ContractViolation(f"unknown split role {role!r}")
    return key


def split_step(q: Polynomial, role: str) -> tuple[Polynomial, Polynomial]:
    """Split ``q/2`` into a primary part and a remainder certified in ``2R`` (M-split) or ``4R`` (g-split).

    The primary part keeps, per monomial, the residue of the coefficient of
    ``q/2`` modulo the smallest power of two that certifies the rest.  Any
    kept residue outside the allowed table raises :class:`UncertifiableTermError`.
    """
    target, allowed = _ROLES[_role(role)]
    ring = q.ring
    _require_kinds(q, _BASE_KINDS + _TILDE + _EVEN, "split_step")
    if q.denominator_exponent:
        raise ContractViolation("split_step expects q with integer coefficients")
    prof = _ProfileReader(ring)
    half = q.half()
    t, e = half.raw_terms()
    primary: dict[int, Dyadic] = {}
    bad: list[str] = []
    for m, c in t.items():
        d = Dyadic(c, e)
        if d.exponent > 1:
            bad.append(f"{d}*{ring.monomial_str(m)} (quarter coefficient)")
            continue
        profile = prof(m)
        j = target - profile.ideal_like - profile.even_degree
        r = _dyadic_mod(d, j)
        if r.numerator == 0:
            continue
        if not allowed(profile, r):
            bad.append(f"{r}*{ring.monomial_str(m)} (profile {profile.tilde_degree},{profile.even_degree})")
            continue
        primary[m] = r
    if bad:
        raise UncertifiableTermError("uncertifiable terms in split", bad)
    prim = Polynomial._from_dyadics(ring, primary)
    remainder = half - prim
    _certify_power(remainder, target, prof)
    return prim, remainder


def _certify_power(p: Polynomial, k: int, prof=None):
    prof = prof or _ProfileReader(p.ring)
    t, e = p.raw_terms()
    bad = []
    for m, c in t.items():
        lr, _ = certified_levels(prof(m), Dyadic(c, e).valuation())
        if lr < k:
            bad.append(f"{Dyadic(c, e)}*{p.ring.monomial_str(m)}")
    if bad:
        raise UncertifiableTermError(f"terms not certified in {1 << k}R", bad)


def split_base(q: Polynomial, role: str = "M") -> tuple[Polynomial, Polynomial]:
    """Base-point split of ``q/2`` into residues and an integer remainder.

    The M role keeps residues mod 2 and the g role residues mod 4, both in
    ``[0, 2^j)``.  Returns ``(primary, remainder)`` with
    ``remainder = (q/2 - primary) / 2``, so ``q = 2 (primary + 2 remainder)``.
    """
    j = 1 if _role(role) == "M" else 2
    if any(v.kind not in (VarKind.PARAMETER, VarKind.COORDINATE) for v in q.variables_used()):
        raise ContractViolation("split_base expects a polynomial in parameters and coordinates only")
    t, e = q.raw_terms()
    if e or any(c & 1 for c in t.values()):
        raise ContractViolation("split_base expects even integer coefficients")
    keep = {}
    rest = {}
    for m, c in t.items():
        h = c >> 1
        r = h % (1 << j)
        if r:
            keep[m] = r
        if h - r:
            rest[m] = (h - r) >> 1
    return Polynomial._normalized(q.ring, keep, 0), Polynomial._normalized(q.ring, rest, 0)


# -- exact membership in 2^k R and 2^k I -------------------------------------------

def w_polynomial(ring: Ring = STANDARD) -> Polynomial:
    g = ring.gen
    return g("a_2001") * g("a_0210") + g("a_1110") * g("a_1101")


def divide_by(p: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Multivariate division of ``p`` by ``g`` (graded-lex leading term with coefficient 1).

    Returns ``(quotient, remainder)``.  For a single divisor the remainder
    vanishes exactly when ``g`` divides ``p``.
    """
    ring = p.ring
    gt, ge = g.raw_terms()
    if ge or not gt:
        raise PolyError("divisor must be a nonzero integer polynomial")
    lm = max(gt)
    if gt[lm] != 1:
        raise PolyError("divisor must have leading coefficient 1")
    lexp = ring.unpack(lm)
    rest_g = [(m - lm, c) for m, c in gt.items() if m != lm]
    work, e = dict(p.raw_terms()[0]), p.denominator_exponent
    quot: dict[int, int] = {}
    rem: dict[int, int] = {}
    import heapq

    heap = [-m for m in work]
    heapq.heapify(heap)
    while heap:
        m = -heapq.heappop(heap)
        c = work.pop(m, 0)
        if not c:
            continue
        # drain duplicates of m left in the heap
        while heap and -heap[0] == m:
            heapq.heappop(heap)
        exps = ring.unpack(m)
        if all(a >= b for a, b in zip(exps, lexp)):
            s = m - lm
            quot[s] = quot.get(s, 0) + c
            for dm, dc in rest_g:
                nm = s + lm + dm
                if nm not in work:
                    heapq.heappush(heap, -nm)
                work[nm] = work.get(nm, 0) - c * dc
        else:
            rem[m] = c
    return Polynomial._normalized(ring, quot, e), Polynomial._normalized(ring, rem, e)


def in_target(p: Polynomial, target: str) -> bool:
    """Exact membership of ``p`` in ``2^k R[...]`` (target ``"<2^k>R"``) or ``2^k I`` (``"<2^k>I"``).

    Marker variables must have been substituted away.  Membership in
    ``2^k I = 2^(k+1) (2, w)`` is decided by exact division by w modulo 2.
    """
    if any(v.kind in (VarKind.MARKER_TILDE, VarKind.MARKER_EVEN, VarKind.MARKER_IDEAL)
           for v in p.variables_used()):
        raise ContractViolation("in_target expects a marker-free polynomial")
    target = target.replace(" ", "")
    kind = target[-1]
    mult = int(target[:-1] or 1)
    if mult & (mult - 1) or kind not in "RI":
        raise ContractViolation(f"unsupported target {target!r}")
    k = mult.bit_length() - 1
    if p.is_zero:
        return True
    t, e = p.raw_terms()
    if e:
        return False
    if kind == "R":
        return all(c % (1 << k) == 0 for c in t.values())
    k1 = k + 1
    if any(c % (1 << k1) for c in t.values()):
        return False
    reduced = Polynomial._normalized(p.ring, {m: c >> k1 for m, c in t.items()}, 0)
    _, rem = divide_by(reduced, w_polynomial(p.ring))
    rt, re_ = rem.raw_terms()
    return all(c % 2 == 0 for c in rt.values())


def random_marker_polynomial(rng: random.Random, ring: Ring, markers: Iterable[str],
                             n_terms: int = 6, max_coeff: int = 20, max_deg: int = 3,
                             base: Iterable[str] = ("a_2001", "a_1200", "a_1110", "a_1101", "a_0210", "M0", "M1"),
                             allow_half: bool = False) -> Polynomial:
    """A small random polynomial over the given base variables and markers."""
    names = list(base) + list(markers)
    terms = {}
    for _ in range(n_terms):
        exps = {}
        for _ in range(rng.randint(0, max_deg)):
            n = rng.choice(names)
            exps[n] = exps.get(n, 0) + 1
        c = rng.randint(-max_coeff, max_coeff)
        key = ring.pack(exps)
        coeff = Fraction(c, 2) if allow_half and rng.random() < 0.3 else Fraction(c)
        terms[key] = terms.get(key, 0) + coeff
    acc = {m: Dyadic.coerce(c) for m, c in terms.items()}
    return Polynomial._from_dyadics(ring, acc)


def substitute_markers(p: Polynomial, rng: random.Random, small_vars=("a_1200", "M0", "M1")) -> Polynomial:
    """Replace every marker by a random element of its submodule.

    Tilde and ideal markers become ``4u + 2wv``, even markers ``2r``, with
    ``u, v, r`` small random integer polynomials.
    """
    ring = p.ring
    w = w_polynomial(ring)

    def small():
        return random_marker_polynomial(rng, ring, (), n_terms=3, max_coeff=5, max_deg=1, base=small_vars)

    mapping = {}
    for v in p.variables_used():
        if v.kind in (VarKind.MARKER_TILDE, VarKind.MARKER_IDEAL):
            mapping[v.name] = small().scale(4) + (w * small()).scale(2)
        elif v.kind == VarKind.MARKER_EVEN:
            mapping[v.name] = small().scale(2)
    return p.substitute(mapping)
