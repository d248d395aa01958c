"""The cubic surface and the three Blanc involutions of P^3 in normalized coordinates.

With ``q = (1:0:0:0)`` and ``p_i`` the coordinate points, the involution
centred at ``p_i`` is

    sigma_i(x) = (x_0 D : ... : x_i D - 2 f(x) : ... : x_3 D),   D = df/dx_i (x).

``compose_F_inverse`` applies ``sigma_1(sigma_2(sigma_3(x)))`` without any
content stripping, so every output coordinate is the raw degree-27 form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .polyring import (
    STANDARD,
    Dyadic,
    PolyError,
    Polynomial,
    Ring,
    Variable,
    VarKind,
)

__all__ = [
    "RESTRICTED_SUPPORT",
    "NORMALIZATION_ZEROS",
    "ALL_INDICES",
    "CubicForm",
    "SymbolicPoint",
    "DegenerateLocusError",
    "full_ring",
    "involution",
    "compose_F_inverse",
    "compose_F",
    "involution_numeric",
    "compose_F_inverse_numeric",
    "on_gamma",
    "transversality_determinant",
    "projectively_equal",
    "point_on_cubic",
]

COORDS = ("x0", "x1", "x2", "x3")
RESTRICTED_SUPPORT = ("2001", "1200", "1110", "1101", "0210")
NORMALIZATION_ZEROS = ("3000", "0300", "0030", "0003", "2100", "2010")
ALL_INDICES = tuple(
    "".join(map(str, e)) for e in sorted(
        (e for e in itertools.product(range(4), repeat=4) if sum(e) == 3), reverse=True)
)


class DegenerateLocusError(PolyError):
    """A map produced the all-zero quadruple: the input lies in an indeterminacy locus."""


def _exps(index: str) -> tuple[int, int, int, int]:
    if len(index) != 4 or not index.isdigit() or sum(map(int, index)) != 3:
        raise PolyError(f"bad cubic exponent index {index!r}")
    return tuple(int(ch) for ch in index)


def full_ring() -> Ring:
    """Ring with all twenty cubic coefficients, the coordinates and affine ``t1..t3``."""
    vs = [Variable(f"a_{i}", VarKind.PARAMETER) for i in ALL_INDICES]
    vs += [Variable(n, VarKind.COORDINATE) for n in COORDS + ("t1", "t2", "t3")]
    return Ring(vs)


@dataclass(frozen=True)
class CubicForm:
    """``sum a_I x^I`` with coefficients given as polynomials of ``ring``."""

    ring: Ring
    coefficients: Mapping[str, Polynomial]
    mode: str = "restricted"

    def __post_init__(self):
        for idx, c in self.coefficients.items():
            _exps(idx)
            if c.ring is not self.ring:
                raise PolyError("coefficient belongs to another ring")
        if self.mode == "restricted":
            extra = set(self.coefficients) - set(RESTRICTED_SUPPORT)
            if extra:
                raise PolyError(f"restricted cubic has coefficients outside B: {sorted(extra)}")
        elif self.mode != "full":
            raise PolyError(f"unknown cubic mode {self.mode!r}")
        for n in COORDS:
            self.ring.index(n)

    @classmethod
    def restricted(cls, ring: Ring = STANDARD) -> "CubicForm":
        """The 5-term cubic with symbolic coefficients ``a_I``, ``I`` in B."""
        return cls(ring, {i: ring.gen(f"a_{i}") for i in RESTRICTED_SUPPORT})

    @classmethod
    def numeric(cls, values: Mapping[str, int | Fraction], ring: Ring = STANDARD,
                mode: str = "restricted") -> "CubicForm":
        """Constant coefficients, keyed by index strings like ``"1200"``."""
        coeffs = {}
        for k, v in values.items():
            k = k[2:] if k.startswith("a_") else k
            coeffs[k] = ring.constant(Dyadic.coerce(Fraction(v)))
        return cls(ring, coeffs, mode)

    @classmethod
    def full(cls, ring: Ring | None = None, normalized: bool = True) -> "CubicForm":
        """All twenty symbolic coefficients; ``normalized`` drops the six forced zeros."""
        ring = ring or full_ring()
        coeffs = {i: ring.gen(f"a_{i}") for i in ALL_INDICES
                  if not (normalized and i in NORMALIZATION_ZEROS)}
        return cls(ring, coeffs, "full")

    def polynomial(self) -> Polynomial:
        ring = self.ring
        x = [ring.gen(n) for n in COORDS]
        f = ring.zero()
        for idx, c in self.coefficients.items():
            mono = ring.one()
            for xi, e in zip(x, _exps(idx)):
                if e:
                    mono = mono * xi ** e
            f = f + c * mono
        return f

    def derivative(self, i: int) -> Polynomial:
        return self.polynomial().derivative(COORDS[i])

    def numeric_values(self) -> dict[str, Fraction]:
        """Coefficient values, when every coefficient is a constant."""
        return {k: c.constant_value().to_fraction() for k, c in self.coefficients.items()}

    def to_pairs(self) -> list[tuple[str, str]]:
        """Serializable ``(index, coefficient text)`` pairs."""
        return [(k, self.coefficients[k].format()) for k in sorted(self.coefficients, reverse=True)]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[str]], ring: Ring = STANDARD,
                   mode: str = "restricted") -> "CubicForm":
        return cls(ring, {str(k): ring.parse(str(v)) for k, v in pairs}, mode)


@dataclass(frozen=True)
class SymbolicPoint:
    """A point ``(x0 : x1 : x2 : x3)`` with polynomial coordinates."""

    coords: tuple[Polynomial, Polynomial, Polynomial, Polynomial]

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != 4:
            raise PolyError("a point of P^3 has four coordinates")
        ring = coords[0].ring
        if any(c.ring is not ring for c in coords):
            raise PolyError("coordinates belong to different rings")
        if all(c.is_zero for c in coords):
            raise DegenerateLocusError("all four coordinates vanish")
        object.__setattr__(self, "coords", coords)

    @property
    def ring(self) -> Ring:
        return self.coords[0].ring

    @classmethod
    def of(cls, *coords) -> "SymbolicPoint":
        return cls(tuple(coords))

    def __getitem__(self, i: int) -> Polynomial:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def substitute(self, mapping) -> "SymbolicPoint":
        return SymbolicPoint(tuple(c.substitute(mapping) for c in self.coords))


def _quadratic_split(f: Polynomial, var: str) -> dict[int, Polynomial] | None:
    parts = f.coefficients_in(var)
    if max(parts, default=0) > 2:
        return None
    return parts


def involution(i: int, p: SymbolicPoint, f: CubicForm) -> SymbolicPoint:
    """Apply sigma_i (i in 1..3) to ``p``.

    When ``f`` vanishes at the centre ``p_i`` it is quadratic in ``x_i``,
    ``f = A x_i^2 + B x_i + C``, and ``x_i df/dx_i - 2f = -(B x_i + 2C)``; this
    identity gives the same polynomials with fewer large products.
    """
    if i not in (1, 2, 3):
        raise PolyError(f"involution index must be 1, 2 or 3, got {i}")
    if p.ring is not f.ring:
        raise PolyError("point and cubic belong to different rings")
    fx = f.polynomial()
    xi = COORDS[i]
    subs = dict(zip(COORDS, p.coords))
    split = _quadratic_split(fx, xi)
    if split is None:
        D = fx.derivative(xi).substitute(subs)
        F = fx.substitute(subs)
        special = p[i] * D - F.scale(2)
    else:
        zero = f.ring.zero()
        A = split.get(2, zero).substitute(subs)
        B = split.get(1, zero).substitute(subs)
        C = split.get(0, zero).substitute(subs)
        D = (A * p[i]).scale(2) + B
        special = -(B * p[i] + C.scale(2))
    out = [special if j == i else p[j] * D for j in range(4)]
    if all(c.is_zero for c in out):
        raise DegenerateLocusError(f"sigma_{i} is undefined at the given point")
    return SymbolicPoint(tuple(out))


def compose_F_inverse(p: SymbolicPoint, f: CubicForm) -> SymbolicPoint:
    """``sigma_1(sigma_2(sigma_3(p)))``."""
    return involution(1, involution(2, involution(3, p, f), f), f)


def compose_F(p: SymbolicPoint, f: CubicForm) -> SymbolicPoint:
    """``sigma_3(sigma_2(sigma_1(p)))``."""
    return involution(3, involution(2, involution(1, p, f), f), f)


# -- numeric shadows ---------------------------------------------------------------

def _numeric_coeffs(coeffs: Mapping[str, object]) -> list[tuple[tuple[int, ...], object]]:
    out = []
    for k, v in coeffs.items():
        k = k[2:] if k.startswith("a_") else k
        out.append((_exps(k), v))
    return out


def _eval_cubic(terms, x):
    total = 0
    for e, a in terms:
        if a:
            total += a * x[0] ** e[0] * x[1] ** e[1] * x[2] ** e[2] * x[3] ** e[3]
    return total


def _eval_partial(terms, x, i):
    total = 0
    for e, a in terms:
        if a and e[i]:
            ee = list(e)
            ee[i] -= 1
            total += a * e[i] * x[0] ** ee[0] * x[1] ** ee[1] * x[2] ** ee[2] * x[3] ** ee[3]
    return total


def involution_numeric(i: int, x: Sequence, coeffs: Mapping[str, object]) -> tuple:
    """sigma_i on a point with integer or rational coordinates."""
    terms = _numeric_coeffs(coeffs)
    D = _eval_partial(terms, x, i)
    F = _eval_cubic(terms, x)
    out = tuple(x[j] * D - 2 * F if j == i else x[j] * D for j in range(4))
    if not any(out):
        raise DegenerateLocusError(f"sigma_{i} is undefined at {tuple(x)}")
    return out


def compose_F_inverse_numeric(x: Sequence, coeffs: Mapping[str, object]) -> tuple:
    for i in (3, 2, 1):
        x = involution_numeric(i, x, coeffs)
    return x


def projectively_equal(p: Sequence, q: Sequence) -> bool:
    """Cross-multiplication test; works for numbers and for polynomials over a domain."""
    p, q = tuple(p), tuple(q)

    def is_zero(c):
        return c.is_zero if isinstance(c, Polynomial) else c == 0

    if all(is_zero(c) for c in p) or all(is_zero(c) for c in q):
        return False
    for a, b in itertools.combinations(range(4), 2):
        if not is_zero(p[a] * q[b] - p[b] * q[a]):
            return False
    return True


def on_gamma(i: int, p: Sequence, f: CubicForm | Mapping[str, object]) -> bool:
    """True iff ``f(p) = 0`` and ``df/dx_i (p) = 0`` at a numeric point."""
    coeffs = f.numeric_values() if isinstance(f, CubicForm) else f
    x = tuple(Fraction(c) for c in p)
    if not any(x):
        raise PolyError("the zero vector is not a point of P^3")
    terms = _numeric_coeffs(coeffs)
    return _eval_cubic(terms, x) == 0 and _eval_partial(terms, x, i) == 0


def point_on_cubic(x0, x1, x2, coeffs: Mapping[str, object]) -> tuple | None:
    """Integer point ``(x0:x1:x2:x3)`` on a restricted cubic, solving the linear equation in x3.

    Returns None when the x3-coefficient vanishes.
    """
    c = {k[2:] if k.startswith("a_") else k: Fraction(v) for k, v in coeffs.items()}
    lin = c.get("2001", 0) * x0 ** 2 + c.get("1101", 0) * x0 * x1
    rest = (c.get("1200", 0) * x0 * x1 ** 2 + c.get("1110", 0) * x0 * x1 * x2
            + c.get("0210", 0) * x1 ** 2 * x2)
    if lin == 0:
        return None
    x3 = -Fraction(rest) / lin
    den = x3.denominator
    return (x0 * den, x1 * den, x2 * den, x3.numerator)


def transversality_determinant(f: CubicForm) -> Polynomial:
    """Determinant of the gradient row and two Hessian rows of ``g(t) = f(1, t)`` at ``t = 0``.

    Its vanishing means the tangent lines of Gamma_1 and Gamma_2 at q coincide.
    """
    if f.mode != "full":
        raise PolyError("transversality_determinant expects a full-mode cubic")
    ring = f.ring
    for n in ("t1", "t2", "t3"):
        ring.index(n)
    t = ("t1", "t2", "t3")
    g = f.polynomial().substitute({"x0": 1, "x1": ring.gen("t1"), "x2": ring.gen("t2"), "x3": ring.gen("t3")})
    origin = {n: 0 for n in t}
    grad = [g.derivative(a) for a in t]
    rows = [
        [d.substitute(origin) for d in grad],
        [grad[0].derivative(b).substitute(origin) for b in t],
        [grad[1].derivative(b).substitute(origin) for b in t],
    ]
    return _det3(rows)


def _det3(m) -> Polynomial:
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
