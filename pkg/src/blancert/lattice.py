"""Intersection classes on the blown-up threefold and the spectral data of the composition.

Divisor classes live on the basis (H, E_1..E_k, F_1..F_k), curve classes on
(h, e_1..e_k, f_1..f_k).  Everything in the trusted path is exact: the
characteristic polynomial comes from fraction-free elimination over Z[x] and
its real roots are isolated with Sturm sequences and rational bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "LatticeError",
    "RootIsolationError",
    "DivisorClass",
    "CurveClass",
    "PullbackMatrix",
    "NuBasis",
    "pairing",
    "sigma_pullback",
    "phi_pullback",
    "charpoly",
    "real_roots",
    "spectral_radius",
    "dynamical_degrees",
    "theta1",
    "theta1_inequalities",
    "curve_L",
    "theta_dot_L",
    "flop_pushforward",
    "flopped_out_class",
    "flop_negativity",
]

Number = int | Fraction


class LatticeError(ValueError):
    pass


class RootIsolationError(LatticeError):
    """Bisection exceeded its iteration budget."""


# -- classes -------------------------------------------------------------------------

def _dim(k: int) -> int:
    if k < 1:
        raise LatticeError("k must be at least 1")
    return 1 + 2 * k


@dataclass(frozen=True)
class _LatticeVector:
    k: int
    coords: tuple

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != _dim(self.k):
            raise LatticeError(f"expected {_dim(self.k)} coordinates for k = {self.k}, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    def _check(self, other):
        if type(other) is not type(self):
            raise LatticeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.k != self.k:
            raise LatticeError(f"dimension mismatch: k = {self.k} vs k = {other.k}")

    def __add__(self, other):
        self._check(other)
        return type(self)(self.k, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return type(self)(self.k, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return type(self)(self.k, tuple(-a for a in self.coords))

    def __mul__(self, c: Number):
        return type(self)(self.k, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    @classmethod
    def zero(cls, k: int):
        return cls(k, (0,) * _dim(k))

    @classmethod
    def _unit(cls, k: int, pos: int):
        v = [0] * _dim(k)
        v[pos] = 1
        return cls(k, tuple(v))

    def _label(self, names: tuple[str, str, str]) -> str:
        h, e, f = names
        labels = [h] + [f"{e}{i}" for i in range(1, self.k + 1)] + [f"{f}{i}" for i in range(1, self.k + 1)]
        parts = []
        for c, n in zip(self.coords, labels):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            parts.append(f"{sign} {'' if mag == 1 else str(mag) + '*'}{n}")
        if not parts:
            return "0"
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _check_index(i: int, k: int):
    if not 1 <= i <= k:
        raise LatticeError(f"index {i} out of range 1..{k}")


class DivisorClass(_LatticeVector):
    """A class in N^1 over (H, E_1..E_k, F_1..F_k)."""

    @classmethod
    def H(cls, k: int) -> "DivisorClass":
        return cls._unit(k, 0)

    @classmethod
    def E(cls, i: int, k: int) -> "DivisorClass":
        _check_index(i, k)
        return cls._unit(k, i)

    @classmethod
    def F(cls, i: int, k: int) -> "DivisorClass":
        _check_index(i, k)
        return cls._unit(k, k + i)

    @classmethod
    def nu(cls, i: int, k: int) -> "DivisorClass":
        """``2H - 2E_i - F_i``."""
        return 2 * cls.H(k) - 2 * cls.E(i, k) - cls.F(i, k)

    def __str__(self) -> str:
        return self._label(("H", "E", "F"))


class CurveClass(_LatticeVector):
    """A class in N_1 over (h, e_1..e_k, f_1..f_k)."""

    @classmethod
    def h(cls, k: int) -> "CurveClass":
        return cls._unit(k, 0)

    @classmethod
    def e(cls, i: int, k: int) -> "CurveClass":
        _check_index(i, k)
        return cls._unit(k, i)

    @classmethod
    def f(cls, i: int, k: int) -> "CurveClass":
        _check_index(i, k)
        return cls._unit(k, k + i)

    def __str__(self) -> str:
        return self._label(("h", "e", "f"))


def pairing(D: DivisorClass, c: CurveClass) -> Number:
    """``H.h = 1``, ``E_i.e_i = F_i.f_i = -1``, all other basis products 0."""
    if not isinstance(D, DivisorClass) or not isinstance(c, CurveClass):
        raise LatticeError("pairing takes a divisor class and a curve class")
    if D.k != c.k:
        raise LatticeError(f"dimension mismatch: k = {D.k} vs k = {c.k}")
    total = D.coords[0] * c.coords[0]
    for a, b in zip(D.coords[1:], c.coords[1:]):
        total -= a * b
    return total


# -- matrices ------------------------------------------------------------------------

def _bareiss_det(rows: list[list[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for p in range(n - 1):
        if a[p][p] == 0:
            swap = next((r for r in range(p + 1, n) if a[r][p]), None)
            if swap is None:
                return 0
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) // prev
        prev = a[p][p]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class PullbackMatrix:
    """Integer matrix acting on divisor-class coordinate columns."""

    k: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = _dim(self.k)
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise LatticeError(f"expected a {n}x{n} matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, k: int) -> "PullbackMatrix":
        n = _dim(k)
        return cls(k, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, k: int, columns: Sequence[DivisorClass]) -> "PullbackMatrix":
        n = _dim(k)
        return cls(k, tuple(tuple(columns[j].coords[i] for j in range(n)) for i in range(n)))

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __matmul__(self, other):
        if isinstance(other, PullbackMatrix):
            if other.k != self.k:
                raise LatticeError("dimension mismatch")
            cols = list(zip(*other.rows))
            return PullbackMatrix(self.k, tuple(
                tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))
        if isinstance(other, DivisorClass):
            if other.k != self.k:
                raise LatticeError("dimension mismatch")
            return DivisorClass(self.k, tuple(sum(a * b for a, b in zip(r, other.coords)) for r in self.rows))
        return NotImplemented

    def __pow__(self, n: int) -> "PullbackMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        out, base = PullbackMatrix.identity(self.k), self
        while n:
            if n & 1:
                out = out @ base
            base = base @ base
            n >>= 1
        return out

    def apply(self, D: DivisorClass) -> DivisorClass:
        return self @ D

    def determinant(self) -> int:
        return _bareiss_det([list(r) for r in self.rows])

    def inverse(self) -> "PullbackMatrix":
        """Exact inverse; requires determinant +-1."""
        n = self.size
        a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for p in range(n):
            piv = next((r for r in range(p, n) if a[r][p]), None)
            if piv is None:
                raise LatticeError("matrix is singular")
            a[p], a[piv] = a[piv], a[p]
            inv = 1 / a[p][p]
            a[p] = [x * inv for x in a[p]]
            for r in range(n):
                if r != p and a[r][p]:
                    f = a[r][p]
                    a[r] = [x - f * y for x, y in zip(a[r], a[p])]
        out = [row[n:] for row in a]
        if any(x.denominator != 1 for row in out for x in row):
            raise LatticeError("inverse is not integral; determinant is not +-1")
        return PullbackMatrix(self.k, tuple(tuple(int(x) for x in row) for row in out))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def sigma_pullback(i: int, k: int) -> PullbackMatrix:
    """``H -> H + nu_i``, ``E_i -> E_i + nu_i``, ``F_i -> F_i + 2 nu_i``; other ``E_j, F_j`` fixed."""
    _check_index(i, k)
    nu = DivisorClass.nu(i, k)
    cols = []
    for j in range(_dim(k)):
        b = DivisorClass._unit(k, j)
        if j == 0 or j == i:
            b = b + nu
        elif j == k + i:
            b = b + 2 * nu
        cols.append(b)
    return PullbackMatrix.from_columns(k, cols)


def _parse_order(order: Iterable[int] | str) -> tuple[int, ...]:
    if isinstance(order, str):
        try:
            order = [int(x) for x in order.replace(" ", "").split(",") if x]
        except ValueError as exc:
            raise LatticeError(f"bad order {order!r}") from exc
    order = tuple(order)
    if not order:
        raise LatticeError("order must be a nonempty index sequence")
    return order


def phi_pullback(order: Iterable[int] | str, k: int) -> PullbackMatrix:
    """Product ``S_{o1} S_{o2} ... S_{on}`` of involution pullbacks in the listed order.

    The listed order is pullback order: ``(1, 2, 3)`` is the pullback of
    ``sigma_3 o sigma_2 o sigma_1``.
    """
    order = _parse_order(order)
    out = PullbackMatrix.identity(k)
    for i in order:
        out = out @ sigma_pullback(i, k)
    return out


# -- integer polynomials (coefficient lists, lowest degree first) -----------------------

def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _padd(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _psub(a, b):
    return _padd(a, [-x for x in b])


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdiv_exact(a, b):
    """Exact quotient ``a / b`` of integer polynomials; raises if inexact."""
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c, r = divmod(a[-1], lead)
        if r:
            raise LatticeError("inexact polynomial division")
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
    if _trim(a):
        raise LatticeError("inexact polynomial division")
    return _trim(q)


def _poly_det(m: list[list[list[int]]]) -> list[int]:
    """Bareiss determinant of a matrix with entries in Z[x]."""
    a = [[list(e) for e in row] for row in m]
    n = len(a)
    if n == 0:
        return [1]
    sign, prev = 1, [1]
    for p in range(n - 1):
        if not a[p][p]:
            swap = next((r for r in range(p + 1, n) if a[r][p]), None)
            if swap is None:
                return []
            a[p], a[swap] = a[swap], a[p]
            sign = -sign
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                num = _psub(_pmul(a[i][j], a[p][p]), _pmul(a[i][p], a[p][j]))
                a[i][j] = _pdiv_exact(num, prev)
        prev = a[p][p]
    d = a[n - 1][n - 1]
    return [sign * x for x in d]


def charpoly(M: PullbackMatrix | Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(x I - M)``, lowest degree first, by fraction-free elimination."""
    rows = M.rows if isinstance(M, PullbackMatrix) else [tuple(r) for r in M]
    n = len(rows)
    m = [[_trim([-rows[i][j], 1 if i == j else 0]) for j in range(n)] for i in range(n)]
    return _poly_det(m)


def _peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _pderiv(p):
    return _trim([i * c for i, c in enumerate(p)][1:])


def _prem_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(_trim(a)) >= len(b) and a:
        c = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[i + shift] -= c * y
        _trim(a)
    return a


def _pgcd(a, b):
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while b:
        a, b = b, _prem_q(a, b)
    return [x / a[-1] for x in a]


def _pdiv_q(a, b):
    a = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(_trim(a)) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / b[-1]
        q[shift] = c
        for i, y in enumerate(b):
            a[i + shift] -= c * y
    return _trim(q)


def _square_free(p):
    g = _pgcd(p, _pderiv(p))
    return _pdiv_q(p, g) if len(g) > 1 else [Fraction(x) for x in p]


def _sturm(p):
    seq = [p, _pderiv(p)]
    while len(seq[-1]) > 1:
        r = _prem_q(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-x for x in r])
    return seq


def _sign_changes(seq, x) -> int:
    signs = [s for s in (_peval(p, x) for p in seq) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _root_bound(p) -> Fraction:
    lead = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) for c in p[:-1]) / lead if len(p) > 1 else Fraction(1)


def real_roots(p: Sequence[int], tol: Fraction = Fraction(1, 10 ** 13), budget: int = 10_000) -> list[Fraction]:
    """Distinct real roots of an integer polynomial, each to within ``tol``, ascending."""
    p = _trim(list(p))
    if len(p) <= 1:
        return []
    sf = _square_free(p)
    seq = _sturm(sf)
    bound = _root_bound(sf)
    lo, hi = -bound, bound
    count = _sign_changes(seq, lo) - _sign_changes(seq, hi)
    intervals = []
    stack = [(lo, hi, count)]
    steps = 0
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            intervals.append((a, b))
            continue
        steps += 1
        if steps > budget:
            raise RootIsolationError("root isolation did not converge")
        m = (a + b) / 2
        if _peval(sf, m) == 0:
            # m is an exact root; shrink away from it on both sides
            intervals.append((m, m))
            eps = (b - a) / 2 ** 20
            stack.append((a, m - eps, _sign_changes(seq, a) - _sign_changes(seq, m - eps)))
            stack.append((m + eps, b, _sign_changes(seq, m + eps) - _sign_changes(seq, b)))
            continue
        stack.append((a, m, _sign_changes(seq, a) - _sign_changes(seq, m)))
        stack.append((m, b, _sign_changes(seq, m) - _sign_changes(seq, b)))
    roots = []
    for a, b in intervals:
        if a == b:
            roots.append(a)
            continue
        fa = _peval(sf, a)
        it = 0
        while b - a > tol:
            it += 1
            if it > budget:
                raise RootIsolationError("bisection did not converge")
            m = (a + b) / 2
            fm = _peval(sf, m)
            if fm == 0:
                a = b = m
                break
            if (fm > 0) == (fa > 0):
                a, fa = m, fm
            else:
                b = m
        roots.append((a + b) / 2)
    return sorted(roots)


def _distinct_root_count(p) -> int:
    return len(_square_free(_trim(list(p)))) - 1


def _reciprocal_products(p: list[int]) -> list[int]:
    """Integer polynomial in y whose roots are all products ``r_i r_j`` of roots of ``p``.

    It is the resultant in x of ``p(x)`` and ``x^n p(y / x)``.
    """
    n = len(p) - 1
    # q(x, y) = x^n p(y/x) = sum_i p_i y^i x^(n-i): coefficient of x^(n-i) is p_i y^i
    q = [[0] * i + [p[i]] if p[i] else [] for i in range(n + 1)]  # q_x[n-i] = p_i y^i
    qx = [q[n - j] for j in range(n + 1)]  # coefficients of x^j
    size = 2 * n
    rows = []
    for r in range(n):
        row = [[] for _ in range(size)]
        for j in range(n + 1):
            row[r + j] = [p[n - j]] if p[n - j] else []
        rows.append(row)
    for r in range(n):
        row = [[] for _ in range(size)]
        for j in range(n + 1):
            row[r + j] = list(qx[n - j])
        rows.append(row)
    return _poly_det(rows)


def spectral_radius(M: PullbackMatrix | Sequence[Sequence[int]], tol: Fraction = Fraction(1, 10 ** 13)) -> Fraction:
    """Largest modulus of an eigenvalue, as a rational within ``tol``.

    When every root of the characteristic polynomial is real this is the
    largest absolute real root; otherwise the square root of the largest real
    root of the product polynomial.
    """
    p = charpoly(M)
    roots = real_roots(p, tol)
    if len(roots) == _distinct_root_count(p):
        return max(abs(r) for r in roots)
    prod = _reciprocal_products(p)
    big = max(real_roots(prod, tol * tol))
    return _fraction_sqrt(big, tol)


def _fraction_sqrt(x: Fraction, tol: Fraction) -> Fraction:
    lo, hi = Fraction(0), max(Fraction(1), x)
    while hi - lo > tol:
        m = (lo + hi) / 2
        if m * m > x:
            hi = m
        else:
            lo = m
    return (lo + hi) / 2


def dynamical_degrees(M: PullbackMatrix, tol: Fraction = Fraction(1, 10 ** 13)) -> tuple[Fraction, Fraction]:
    """``(lambda_1, lambda_2)`` as spectral radii of ``M`` and ``M^{-1}``."""
    if M.determinant() not in (1, -1):
        raise LatticeError("pullback matrix is not unimodular")
    return spectral_radius(M, tol), spectral_radius(M.inverse(), tol)


# -- the nu-span and theta_1 --------------------------------------------------------------

@dataclass(frozen=True)
class NuBasis:
    """The classes ``nu_j = 2H - 2E_j - F_j`` and the action of each involution on their span."""

    k: int

    @property
    def classes(self) -> tuple[DivisorClass, ...]:
        return tuple(DivisorClass.nu(j, self.k) for j in range(1, self.k + 1))

    def coordinates(self, D: DivisorClass) -> tuple:
        """Coordinates of ``D`` in the nu basis; raises if ``D`` is outside the span."""
        c = tuple(-D.coords[self.k + j] for j in range(1, self.k + 1))
        back = DivisorClass.zero(self.k)
        for cj, nu in zip(c, self.classes):
            back = back + cj * nu
        if back != D:
            raise LatticeError(f"{D} is not in the span of the nu classes")
        return c

    def embed(self, coeffs: Sequence[Number]) -> DivisorClass:
        out = DivisorClass.zero(self.k)
        for c, nu in zip(coeffs, self.classes):
            out = out + c * nu
        return out

    def restrict(self, M: PullbackMatrix) -> tuple[tuple[int, ...], ...]:
        """The k x k matrix of ``M`` on the nu span (columns are images of ``nu_j``)."""
        cols = [self.coordinates(M @ nu) for nu in self.classes]
        return tuple(tuple(cols[j][i] for j in range(self.k)) for i in range(self.k))

    def action(self, i: int) -> tuple[tuple[int, ...], ...]:
        return self.restrict(sigma_pullback(i, self.k))


def _adjugate_column(a: list[list[Fraction]]) -> list[Fraction]:
    """The column of adj(a) with the largest entries; an eigenvector when ``a`` is nearly singular."""
    n = len(a)
    if n == 1:
        return [Fraction(1)]
    best, best_norm = None, -1
    for j in range(n):
        col = []
        for i in range(n):
            minor = [[a[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            col.append((-1) ** (i + j) * _frac_det(minor))
        norm = max(abs(x) for x in col)
        if norm > best_norm:
            best, best_norm = col, norm
    return best


def _frac_det(a: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in a]
    n = len(a)
    det = Fraction(1)
    for p in range(n):
        piv = next((r for r in range(p, n) if a[r][p]), None)
        if piv is None:
            return Fraction(0)
        if piv != p:
            a[p], a[piv] = a[piv], a[p]
            det = -det
        det *= a[p][p]
        for r in range(p + 1, n):
            f = a[r][p] / a[p][p]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[p])]
    return det


def theta1(M: PullbackMatrix, nu: NuBasis | None = None,
           tol: Fraction = Fraction(1, 10 ** 13)) -> tuple[Fraction, tuple[Fraction, ...]]:
    """``(lambda_1, alpha)`` with ``theta_1 = sum alpha_i nu_i`` and ``alpha_1 = 1``.

    Raises if ``lambda_1`` is a repeated eigenvalue of ``M``.
    """
    nu = nu or NuBasis(M.k)
    p = charpoly(M)
    lam = spectral_radius(M, tol)
    roots = real_roots(p, tol)
    near = [r for r in roots if abs(r - lam) <= 2 * tol]
    if not near:
        raise LatticeError("spectral radius is not a real eigenvalue")
    root = near[0]
    if _is_repeated_root(p, root, tol):
        raise LatticeError("lambda_1 is not a simple eigenvalue")
    N = nu.restrict(M)
    k = M.k
    a = [[Fraction(N[i][j]) - (root if i == j else 0) for j in range(k)] for i in range(k)]
    v = _adjugate_column(a)
    if v[0] == 0:
        raise LatticeError("theta_1 has zero first coefficient; cannot normalize")
    alpha = tuple(x / v[0] for x in v)
    return root, alpha


def _is_repeated_root(p: list[int], root: Fraction, tol: Fraction) -> bool:
    g = _pgcd(p, _pderiv(p))
    if len(g) <= 1:
        return False
    den = math.lcm(*(x.denominator for x in g))
    return any(abs(r - root) <= 2 * tol for r in real_roots([int(x * den) for x in g], tol))


def theta1_inequalities(alpha: Sequence[Number]) -> dict[str, bool]:
    """Strict decrease, positivity, and ``alpha_1 > alpha_2 + 2 sum_{i>=3} alpha_i``."""
    a = list(alpha)
    return {
        "decreasing": all(x > y for x, y in zip(a, a[1:])),
        "positive": all(x > 0 for x in a),
        "dominant_first": len(a) < 2 or a[0] > a[1] + 2 * sum(a[2:]),
    }


def curve_L(k: int) -> CurveClass:
    """``h - e_1 - f_1 - f_2``."""
    if k < 2:
        raise LatticeError("curve_L needs k >= 2")
    return CurveClass.h(k) - CurveClass.e(1, k) - CurveClass.f(1, k) - CurveClass.f(2, k)


def theta_dot_L(alpha: Sequence[Number], k: int | None = None) -> Number:
    k = len(alpha) if k is None else k
    if len(alpha) != k:
        raise LatticeError("alpha has the wrong length")
    L = curve_L(k)
    return sum(a * pairing(DivisorClass.nu(i, k), L) for i, a in zip(range(1, k + 1), alpha))


# -- flops -----------------------------------------------------------------------------------

def flopped_class(k: int) -> CurveClass:
    """``f_1 - f_2``, the class of the flopped curve."""
    return CurveClass.f(1, k) - CurveClass.f(2, k)


def flopped_out_class(C: CurveClass) -> CurveClass:
    """Class of the curve created by the flop under the identity identification: ``-[C]``."""
    return -C


def flop_pushforward(c: CurveClass, flopped: CurveClass | None = None) -> CurveClass:
    """Push ``c`` across the flop of the curve with class ``flopped``.

    Curve classes are identified across the flop, so the pushforward is the
    identity; for ``c = [C]`` this equals ``-[C+]``.
    """
    if flopped is not None and flopped.k != c.k:
        raise LatticeError("dimension mismatch")
    return CurveClass(c.k, c.coords)


def flop_negativity(D: DivisorClass, flopped: CurveClass | None = None) -> tuple[Number, Number]:
    """``(D.[C], D'.[C+])`` where ``D'`` is the strict transform of ``D``.

    A positive first entry forces a negative second one.
    """
    C = flopped if flopped is not None else flopped_class(D.k)
    before = pairing(D, C)
    after = pairing(D, flopped_out_class(C))
    if before > 0 and not after < 0:
        raise LatticeError("flop sign flip failed")
    return before, after
