"""Sparse multivariate polynomials with dyadic-rational coefficients.

A :class:`Ring` fixes an ordered tuple of :class:`Variable` objects.  Every
:class:`Polynomial` belongs to exactly one ring and is immutable.

Internally a monomial is a single Python integer: the total degree sits in the
most significant 16-bit field, followed by one 16-bit field per variable in
ring order.  Multiplying monomials is integer addition, and comparing packed
integers is graded-lexicographic comparison, so the canonical term order is
just ``sorted(..., reverse=True)``.

Coefficients are stored as integer numerators over one shared power-of-two
denominator per polynomial.  The pair is kept normalized: if the shared
exponent is positive then at least one numerator is odd.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "VarKind",
    "Variable",
    "Dyadic",
    "Ring",
    "Polynomial",
    "PolyError",
    "PolynomialSyntaxError",
    "UnknownVariableError",
    "ZeroPolynomialDegreeError",
    "RingMismatchError",
]

_BITS = 16
_MASK = (1 << _BITS) - 1
_MAX_EXP = _MASK


class PolyError(ValueError):
    """Base class for polynomial errors."""


class PolynomialSyntaxError(PolyError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class UnknownVariableError(PolyError):
    def __init__(self, name: str, position: int | None = None):
        where = "" if position is None else f" at position {position}"
        super().__init__(f"unknown variable {name!r}{where}")
        self.name = name
        self.position = position


class ZeroPolynomialDegreeError(PolyError):
    """Raised when asking for the degree of the zero polynomial."""


class RingMismatchError(PolyError):
    """Raised when combining polynomials from different rings."""


class VarKind(enum.IntEnum):
    # The integer value is the global ordering rank of the kind.
    PARAMETER = 0
    COORDINATE = 1
    BOOKKEEPING = 2
    MARKER_TILDE = 3
    MARKER_EVEN = 4
    MARKER_IDEAL = 5


@dataclass(frozen=True)
class Variable:
    name: str
    kind: VarKind

    def __post_init__(self):
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", self.name):
            raise PolyError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return self.name


def _v2(n: int) -> int:
    """2-adic valuation of a nonzero integer."""
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class Dyadic:
    """The number ``numerator / 2**exponent`` in normalized form."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        n, e = self.numerator, self.exponent
        if e < 0:
            raise PolyError("dyadic exponent must be non-negative")
        if n == 0:
            e = 0
        elif e:
            s = min(_v2(n), e)
            n >>= s
            e -= s
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "exponent", e)

    @classmethod
    def coerce(cls, value: Union["Dyadic", int, Fraction]) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool):
            raise TypeError("booleans are not coefficients")
        if isinstance(value, int):
            return cls(value, 0)
        if isinstance(value, Fraction):
            d = value.denominator
            if d & (d - 1):
                raise PolyError(f"denominator {d} is not a power of two")
            return cls(value.numerator, d.bit_length() - 1)
        raise TypeError(f"cannot use {type(value).__name__} as a dyadic coefficient")

    @property
    def is_integer(self) -> bool:
        return self.exponent == 0

    def valuation(self) -> int:
        """2-adic valuation; negative for proper fractions."""
        if self.numerator == 0:
            raise PolyError("valuation of zero is undefined")
        return _v2(self.numerator) - self.exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def __add__(self, other):
        other = Dyadic.coerce(other)
        e = max(self.exponent, other.exponent)
        return Dyadic((self.numerator << (e - self.exponent)) + (other.numerator << (e - other.exponent)), e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __sub__(self, other):
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other):
        return Dyadic.coerce(other) - self

    def __mul__(self, other):
        other = Dyadic.coerce(other)
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.to_fraction() == other
        if isinstance(other, Dyadic):
            return self.numerator == other.numerator and self.exponent == other.exponent
        return NotImplemented

    def __hash__(self):
        return hash(self.to_fraction())

    def __lt__(self, other):
        return self.to_fraction() < Dyadic.coerce(other).to_fraction()

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


Coefficient = Union[Dyadic, int, Fraction]


class Ring:
    """An ordered set of variables with the packed monomial layout.

    Variables are sorted stably by kind (parameters, coordinates,
    bookkeeping, markers) so that the term order is global and does not
    depend on declaration order across kinds.
    """

    def __init__(self, variables: Iterable[Variable]):
        variables = list(variables)
        names = [v.name for v in variables]
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise PolyError(f"duplicate variable names: {dup}")
        self.variables: tuple[Variable, ...] = tuple(sorted(variables, key=lambda v: v.kind))
        self.nvars = len(self.variables)
        self._index = {v.name: i for i, v in enumerate(self.variables)}
        # variable i lives at bit offset _shift[i]; total degree sits above all of them
        self._shift = [_BITS * (self.nvars - 1 - i) for i in range(self.nvars)]
        self._tshift = _BITS * self.nvars
        self._unit = [(1 << self._tshift) | (1 << s) for s in self._shift]

    # -- variable lookup -------------------------------------------------
    def index(self, var: Union[Variable, str]) -> int:
        name = var.name if isinstance(var, Variable) else var
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariableError(name) from None

    def var(self, name: str) -> Variable:
        return self.variables[self.index(name)]

    def vars_of_kind(self, *kinds: VarKind) -> tuple[Variable, ...]:
        return tuple(v for v in self.variables if v.kind in kinds)

    def __contains__(self, name) -> bool:
        name = name.name if isinstance(name, Variable) else name
        return name in self._index

    def __repr__(self) -> str:
        return f"Ring({', '.join(v.name for v in self.variables)})"

    # -- constructors ----------------------------------------------------
    def gen(self, var: Union[Variable, str]) -> "Polynomial":
        return Polynomial._raw(self, {self._unit[self.index(var)]: 1}, 0)

    def __getitem__(self, name: str) -> "Polynomial":
        return self.gen(name)

    def gens(self) -> tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {}, 0)

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: Coefficient) -> "Polynomial":
        d = Dyadic.coerce(c)
        if d.numerator == 0:
            return self.zero()
        return Polynomial._raw(self, {0: d.numerator}, d.exponent)

    def from_terms(self, terms: Mapping[tuple, Coefficient] | Iterable) -> "Polynomial":
        """Build from ``{exponent_tuple_or_dict: coefficient}``.

        Exponent keys are tuples in ring order or ``{name: exp}`` dicts.
        """
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, Dyadic] = {}
        for key, c in items:
            m = self.pack(key)
            acc[m] = acc.get(m, Dyadic(0)) + Dyadic.coerce(c)
        return Polynomial._from_dyadics(self, acc)

    # -- monomial packing ------------------------------------------------
    def pack(self, exps) -> int:
        if isinstance(exps, Mapping):
            vec = [0] * self.nvars
            for k, e in exps.items():
                vec[self.index(k)] += e
            exps = vec
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise PolyError(f"expected {self.nvars} exponents, got {len(exps)}")
        total = 0
        m = 0
        for e, s in zip(exps, self._shift):
            if e < 0 or e > _MAX_EXP:
                raise PolyError(f"exponent {e} out of range")
            total += e
            m |= e << s
        if total > _MAX_EXP:
            raise PolyError("total degree out of range")
        return m | (total << self._tshift)

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> s) & _MASK for s in self._shift)

    def total_degree_of(self, m: int) -> int:
        return m >> self._tshift

    def exponent_of(self, m: int, i: int) -> int:
        return (m >> self._shift[i]) & _MASK

    def monomial_str(self, m: int) -> str:
        parts = []
        for v, e in zip(self.variables, self.unpack(m)):
            if e == 1:
                parts.append(v.name)
            elif e:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts)

    # -- text I/O --------------------------------------------------------
    def parse(self, text: str) -> "Polynomial":
        return _Parser(self, text).parse()

    def format(self, p: "Polynomial") -> str:
        return p.format()


class Polynomial:
    """Immutable sparse polynomial over the dyadic rationals."""

    __slots__ = ("ring", "_t", "_e", "_hash")

    ring: Ring
    _t: dict[int, int]
    _e: int

    def __init__(self, *args, **kwargs):
        raise TypeError("use Ring.gen / Ring.constant / Ring.parse to build polynomials")

    # -- internal construction ---------------------------------------------
    @classmethod
    def _raw(cls, ring: Ring, terms: dict[int, int], e: int) -> "Polynomial":
        # caller guarantees: no zero numerators, normalized exponent
        p = object.__new__(cls)
        p.ring = ring
        p._t = terms
        p._e = e
        p._hash = None
        return p

    @classmethod
    def _normalized(cls, ring: Ring, terms: dict[int, int], e: int) -> "Polynomial":
        terms = {m: c for m, c in terms.items() if c}
        if not terms:
            return cls._raw(ring, {}, 0)
        if e:
            acc = 0
            for c in terms.values():
                acc |= c
                if acc & 1:
                    break
            s = min(_v2(acc), e)
            if s:
                terms = {m: c >> s for m, c in terms.items()}
                e -= s
        return cls._raw(ring, terms, e)

    @classmethod
    def _from_dyadics(cls, ring: Ring, acc: Mapping[int, Dyadic]) -> "Polynomial":
        acc = {m: d for m, d in acc.items() if d.numerator}
        if not acc:
            return cls._raw(ring, {}, 0)
        e = max(d.exponent for d in acc.values())
        return cls._normalized(ring, {m: d.numerator << (e - d.exponent) for m, d in acc.items()}, e)

    def _check(self, other: "Polynomial"):
        if other.ring is not self.ring:
            raise RingMismatchError("polynomials belong to different rings")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ring.constant(other)

    # -- basic queries -------------------------------------------------------
    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    @property
    def is_zero(self) -> bool:
        return not self._t

    @property
    def denominator_exponent(self) -> int:
        """Shared exponent ``e``: every coefficient lies in ``2**-e * Z``."""
        return self._e

    def has_integer_coefficients(self) -> bool:
        return self._e == 0

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_value(self) -> Dyadic:
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return Dyadic(self._t.get(0, 0), self._e)

    def raw_terms(self) -> tuple[dict[int, int], int]:
        """Packed monomials to integer numerators, and the shared exponent.

        The dict is the internal one; callers must not mutate it.
        """
        return self._t, self._e

    def coefficient(self, monomial) -> Dyadic:
        m = monomial if isinstance(monomial, int) else self.ring.pack(monomial)
        return Dyadic(self._t.get(m, 0), self._e)

    def terms(self) -> Iterator[tuple[tuple[int, ...], Dyadic]]:
        """Yield ``(exponent_tuple, coefficient)`` in canonical (descending grlex) order."""
        ring = self.ring
        for m in sorted(self._t, reverse=True):
            yield ring.unpack(m), Dyadic(self._t[m], self._e)

    def monomial_dicts(self) -> list[tuple[dict[str, int], Dyadic]]:
        out = []
        for exps, c in self.terms():
            out.append(({v.name: e for v, e in zip(self.ring.variables, exps) if e}, c))
        return out

    def total_degree(self) -> int:
        if not self._t:
            raise ZeroPolynomialDegreeError("degree of the zero polynomial is undefined")
        return max(self._t) >> self.ring._tshift

    def is_homogeneous(self, variables: Iterable[Union[Variable, str]] | None = None) -> bool:
        """Homogeneity in the given variables (all ring variables by default)."""
        if not self._t:
            return True
        if variables is None:
            degs = {m >> self.ring._tshift for m in self._t}
        else:
            idx = [self.ring.index(v) for v in variables]
            degs = {sum(self.ring.exponent_of(m, i) for i in idx) for m in self._t}
        return len(degs) == 1

    def degree_in(self, var: Union[Variable, str]) -> int:
        if not self._t:
            raise ZeroPolynomialDegreeError("degree of the zero polynomial is undefined")
        s = self.ring._shift[self.ring.index(var)]
        return max((m >> s) & _MASK for m in self._t)

    def degree_in_set(self, variables: Iterable[Union[Variable, str]]) -> int:
        if not self._t:
            raise ZeroPolynomialDegreeError("degree of the zero polynomial is undefined")
        idx = [self.ring.index(v) for v in variables]
        return max(sum(self.ring.exponent_of(m, i) for i in idx) for m in self._t)

    def weighted_degree(self, weights: Mapping[str, int]) -> int:
        """Maximum of ``sum(w[v] * exp[v])`` over stored monomials; unlisted variables weigh 0."""
        if not self._t:
            raise ZeroPolynomialDegreeError("degree of the zero polynomial is undefined")
        idx = [(self.ring._shift[self.ring.index(v)], w) for v, w in weights.items()]
        return max(sum(w * ((m >> s) & _MASK) for s, w in idx) for m in self._t)

    def leading_part_in(self, var: Union[Variable, str]) -> "Polynomial":
        d = self.degree_in(var)
        s = self.ring._shift[self.ring.index(var)]
        return Polynomial._normalized(self.ring, {m: c for m, c in self._t.items() if (m >> s) & _MASK == d}, self._e)

    def part_with_degree(self, var: Union[Variable, str], d: int) -> "Polynomial":
        s = self.ring._shift[self.ring.index(var)]
        return Polynomial._normalized(self.ring, {m: c for m, c in self._t.items() if (m >> s) & _MASK == d}, self._e)

    def coefficients_in(self, var: Union[Variable, str]) -> dict[int, "Polynomial"]:
        """Split ``p = sum_k c_k * var**k``; returns ``{k: c_k}`` with ``var`` removed from ``c_k``."""
        ring = self.ring
        i = ring.index(var)
        s = ring._shift[i]
        unit = ring._unit[i]
        parts: dict[int, dict[int, int]] = {}
        for m, c in self._t.items():
            k = (m >> s) & _MASK
            parts.setdefault(k, {})[m - k * unit] = c
        return {k: Polynomial._normalized(ring, t, self._e) for k, t in parts.items()}

    def variables_used(self) -> tuple[Variable, ...]:
        used = 0
        for m in self._t:
            used |= m
        return tuple(v for v, s in zip(self.ring.variables, self.ring._shift) if (used >> s) & _MASK)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if not other._t:
            return self
        if not self._t:
            return other
        a, b = self, other
        if a._e < b._e:
            a, b = b, a
        e = a._e
        out = dict(a._t)
        shift = e - b._e
        get = out.get
        if shift:
            for m, c in b._t.items():
                out[m] = get(m, 0) + (c << shift)
        else:
            for m, c in b._t.items():
                out[m] = get(m, 0) + c
        return Polynomial._normalized(self.ring, out, e)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ring, {m: -c for m, c in self._t.items()}, self._e)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: Coefficient) -> "Polynomial":
        d = Dyadic.coerce(c)
        if d.numerator == 0 or not self._t:
            return self.ring.zero()
        n = d.numerator
        return Polynomial._normalized(self.ring, {m: v * n for m, v in self._t.items()}, self._e + d.exponent)

    def half(self) -> "Polynomial":
        return self.scale(Dyadic(1, 1))

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if not self._t or not other._t:
            return self.ring.zero()
        ring = self.ring
        if (max(self._t) >> ring._tshift) + (max(other._t) >> ring._tshift) > _MAX_EXP:
            raise PolyError("product degree exceeds the packed monomial range")
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = _mul_dicts(a, b)
        # F2[vars] is a domain, so a product of normalized factors is normalized
        return Polynomial._raw(ring, out, self._e + other._e)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring is other.ring and self._e == other._e and self._t == other._t
        if isinstance(other, (int, Fraction, Dyadic)) and not isinstance(other, bool):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._t.items()), self._e))
        return self._hash

    # -- calculus and substitution -------------------------------------------
    def derivative(self, var: Union[Variable, str]) -> "Polynomial":
        ring = self.ring
        i = ring.index(var)
        s = ring._shift[i]
        unit = ring._unit[i]
        out = {}
        for m, c in self._t.items():
            k = (m >> s) & _MASK
            if k:
                out[m - unit] = c * k
        return Polynomial._normalized(ring, out, self._e)

    def substitute(self, mapping: Mapping[Union[Variable, str], object]) -> "Polynomial":
        """Replace variables by polynomials (same ring) or constants."""
        ring = self.ring
        subs: list[tuple[int, Polynomial]] = []
        for k, v in mapping.items():
            i = ring.index(k)
            subs.append((i, v if isinstance(v, Polynomial) else ring.constant(v)))
            if isinstance(v, Polynomial):
                self._check(v)
        if not subs:
            return self
        # group terms by the exponents of the substituted variables
        groups: dict[tuple[int, ...], dict[int, int]] = {}
        for m, c in self._t.items():
            key = []
            rest = m
            for i, _ in subs:
                k = (m >> ring._shift[i]) & _MASK
                key.append(k)
                rest -= k * ring._unit[i]
            groups.setdefault(tuple(key), {})[rest] = c
        powers: list[dict[int, Polynomial]] = [{0: ring.one()} for _ in subs]

        def power(j: int, k: int) -> Polynomial:
            cache = powers[j]
            if k not in cache:
                cache[k] = power(j, k - 1) * subs[j][1]
            return cache[k]

        result = ring.zero()
        for key, rest in sorted(groups.items()):
            term = Polynomial._normalized(ring, rest, self._e)
            for j, k in enumerate(key):
                if k:
                    term = term * power(j, k)
            result = result + term
        return result

    def evaluate(self, values: Mapping[Union[Variable, str], object]) -> Fraction:
        """Evaluate at rational values; every variable present must be assigned."""
        ring = self.ring
        vals = [None] * ring.nvars
        for k, v in values.items():
            vals[ring.index(k)] = Fraction(v)
        total = Fraction(0)
        for m, c in self._t.items():
            term = Fraction(c)
            for i, s in enumerate(ring._shift):
                k = (m >> s) & _MASK
                if k:
                    if vals[i] is None:
                        raise PolyError(f"no value for variable {ring.variables[i].name!r}")
                    term *= vals[i] ** k
            total += term
        return total / (1 << self._e)

    # -- formatting ------------------------------------------------------------
    def format(self) -> str:
        if not self._t:
            return "0"
        ring = self.ring
        pieces = []
        for m in sorted(self._t, reverse=True):
            d = Dyadic(self._t[m], self._e)
            n, e = d.numerator, d.exponent
            sign = "-" if n < 0 else "+"
            n = abs(n)
            mono = ring.monomial_str(m)
            if e:
                coef = f"{n}/{1 << e}"
            elif n != 1 or not mono:
                coef = str(n)
            else:
                coef = ""
            body = "*".join(x for x in (coef, mono) if x)
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        text = self.format()
        if len(text) > 200:
            text = text[:200] + "..."
        return f"Polynomial({text!r}, terms={len(self._t)})"


def _mul_dicts(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    get = out.get
    bi = list(b.items())
    for ma, ca in a.items():
        for mb, cb in bi:
            m = ma + mb
            out[m] = get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c}


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


class _Parser:
    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            mt = _TOKEN.match(text, pos)
            if not mt:
                raise PolynomialSyntaxError("unexpected character", text, pos + len(text[pos:]) - len(text[pos:].lstrip()))
            kind = mt.lastgroup
            start = mt.start(kind)
            self.tokens.append((kind, mt.group(kind), start))
            pos = mt.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise PolynomialSyntaxError("unexpected end of input", self.text, len(self.text))
        self.i += 1
        return tok

    def expect_int(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise PolynomialSyntaxError("expected integer", self.text, pos)
        return int(val)

    def parse(self) -> Polynomial:
        ring = self.ring
        if not self.tokens:
            raise PolynomialSyntaxError("empty input", self.text, 0)
        acc: dict[int, Dyadic] = {}
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            sign = -1 if tok[1] == "-" else 1
            self.i += 1
        while True:
            coef, mono = self.term()
            acc[mono] = acc.get(mono, Dyadic(0)) + coef * sign
            tok = self.peek()
            if tok is None:
                break
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.i += 1
                continue
            raise PolynomialSyntaxError("expected '+' or '-'", self.text, tok[2])
        return Polynomial._from_dyadics(ring, acc)

    def term(self) -> tuple[Dyadic, int]:
        ring = self.ring
        coef = Dyadic(1)
        exps = [0] * ring.nvars
        while True:
            kind, val, pos = self.take()
            if kind == "int":
                num = int(val)
                den_exp = 0
                nxt = self.peek()
                if nxt and nxt[0] == "op" and nxt[1] == "/":
                    self.i += 1
                    dpos = self.peek()[2] if self.peek() else len(self.text)
                    base = self.expect_int()
                    nxt = self.peek()
                    if nxt and nxt[0] == "op" and nxt[1] == "^":
                        self.i += 1
                        if base != 2:
                            raise PolynomialSyntaxError("denominator must be a power of two", self.text, dpos)
                        den_exp = self.expect_int()
                    else:
                        if base <= 0 or base & (base - 1):
                            raise PolynomialSyntaxError("denominator must be a power of two", self.text, dpos)
                        den_exp = base.bit_length() - 1
                coef = coef * Dyadic(num, den_exp)
            elif kind == "name":
                if val not in ring:
                    raise UnknownVariableError(val, pos)
                k = 1
                nxt = self.peek()
                if nxt and nxt[0] == "op" and nxt[1] == "^":
                    self.i += 1
                    epos = self.peek()[2] if self.peek() else len(self.text)
                    k = self.expect_int()
                    if k < 1:
                        raise PolynomialSyntaxError("exponent must be at least 1", self.text, epos)
                exps[ring.index(val)] += k
            else:
                raise PolynomialSyntaxError(f"unexpected {val!r}", self.text, pos)
            nxt = self.peek()
            if nxt and nxt[0] == "op" and nxt[1] == "*":
                self.i += 1
                continue
            break
        return coef, ring.pack(exps)


# -- the ring used throughout the certificate -----------------------------------

PARAMETER_NAMES = ("a_2001", "a_1200", "a_1110", "a_1101", "a_0210")
COORDINATE_NAMES = ("x0", "x1", "x2", "x3", "X", "Y")
BOOKKEEPING_NAMES = ("M0", "M1", "N0", "N1")
TILDE_MARKERS = ("gt2", "gt3")
EVEN_MARKERS = ("g2", "g3")
IDEAL_MARKERS = ("p2", "p3")


def standard_ring() -> Ring:
    """Parameters, coordinates, bookkeeping variables and the three marker families."""
    layout = (
        (PARAMETER_NAMES, VarKind.PARAMETER),
        (COORDINATE_NAMES, VarKind.COORDINATE),
        (BOOKKEEPING_NAMES, VarKind.BOOKKEEPING),
        (TILDE_MARKERS, VarKind.MARKER_TILDE),
        (EVEN_MARKERS, VarKind.MARKER_EVEN),
        (IDEAL_MARKERS, VarKind.MARKER_IDEAL),
    )
    return Ring(Variable(n, k) for names, k in layout for n in names)


STANDARD = standard_ring()
