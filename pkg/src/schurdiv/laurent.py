"""Sparse univariate Laurent polynomials over exact rationals.

A polynomial is a table {degree: coefficient} holding only nonzero
coefficients; the empty table is zero.  Degrees may be negative, so both
x^3 - 2 and 3/2*x^-1 + x live in the same ring.  All arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import DomainError, PoleError
from .rationals import format_rational, parse_rational

Scalar = Fraction | int


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with Fraction coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, Scalar] | None = None):
        table: dict[int, Fraction] = {}
        if coeffs:
            for deg, c in coeffs.items():
                f = _as_fraction(c)
                if f:
                    table[int(deg)] = f
        self._coeffs = table

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def x_pow(cls, d: int, c: Scalar = 1) -> "LaurentPoly":
        return cls({d: c})

    # -- inspection --------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int | None:
        """Largest degree with nonzero coefficient; None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    def valuation(self) -> int | None:
        """Smallest degree with nonzero coefficient; None for the zero polynomial."""
        return min(self._coeffs) if self._coeffs else None

    def coeff(self, d: int) -> Fraction:
        return self._coeffs.get(d, Fraction(0))

    def items(self) -> list[tuple[int, Fraction]]:
        """Coefficients sorted by increasing degree."""
        return sorted(self._coeffs.items())

    def support(self) -> list[int]:
        return sorted(self._coeffs)

    @property
    def is_constant(self) -> bool:
        return not self._coeffs or set(self._coeffs) == {0}

    def as_constant(self) -> Fraction:
        if not self.is_constant:
            raise DomainError(f"{self} is not a constant")
        return self.coeff(0)

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        other = _coerce(other)
        table = dict(self._coeffs)
        for d, c in other._coeffs.items():
            s = table.get(d, Fraction(0)) + c
            if s:
                table[d] = s
            else:
                table.pop(d, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = table
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {d: -c for d, c in self._coeffs.items()}
        return out

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            if not f:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out._coeffs = {d: c * f for d, c in self._coeffs.items()}
            return out
        table: dict[int, Fraction] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                d = d1 + d2
                s = table.get(d, Fraction(0)) + c1 * c2
                if s:
                    table[d] = s
                else:
                    table.pop(d, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = table
        return out

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "LaurentPoly":
        f = _as_fraction(c)
        if not f:
            raise ZeroDivisionError("division of a polynomial by zero scalar")
        return self * (1 / f)

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            raise DomainError("negative power of a polynomial")
        out = LaurentPoly.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by x^d."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._coeffs = {k + d: c for k, c in self._coeffs.items()}
        return out

    def evaluate(self, t: Scalar) -> Fraction:
        t = _as_fraction(t)
        if t == 0:
            v = self.valuation()
            if v is not None and v < 0:
                raise PoleError("evaluation at 0 with negative valuation")
        return sum((c * t**d for d, c in self._coeffs.items()), Fraction(0))

    # -- comparison, display, serialization ---------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for d, c in self.items():
            if d == 0:
                term = format_rational(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{format_rational(mag)}*"
                term = f"{head}x" if d == 1 else f"{head}x^{d}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def to_json_obj(self) -> dict[str, str]:
        """Degree-keyed object, keys in increasing degree order."""
        return {str(d): format_rational(c) for d, c in self.items()}

    @classmethod
    def from_json_obj(cls, obj: dict[str, str]) -> "LaurentPoly":
        table: dict[int, Fraction] = {}
        for k, v in obj.items():
            table[int(k)] = parse_rational(str(v))
        return cls(table)


def _coerce(p: "LaurentPoly | Scalar") -> LaurentPoly:
    return p if isinstance(p, LaurentPoly) else LaurentPoly.const(p)


def poly_divmod(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Euclidean division f = q*g + r with deg r < deg g.

    Both inputs must be ordinary polynomials (valuation >= 0).
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    for name, p in (("dividend", f), ("divisor", g)):
        v = p.valuation()
        if v is not None and v < 0:
            raise DomainError(f"{name} has negative valuation; not an ordinary polynomial")
    q = LaurentPoly.zero()
    r = f
    dg = g.degree()
    lead_g = g.coeff(dg)
    while not r.is_zero and r.degree() >= dg:
        dr = r.degree()
        t = LaurentPoly.x_pow(dr - dg, r.coeff(dr) / lead_g)
        q = q + t
        r = r - t * g
    return q, r


def laurent_split(f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Split f into (nonnegative-degree part, negative-degree part)."""
    up = {d: c for d, c in f.items() if d >= 0}
    down = {d: c for d, c in f.items() if d < 0}
    return LaurentPoly(up), LaurentPoly(down)


def lagrange_interpolate(points: Iterable[tuple[Scalar, Scalar]]) -> LaurentPoly:
    """Unique polynomial of degree < len(points) through the given points."""
    pts = [(_as_fraction(x), _as_fraction(y)) for x, y in points]
    if not pts:
        raise DomainError("interpolation needs at least one point")
    nodes = [x for x, _ in pts]
    if len(set(nodes)) != len(nodes):
        raise DomainError("interpolation nodes must be pairwise distinct")
    total = LaurentPoly.zero()
    for i, (xi, yi) in enumerate(pts):
        basis = LaurentPoly.one()
        denom = Fraction(1)
        for j, (xj, _) in enumerate(pts):
            if j == i:
                continue
            basis = basis * LaurentPoly({1: 1, 0: -xj})
            denom *= xi - xj
        total = total + basis * (yi / denom)
    return total


def remainder_via_interpolation(f: LaurentPoly, nodes: Iterable[Scalar]) -> LaurentPoly:
    """Remainder of f modulo the monic polynomial with the given root set.

    The remainder is the unique polynomial of degree < #nodes agreeing
    with f at every node, so it is read off by exact interpolation.
    """
    ns = [_as_fraction(a) for a in nodes]
    if not ns:
        raise DomainError("remainder needs a nonempty root set")
    if len(set(ns)) != len(ns):
        raise DomainError("root set must be pairwise distinct")
    return lagrange_interpolate([(a, f.evaluate(a)) for a in ns])
