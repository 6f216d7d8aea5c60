"""Alphabets of distinct rational letters and their complete functions.

The complete functions S^k of a formal difference of letter multisets are
defined through the generating series

    sum_k S^k z^k  =  prod_{b in minus} (1 - b z) / prod_{a in plus} (1 - a z).

A letter is either a rational or one of the symbols x / x^-1, so the same
series machinery yields polynomials in x, in x^-1, or plain rationals.
Coefficients are extracted by exact convolution, never by expansion of the
closed product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import DimensionError, DomainError, PoleError
from .laurent import LaurentPoly
from .rationals import format_rational


class Alphabet:
    """Ordered tuple of pairwise distinct rational letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Fraction | int]):
        ls = tuple(a if isinstance(a, Fraction) else Fraction(a) for a in letters)
        if len(set(ls)) != len(ls):
            raise DomainError("alphabet letters must be pairwise distinct")
        self.letters = ls

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> Fraction:
        return self.letters[i]

    def __contains__(self, x: object) -> bool:
        return x in self.letters

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Alphabet({list(self.letters)!r})"

    def __str__(self) -> str:
        return ",".join(format_rational(a) for a in self.letters)

    def drop(self, i: int) -> "Alphabet":
        """Alphabet with the i-th letter removed."""
        return Alphabet(self.letters[:i] + self.letters[i + 1 :])


class Symbol:
    """Marker generator standing for the Laurent variable x or its reciprocal."""

    __slots__ = ("name", "exponent")

    def __init__(self, name: str, exponent: int):
        self.name = name
        self.exponent = exponent

    def __repr__(self) -> str:
        return self.name


X = Symbol("x", 1)
X_INV = Symbol("x^-1", -1)

Generator = Union[Fraction, Symbol]


@dataclass(frozen=True)
class DiffArgument:
    """Formal difference of two generator multisets (plus minus minus)."""

    plus: tuple[Generator, ...] = ()
    minus: tuple[Generator, ...] = ()

    def negate(self) -> "DiffArgument":
        return DiffArgument(self.minus, self.plus)

    def __str__(self) -> str:
        def side(gens: tuple[Generator, ...]) -> str:
            return ",".join(g.name if isinstance(g, Symbol) else format_rational(g) for g in gens)

        if not self.minus:
            return f"({side(self.plus)})"
        return f"({side(self.plus)}) - ({side(self.minus)})"


def _gens(side: "Alphabet | Iterable[Generator | int] | None") -> tuple[Generator, ...]:
    if side is None:
        return ()
    if isinstance(side, Alphabet):
        return side.letters
    out: list[Generator] = []
    for g in side:
        if isinstance(g, Symbol):
            out.append(g)
        elif isinstance(g, Fraction):
            out.append(g)
        else:
            out.append(Fraction(g))
    return tuple(out)


def diff_arg(plus: "Alphabet | Iterable[Generator | int] | None" = None,
             minus: "Alphabet | Iterable[Generator | int] | None" = None) -> DiffArgument:
    """Build a DiffArgument, coercing alphabets and integers."""
    return DiffArgument(_gens(plus), _gens(minus))


def dual(A: Alphabet) -> Alphabet:
    """Letterwise reciprocals 1/a, preserving order."""
    if any(a == 0 for a in A):
        raise PoleError("dual of an alphabet containing 0")
    return Alphabet(1 / a for a in A)


def prod_u(A: Alphabet) -> Fraction:
    """Product of all letters."""
    out = Fraction(1)
    for a in A:
        out *= a
    return out


def resultant(A: Alphabet, B: Alphabet) -> Fraction:
    """prod_{a in A, b in B} (a - b)."""
    out = Fraction(1)
    for a in A:
        for b in B:
            out *= a - b
    return out


def vandermonde_delta(A: Alphabet) -> Fraction:
    """prod_{i < j} (a_j - a_i); nonzero because letters are distinct."""
    out = Fraction(1)
    ls = A.letters
    for i in range(len(ls)):
        for j in range(i + 1, len(ls)):
            out *= ls[j] - ls[i]
    return out


def _gen_poly(g: Generator) -> LaurentPoly:
    if isinstance(g, Symbol):
        return LaurentPoly.x_pow(g.exponent)
    return LaurentPoly.const(g)


def complete_series(arg: DiffArgument, kmax: int) -> list[LaurentPoly]:
    """[S^0, ..., S^kmax] of the difference argument.

    Multiplies in the numerator factors (1 - g z), then divides by the
    denominator factors via the geometric-series recurrence, keeping only
    the first kmax + 1 coefficients in z.
    """
    series = [LaurentPoly.one()] + [LaurentPoly.zero()] * kmax
    for g in arg.minus:
        f = _gen_poly(g)
        for i in range(kmax, 0, -1):
            series[i] = series[i] - f * series[i - 1]
    for g in arg.plus:
        f = _gen_poly(g)
        for i in range(1, kmax + 1):
            series[i] = series[i] + f * series[i - 1]
    return series


def complete_sym(k: int, arg: DiffArgument) -> LaurentPoly:
    """S^k of a difference argument; zero for k < 0, one for k = 0."""
    if k < 0:
        return LaurentPoly.zero()
    return complete_series(arg, k)[k]


def root_poly(A: "Alphabet | Sequence[Fraction]") -> LaurentPoly:
    """Monic polynomial prod_{a in A} (x - a)."""
    out = LaurentPoly.one()
    for a in A:
        out = out * LaurentPoly({1: 1, 0: -a})
    return out


def reciprocal_root_poly(B: "Alphabet | Sequence[Fraction]") -> LaurentPoly:
    """prod_{b in B} (x^-1 - b), a Laurent polynomial supported in [-|B|, 0]."""
    out = LaurentPoly.one()
    for b in B:
        out = out * LaurentPoly({-1: 1, 0: -b})
    return out
