"""Division remainders and their closed determinant forms.

Remainders modulo the monic polynomial with root set A admit multi-Schur
determinant expressions: an ordinary power x^k needs one column carrying
the plain alphabet next to n-1 columns carrying A - x, while a negative
power works in the reciprocal letters.  The Lagrange sum functional ties
the two pictures together and is the engine behind the reconstruction and
shifted-complete identities exercised by the verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .alphabet import (
    Alphabet,
    X,
    X_INV,
    complete_sym,
    diff_arg,
    dual,
    prod_u,
    root_poly,
)
from .errors import DomainError, PoleError
from .laurent import LaurentPoly, poly_divmod
from .schur import MultiSchurSpec, multi_schur, multi_schur_uniform


@dataclass(frozen=True)
class TailSymmetricExpr:
    """Rule p(x_1; tail) that must be symmetric in the tail letters.

    The rule receives the head letter and the remaining letters and
    returns a rational or a Laurent polynomial in x.
    """

    rule: Callable[[Fraction, tuple[Fraction, ...]], "LaurentPoly | Fraction"]
    label: str = ""


def _as_poly(v: "LaurentPoly | Fraction") -> LaurentPoly:
    return v if isinstance(v, LaurentPoly) else LaurentPoly.const(v)


def lagrange_functional(p: TailSymmetricExpr, A: Alphabet) -> LaurentPoly:
    """Sum of p(a; A - a) / prod_{a' != a} (a - a') over the letters of A.

    For n >= 3 the first summand is re-evaluated under a rotated tail as a
    cheap symmetry spot check on the supplied rule.
    """
    n = len(A)
    if n == 0:
        raise DomainError("functional over an empty alphabet")
    total = LaurentPoly.zero()
    for i, a in enumerate(A):
        tail = A.drop(i).letters
        val = _as_poly(p.rule(a, tail))
        if i == 0 and n >= 3:
            rotated = tail[1:] + tail[:1]
            if _as_poly(p.rule(a, rotated)) != val:
                raise DomainError(f"rule {p.label!r} is not symmetric in the tail")
        denom = Fraction(1)
        for t in tail:
            denom *= a - t
        total = total + val / denom
    return total


def head_power_expr(e: int) -> TailSymmetricExpr:
    """x_1^e as a tail-symmetric rule; heads must be nonzero when e < 0."""

    def rule(head: Fraction, tail: tuple[Fraction, ...]) -> Fraction:
        if head == 0 and e < 0:
            raise PoleError("negative power of a zero letter")
        return head**e

    return TailSymmetricExpr(rule, label=f"x1^{e}")


def head_complete_expr(k: int, B: Alphabet) -> TailSymmetricExpr:
    """S^k(x_1^-1 - B) as a tail-symmetric rule."""

    def rule(head: Fraction, tail: tuple[Fraction, ...]) -> Fraction:
        if head == 0:
            raise PoleError("reciprocal of a zero letter")
        return complete_sym(k, diff_arg(plus=[1 / head], minus=B)).as_constant()

    return TailSymmetricExpr(rule, label=f"S^{k}(x1^-1 - B)")


def reconstruction_expr(r: LaurentPoly) -> TailSymmetricExpr:
    """r(x_1) * prod_{t in tail} (x - t), the interpolation kernel."""

    def rule(head: Fraction, tail: tuple[Fraction, ...]) -> LaurentPoly:
        return root_poly(tail) * r.evaluate(head)

    return TailSymmetricExpr(rule, label="r(x1) * R(x, tail)")


def remainder_x_pow(k: int, A: Alphabet) -> LaurentPoly:
    """Remainder of x^k modulo prod_{a in A}(x - a), for any integer k.

    Nonnegative k: (-1)^(n-1) |S^*(A - x), ..., S^*(A)| with index vector
    (1^(n-1), k - n + 1).  Negative k = -e: the same determinant shape in
    the reciprocal letters, scaled by (-1)^(n-1) x^(n-1).
    """
    n = len(A)
    if n == 0:
        raise DomainError("remainder modulo an empty root set")
    sign = Fraction(-1) ** (n - 1)
    if k >= 0:
        spec = MultiSchurSpec(
            (1,) * (n - 1) + (k - n + 1,),
            (diff_arg(plus=A, minus=[X]),) * (n - 1) + (diff_arg(plus=A),),
        )
        return multi_schur(spec) * sign
    if any(a == 0 for a in A):
        raise PoleError("negative power modulo a root set containing 0")
    Av = dual(A)
    spec = MultiSchurSpec(
        (1,) * (n - 1) + (-k,),
        (diff_arg(plus=Av, minus=[X_INV]),) * (n - 1) + (diff_arg(plus=Av),),
    )
    return multi_schur(spec).shift(n - 1) * sign


def inverse_power_rect_form(e: int, A: Alphabet) -> LaurentPoly:
    """Remainder of x^-e as the rectangular form S_(e^(n-1))(A - x) * u^-e."""
    n = len(A)
    if n == 0:
        raise DomainError("remainder modulo an empty root set")
    if e < 0:
        raise DomainError("exponent e must be nonnegative")
    if any(a == 0 for a in A) and e > 0:
        raise PoleError("negative power modulo a root set containing 0")
    rect = multi_schur_uniform((e,) * (n - 1), diff_arg(plus=A, minus=[X]))
    return rect * prod_u(A) ** -e if e else rect


def reciprocal_roots_remainder_form(A: Alphabet, B: Alphabet) -> LaurentPoly:
    """Closed form for the remainder of prod_{b in B}(x^-1 - b) modulo the A roots."""
    n = len(A)
    if n == 0:
        raise DomainError("remainder modulo an empty root set")
    if any(a == 0 for a in A):
        raise PoleError("reciprocal-root remainder needs 0 outside A")
    Av = dual(A)
    m = len(B)
    spec = MultiSchurSpec(
        (1,) * (n - 1) + (m,),
        (diff_arg(plus=Av, minus=[X_INV]),) * (n - 1) + (diff_arg(plus=Av, minus=B),),
    )
    return multi_schur(spec).shift(n - 1) * Fraction(-1) ** (n - 1)


def remainder_laurent(f: LaurentPoly, A: Alphabet) -> LaurentPoly:
    """Remainder of an arbitrary Laurent polynomial, term by term."""
    if not f.is_zero and f.valuation() < 0 and any(a == 0 for a in A):
        raise PoleError("negative valuation modulo a root set containing 0")
    total = LaurentPoly.zero()
    for k, c in f.items():
        total = total + remainder_x_pow(k, A) * c
    return total


def euclid_remainder_multischur(r: int, m: int, A: Alphabet, B: Alphabet) -> LaurentPoly:
    """Multi-Schur form of the r-th Euclidean remainder of S^m(x - B) by the A root polynomial.

    Index vector (1^(n-r), (m-n+r)^r); the first n - r columns carry A - x
    and the last r carry A - B.  Proportional to the classical remainder;
    callers compare by cross-multiplication and record the scalar.
    """
    n = len(A)
    if n == 0:
        raise DomainError("division by an empty root set")
    if not 1 <= r <= n:
        raise DomainError(f"remainder index r={r} outside 1..{n}")
    if m < n:
        raise DomainError(f"dividend degree m={m} below divisor degree {n}")
    spec = MultiSchurSpec(
        (1,) * (n - r) + (m - n + r,) * r,
        (diff_arg(plus=A, minus=[X]),) * (n - r) + (diff_arg(plus=A, minus=B),) * r,
    )
    return multi_schur(spec)


@dataclass(frozen=True)
class EuclidTrace:
    """Quotients and remainders of the classical Euclidean scheme.

    remainders[i] is the i-th remainder; the sequence ends with the first
    zero remainder.  quotients[i] is the quotient produced alongside it.
    """

    dividend: LaurentPoly
    divisor: LaurentPoly
    quotients: tuple[LaurentPoly, ...]
    remainders: tuple[LaurentPoly, ...]


def euclid_remainders(f: LaurentPoly, g: LaurentPoly) -> EuclidTrace:
    """Full remainder sequence of f by g, stopping at the zero remainder."""
    quotients: list[LaurentPoly] = []
    remainders: list[LaurentPoly] = []
    prev, cur = f, g
    while True:
        q, r = poly_divmod(prev, cur)
        quotients.append(q)
        remainders.append(r)
        if r.is_zero:
            break
        prev, cur = cur, r
    return EuclidTrace(f, g, tuple(quotients), tuple(remainders))
