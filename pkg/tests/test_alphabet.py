"""Alphabets, difference arguments, and complete symmetric functions."""

import random
from fractions import Fraction

import pytest

from schurdiv import (
    Alphabet,
    DomainError,
    LaurentPoly,
    PoleError,
    X,
    X_INV,
    complete_series,
    complete_sym,
    diff_arg,
    dual,
    prod_u,
    reciprocal_root_poly,
    resultant,
    root_poly,
    vandermonde_delta,
)

x = LaurentPoly.x_pow(1)
A12 = Alphabet([1, 2])


def test_alphabet_basics():
    A = Alphabet([1, Fraction(5, 3), -4])
    assert len(A) == 3
    assert Fraction(5, 3) in A
    assert str(A) == "1,5/3,-4"
    assert A.drop(1) == Alphabet([1, -4])
    with pytest.raises(DomainError):
        Alphabet([1, Fraction(2, 2)])


def test_dual_and_products():
    assert dual(A12) == Alphabet([1, Fraction(1, 2)])
    assert prod_u(A12) == 2
    assert resultant(A12, Alphabet([3])) == (1 - 3) * (2 - 3)
    assert vandermonde_delta(Alphabet([1, 2, 4])) == (2 - 1) * (4 - 1) * (4 - 2)
    assert vandermonde_delta(Alphabet([])) == 1
    with pytest.raises(PoleError):
        dual(Alphabet([0, 1]))


def test_root_polys():
    assert root_poly(A12) == x**2 - 3 * x + 2
    assert root_poly(Alphabet([])) == LaurentPoly.one()
    assert reciprocal_root_poly(A12) == LaurentPoly(
        {-2: Fraction(1), -1: Fraction(-3), 0: Fraction(2)}
    )


def test_diff_argument_forms():
    arg = diff_arg(plus=A12, minus=[X])
    assert str(arg) == "(1,2) - (x)"
    neg = arg.negate()
    assert neg.plus == arg.minus and neg.minus == arg.plus
    assert str(diff_arg(plus=[X_INV])) == "(x^-1)"


def test_complete_sym_rational_values():
    # h_k over two letters
    assert complete_sym(0, diff_arg(plus=A12)).as_constant() == 1
    assert complete_sym(1, diff_arg(plus=A12)).as_constant() == 3
    assert complete_sym(2, diff_arg(plus=A12)).as_constant() == 7
    assert complete_sym(3, diff_arg(plus=A12)).as_constant() == 15
    assert complete_sym(-1, diff_arg(plus=A12)).is_zero
    # pure subtraction: elementary symmetric functions with signs
    assert complete_sym(1, diff_arg(minus=A12)).as_constant() == -3
    assert complete_sym(2, diff_arg(minus=A12)).as_constant() == 2
    assert complete_sym(3, diff_arg(minus=A12)).is_zero


def test_complete_sym_symbolic():
    # S^1(A - x) = a1 + a2 - x
    assert complete_sym(1, diff_arg(plus=A12, minus=[X])) == 3 - x
    # S^n(x - A) is the monic root polynomial
    assert complete_sym(2, diff_arg(plus=[X], minus=A12)) == root_poly(A12)
    # S^k(A^dual - x^-1) carries negative degrees
    val = complete_sym(1, diff_arg(plus=dual(A12), minus=[X_INV]))
    assert val == LaurentPoly({-1: Fraction(-1), 0: Fraction(3, 2)})


def test_series_inverse_pair():
    rng = random.Random(2)
    for _ in range(40):
        letters = rng.sample(range(1, 30), rng.randint(0, 4))
        A = Alphabet([Fraction(v, 3) for v in letters])
        B_letters = rng.sample(range(-30, -1), rng.randint(0, 3))
        B = Alphabet([Fraction(v) for v in B_letters])
        fwd = complete_series(diff_arg(plus=A, minus=B), 6)
        bwd = complete_series(diff_arg(plus=B, minus=A), 6)
        for k in range(7):
            conv = sum((fwd[i] * bwd[k - i] for i in range(k + 1)), LaurentPoly.zero())
            assert conv == (LaurentPoly.one() if k == 0 else LaurentPoly.zero())


def test_geometric_series_single_letter():
    # 1/(1 - az) expands with S^k(a) = a^k
    a = Fraction(3, 2)
    series = complete_series(diff_arg(plus=[a]), 5)
    for k in range(6):
        assert series[k].as_constant() == a**k
