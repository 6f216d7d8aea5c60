"""Bialternants, multi-Schur determinants, and partition bookkeeping."""

import random
from fractions import Fraction

import pytest

from schurdiv import (
    Alphabet,
    DimensionError,
    DomainError,
    LaurentPoly,
    MultiSchurSpec,
    PoleError,
    box_complement,
    diff_arg,
    dual,
    frobenius,
    gschur,
    hook_amp,
    multi_schur,
    multi_schur_uniform,
    prod_u,
    schur_partition,
)
from schurdiv.alphabet import X

x = LaurentPoly.x_pow(1)
A12 = Alphabet([1, 2])


def test_gschur_worked_examples():
    assert gschur((1, 1), A12) == 2
    assert gschur((4, -2), A12) == Fraction(-31, 2)
    assert gschur((), Alphabet([])) == 1
    a = Fraction(5, 3)
    for k in range(-3, 4):
        assert gschur((k,), Alphabet([a])) == a**k


def test_gschur_degenerate_and_poles():
    # exponent collision forces a repeated row, so the determinant vanishes
    assert gschur((1, 0), A12) == 0
    with pytest.raises(DimensionError):
        gschur((1,), A12)
    with pytest.raises(PoleError):
        gschur((-1, 0), Alphabet([0, 1]))


def test_gschur_index_shift_is_scaling():
    # adding a constant c to every index multiplies by u^c
    rng = random.Random(9)
    for _ in range(25):
        n = rng.randint(1, 4)
        A = Alphabet([Fraction(v) for v in rng.sample(range(1, 40), n)])
        J = tuple(rng.randint(-4, 4) for _ in range(n))
        c = rng.randint(-2, 3)
        shifted = tuple(j + c for j in J)
        assert gschur(shifted, A) == gschur(J, A) * prod_u(A) ** c


def test_multi_schur_worked_example():
    spec = MultiSchurSpec((1, 2), (diff_arg(plus=A12, minus=[X]), diff_arg(plus=A12)))
    assert multi_schur(spec) == 6 - 7 * x


def test_multi_schur_validation():
    with pytest.raises(DimensionError):
        MultiSchurSpec((1, 2), (diff_arg(plus=A12),))
    with pytest.raises(DimensionError):
        MultiSchurSpec((1,), (diff_arg(plus=A12),), I=(0, 0))


def test_multi_schur_empty():
    assert multi_schur(MultiSchurSpec((), ())) == LaurentPoly.one()


def test_multi_schur_uniform_matches_bialternant():
    rng = random.Random(21)
    for _ in range(30):
        n = rng.randint(1, 5)
        A = Alphabet([Fraction(v, 2) for v in rng.sample(range(1, 50), n)])
        P = tuple(sorted(rng.randint(0, 6) for _ in range(n)))
        lhs = multi_schur_uniform(P, diff_arg(plus=A)).as_constant()
        assert lhs == gschur(P, A)


def test_schur_partition_pads():
    A = Alphabet([1, 2, 3])
    assert schur_partition((2,), A) == gschur((0, 0, 2), A)
    assert schur_partition((), A) == 1
    with pytest.raises(DomainError):
        schur_partition((2, 1), A)  # not weakly increasing


def test_box_complement():
    assert box_complement((1, 2), 3, 2) == (1, 2)
    assert box_complement((0, 0), 2, 2) == (2, 2)
    assert box_complement((2, 2), 2, 2) == (0, 0)
    with pytest.raises(DomainError):
        box_complement((3,), 2, 1)  # part exceeds the box
    with pytest.raises(DomainError):
        box_complement((1,), 2, 2)  # wrong length


def test_frobenius_coordinates():
    fc = frobenius((2, 3, 4))
    assert fc.rank == 2
    assert fc.alpha == (3, 1)
    assert fc.beta == (2, 1)
    fc2 = frobenius((1, 3, 4))
    assert fc2.alpha == (3, 1) and fc2.beta == (2, 0)
    empty = frobenius(())
    assert empty.rank == 0 and empty.alpha == () and empty.beta == ()


def test_hook_amp():
    assert hook_amp(3, 2) == (1, 1, 4)
    assert hook_amp(0, 0) == (1,)
    assert hook_amp(0, 2) == (1, 1, 1)
    # arm/leg coordinates of a single hook invert hook_amp
    fc = frobenius(hook_amp(3, 2))
    assert fc.rank == 1 and fc.alpha == (3,) and fc.beta == (2,)
