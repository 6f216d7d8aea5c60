"""Companion matrices, the two Giambelli determinants, and recurrence ratios."""

import random
from fractions import Fraction

import pytest

from schurdiv import (
    Alphabet,
    ColumnRange,
    DegeneracyError,
    DomainError,
    Matrix,
    PoleError,
    RecurrentSeq,
    companion_submatrix,
    det,
    double_companion,
    double_vandermonde,
    dual,
    giambelli_block,
    giambelli_general,
    gschur,
    houmu_ratio,
    mat_inverse,
    mat_mul,
    mat_pow_signed,
    recur_extend,
    schur_partition,
)

A12 = Alphabet([1, 2])
A6 = Alphabet([1, 2, 3, 5, 7, 11])
J6 = (-4, -3, -2, 1, 3, 4)


def frac_matrix(rows):
    return Matrix([[Fraction(e) for e in row] for row in rows])


def test_double_companion_window():
    C = double_companion(A12, ColumnRange(-1, 2))
    assert C == frac_matrix([[Fraction(3, 2), 1, 0, -2], [Fraction(-1, 2), 0, 1, 3]])


def test_double_companion_pole():
    with pytest.raises(PoleError):
        double_companion(Alphabet([0, 1]), ColumnRange(-1, 0))
    with pytest.raises(DomainError):
        ColumnRange(2, 1)


def test_companion_submatrices():
    C1 = companion_submatrix(A12, (1, 1))
    assert C1 == frac_matrix([[0, -2], [1, 3]])
    assert companion_submatrix(A12, (0, 0)) == Matrix.identity(2)
    assert companion_submatrix(A12, (2, 2)) == frac_matrix([[-2, -6], [3, 7]])
    # negative selection equals the inverse of the positive one
    assert companion_submatrix(A12, (-1, -1)) == mat_inverse(C1)


def test_shift_power_law():
    C1 = companion_submatrix(A12, (1, 1))
    for m in range(-4, 5):
        assert mat_pow_signed(C1, m) == companion_submatrix(A12, (m, m))


def test_vandermonde_factorization():
    crange = ColumnRange(-3, 3)
    V0 = Matrix([[a**j for j in range(2)] for a in A12])
    assert mat_mul(V0, double_companion(A12, crange)) == double_vandermonde(A12, crange)
    assert double_vandermonde(A12, ColumnRange(0, 1)) == frac_matrix([[1, 1], [1, 2]])


def test_giambelli_general_worked_example():
    matrix, value = giambelli_general((1, 1), A12)
    assert matrix == frac_matrix([[0, -2], [1, 3]])
    assert value == 2 == gschur((1, 1), A12)


def test_giambelli_general_random_vectors():
    rng = random.Random(31)
    for _ in range(25):
        n = rng.randint(1, 5)
        A = Alphabet([Fraction(v, 3) for v in rng.sample(range(1, 60), n)])
        J = tuple(rng.randint(-5, 5) for _ in range(n))
        _, value = giambelli_general(J, A)
        assert value == gschur(J, A)


def test_giambelli_block_small():
    blocks, value = giambelli_block((-1, 0), A12)
    assert value == Fraction(3, 2) == gschur((-1, 0), A12)
    assert blocks.neg_hooks.rank == 1 and blocks.pos_hooks.rank == 0
    with pytest.raises(DomainError):
        giambelli_block((1, 0), A12)


def test_block_label_matrix_golden():
    blocks, value = giambelli_block(J6, A6)
    texts = [[lab.text for lab in row] for row in blocks.labels]
    assert texts == [
        ["S_{12}(A^∨)", "S_{14}(A^∨)", "S_{1^4,4}(A)", "S_{1^4,2}(A)"],
        ["S_{112}(A^∨)", "S_{114}(A^∨)", "S_{1^3,4}(A)", "S_{1^3,2}(A)"],
        ["S_{1^3,2}(A^∨)", "S_{1^3,4}(A^∨)", "S_{114}(A)", "S_{112}(A)"],
        ["S_{1^5,2}(A^∨)", "S_{1^5,4}(A^∨)", "S_{4}(A)", "S_{2}(A)"],
    ]
    assert blocks.neg_hooks.alpha == (3, 1) and blocks.neg_hooks.beta == (2, 1)
    assert blocks.pos_hooks.alpha == (3, 1) and blocks.pos_hooks.beta == (2, 0)
    assert value == gschur(J6, A6)
    # diagonal blocks are themselves Schur values of fixed partitions
    assert det(blocks.P) == schur_partition((2, 3, 4), dual(A6))
    assert det(blocks.N) == schur_partition((1, 3, 4), A6)


def test_block_assembly_shape():
    blocks, _ = giambelli_block(J6, A6)
    assembled = blocks.assembled()
    assert assembled.rows == assembled.cols == 4
    assert det(assembled) == gschur(J6, A6)


def test_recurrent_seq_validation():
    geometric = RecurrentSeq((1, 2, 4, 8), 0, A12)
    assert geometric.window == (1, 2, 4, 8)
    with pytest.raises(DomainError):
        RecurrentSeq((1, 2, 4, 9), 0, A12)  # breaks the recurrence
    with pytest.raises(DomainError):
        RecurrentSeq((1, 2, 4), 0, A12)  # window too short


def test_recur_extend():
    geometric = RecurrentSeq((1, 2, 4, 8), 0, A12)
    assert recur_extend(geometric, 4) == 16
    assert recur_extend(geometric, -1) == Fraction(1, 2)
    assert recur_extend(geometric, 0) == 1
    ones = RecurrentSeq((1, 1, 1, 1), 0, A12)
    assert recur_extend(ones, 100) == 1 and recur_extend(ones, -57) == 1
    mersenne = RecurrentSeq((0, 1, 3, 7), 0, A12)  # T_m = 2^m - 1
    assert recur_extend(mersenne, 4) == 15
    assert recur_extend(mersenne, -1) == Fraction(-1, 2)
    assert recur_extend(mersenne, -3) == Fraction(-7, 8)


def test_from_seeds():
    geometric = RecurrentSeq.from_seeds([1, 2], 0, A12)
    assert geometric.window == (1, 2, 4, 8)
    with pytest.raises(DomainError):
        RecurrentSeq.from_seeds([1, 2, 3], 0, A12)


def test_houmu_ratio_worked_example():
    seqs = [RecurrentSeq((1, 2, 4, 8), 0, A12), RecurrentSeq((1, 1, 1, 1), 0, A12)]
    assert houmu_ratio(seqs, (1, 1)) == 2 == gschur((1, 1), A12)
    with pytest.raises(DegeneracyError):
        houmu_ratio([seqs[0], seqs[0]], (1, 1))
    with pytest.raises(DomainError):
        houmu_ratio(seqs, (1, 1, 1))


def test_houmu_matches_bialternant_random():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(1, 4)
        A = Alphabet([Fraction(v) for v in rng.sample(range(1, 30), n)])
        seqs = [
            RecurrentSeq.from_seeds([Fraction(rng.randint(-9, 9)) for _ in range(n)], 0, A)
            for _ in range(n)
        ]
        J = tuple(rng.randint(-4, 4) for _ in range(n))
        try:
            ratio = houmu_ratio(seqs, J)
        except DegeneracyError:
            continue
        assert ratio == gschur(J, A)
