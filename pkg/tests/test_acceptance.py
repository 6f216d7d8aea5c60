"""Acceptance criteria.

One test per criterion, run at the contract scale: 200 global trials,
seed 0, alphabets up to six letters, exact rational arithmetic with zero
tolerance everywhere.  Each test prints a single PASS/FAIL line (visible
with -s; the -v test status carries the same information).
"""

from fractions import Fraction

from schurdiv import (
    Alphabet,
    LaurentPoly,
    det,
    dual,
    euclid_remainder_multischur,
    giambelli_block,
    giambelli_general,
    gschur,
    schur_partition,
)
from schurdiv.verify import run_verify

TRIALS = 200
SEED = 0
NMAX = 6

A6 = Alphabet([1, 2, 3, 5, 7, 11])
J6 = (-4, -3, -2, 1, 3, 4)


def _run(criterion: int, name: str, suites: list[str]) -> None:
    report = run_verify(trials=TRIALS, seed=SEED, nmax=NMAX, suites=suites)
    failures = [f for s in report.suites for f in s.failures]
    status = "PASS" if not failures else "FAIL"
    counts = ", ".join(f"{s.name}={s.trials}" for s in report.suites)
    print(f"ACCEPTANCE {criterion} {status}: {name} ({counts})")
    assert not failures, failures[:5]


def test_criterion_1_negative_power_remainder_forms():
    # both closed forms and the reciprocal-root form against the
    # interpolation oracle, 200 trials, n <= 6, k <= 10, |B| <= 5
    _run(1, "negative-power remainder forms agree with the oracle", ["power_remainders"])


def test_criterion_2_euclid_remainder_proportionality():
    # 50 trials per (n, m) pair over n <= 5, n <= m <= 9, every r until
    # termination; plus the two desk-scale calibration pins
    x = LaurentPoly.x_pow(1)
    A = Alphabet([1, 2])
    B = Alphabet([3])
    assert euclid_remainder_multischur(1, 3, A, B) == 2 * x  # true remainder -2x, scalar -1
    assert euclid_remainder_multischur(2, 3, A, B) == 8 * LaurentPoly.one()  # true 2, scalar 4
    _run(2, "Euclidean remainders proportional to their determinant forms", ["euclid_schur"])


def test_criterion_3_giambelli_determinants():
    # staircase-minor determinant and hook-block determinant, 200 trials each
    _run(3, "both Giambelli determinants equal the bialternant", ["giambelli_minor", "giambelli_block"])


def test_criterion_4_six_letter_example():
    # frozen label matrix, then 20 random alphabets for the three routes
    blocks, value = giambelli_block(J6, A6)
    texts = [[lab.text for lab in row] for row in blocks.labels]
    assert texts == [
        ["S_{12}(A^∨)", "S_{14}(A^∨)", "S_{1^4,4}(A)", "S_{1^4,2}(A)"],
        ["S_{112}(A^∨)", "S_{114}(A^∨)", "S_{1^3,4}(A)", "S_{1^3,2}(A)"],
        ["S_{1^3,2}(A^∨)", "S_{1^3,4}(A^∨)", "S_{114}(A)", "S_{112}(A)"],
        ["S_{1^5,2}(A^∨)", "S_{1^5,4}(A^∨)", "S_{4}(A)", "S_{2}(A)"],
    ]
    assert value == gschur(J6, A6) == giambelli_general(J6, A6)[1]
    assert det(blocks.P) == schur_partition((2, 3, 4), dual(A6))
    assert det(blocks.N) == schur_partition((1, 3, 4), A6)
    _run(4, "six-letter worked example (labels, three routes, diagonal blocks)", ["block_example"])


def test_criterion_5_companion_factorization():
    # Vandermonde factorization on [-6, 6], shift powers on [-4, 4],
    # the dual-construction consistency check armed on every column
    _run(5, "double companion factorization and shift powers", ["companion"])


def test_criterion_6_structural_identities():
    # duality, functional reconstruction and closed forms, product kernel,
    # coefficient expansion; 200 trials each
    _run(6, "structural identities of the division calculus", ["structural"])


def test_criterion_7_recurrence_ratio():
    # 100 random seed windows; dependent seeds must raise, never mislead
    _run(7, "recurrent-sequence determinant ratio equals the bialternant", ["houmu"])


def test_criterion_8_oracle_floor():
    # naive reimplementations vs the production routines, 500 instances each
    _run(8, "division, interpolation, and determinant oracles agree", ["oracle_floor"])


def test_exactness_spot_check():
    # everything above runs over Fraction; make sure nothing drifted into floats
    value = gschur((4, -2), Alphabet([1, 2]))
    assert isinstance(value, Fraction) and value == Fraction(-31, 2)
