"""Two-sided companion matrices, Giambelli-type minors, and recurrence ratios.

The column of index k in the double companion matrix holds the coordinates
of the remainder of x^k in the basis 1, x, ..., x^(n-1); columns extend to
negative k through the reciprocal letters.  Every column is built twice,
once from the division remainder and once from the bialternant closed
form, and construction fails loudly if the two routes ever disagree.

Minors of this matrix on shifted column sets reproduce the bialternant of
an arbitrary integer index vector, and for weakly increasing vectors the
same value factors through a hook-labelled block determinant that couples
the alphabet with its reciprocal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .alphabet import Alphabet, dual, prod_u, root_poly
from .division import remainder_x_pow
from .errors import (
    ConsistencyError,
    DegeneracyError,
    DimensionError,
    DomainError,
    PoleError,
)
from .laurent import LaurentPoly
from .linalg import Matrix, det
from .schur import (
    FrobeniusCoords,
    IndexVector,
    as_index_vector,
    frobenius,
    gschur,
    hook_amp,
    is_weakly_increasing,
    schur_partition,
)


@dataclass(frozen=True)
class ColumnRange:
    """Inclusive range of column indices, possibly negative."""

    kmin: int
    kmax: int

    def __post_init__(self):
        if self.kmin > self.kmax:
            raise DomainError(f"empty column range {self.kmin}..{self.kmax}")

    def indices(self) -> range:
        return range(self.kmin, self.kmax + 1)


def _column_closed_form(A: Alphabet, k: int) -> list[Fraction]:
    """Column k via the bialternant: entry l is the staircase with slot l set to k."""
    n = len(A)
    return [gschur((0,) * l + (k - l,) + (0,) * (n - 1 - l), A) for l in range(n)]


def companion_column(A: Alphabet, k: int) -> list[Fraction]:
    """Coordinates of the remainder of x^k, checked against the closed form."""
    n = len(A)
    rem = remainder_x_pow(k, A)
    from_rem = [rem.coeff(l) for l in range(n)]
    if from_rem != _column_closed_form(A, k):
        raise ConsistencyError(f"companion column {k}: remainder and bialternant routes disagree")
    return from_rem


def double_companion(A: Alphabet, crange: ColumnRange) -> Matrix:
    """Matrix of remainder coordinates over the given column window."""
    n = len(A)
    if n == 0:
        raise DomainError("companion matrix of an empty alphabet")
    if crange.kmin < 0 and any(a == 0 for a in A):
        raise PoleError("negative columns need 0 outside the alphabet")
    cols = [companion_column(A, k) for k in crange.indices()]
    return Matrix([[cols[j][l] for j in range(len(cols))] for l in range(n)])


def companion_submatrix(A: Alphabet, I: Sequence[int]) -> Matrix:
    """Square minor on columns i_t + t (t = 0, ..., n-1) of the companion matrix."""
    I = as_index_vector(I)
    n = len(A)
    if len(I) != n:
        raise DimensionError(f"index vector of length {len(I)} against {n} letters")
    selected = [I[t] + t for t in range(n)]
    if min(selected, default=0) < 0 and any(a == 0 for a in A):
        raise PoleError("negative columns need 0 outside the alphabet")
    cols = [companion_column(A, k) for k in selected]
    return Matrix([[cols[j][l] for j in range(n)] for l in range(n)])


def double_vandermonde(A: Alphabet, crange: ColumnRange) -> Matrix:
    """Matrix of letter powers a_i^k over the given column window."""
    if crange.kmin < 0 and any(a == 0 for a in A):
        raise PoleError("negative powers need 0 outside the alphabet")
    return Matrix([[a**k for k in crange.indices()] for a in A])


def giambelli_general(J: Sequence[int], A: Alphabet) -> tuple[Matrix, Fraction]:
    """Minor of the companion matrix on columns j_k + k, with its determinant.

    Entry (l, k) is the bialternant of the near-staircase vector whose
    slot l holds j_k + k - l; the determinant reproduces gschur(J, A).
    """
    J = as_index_vector(J)
    n = len(A)
    if len(J) != n:
        raise DimensionError(f"index vector of length {len(J)} against {n} letters")
    entries = [
        [gschur((0,) * l + (J[k] + k - l,) + (0,) * (n - 1 - l), A) for k in range(n)]
        for l in range(n)
    ]
    m = Matrix(entries)
    return m, det(m)


@dataclass(frozen=True)
class HookLabel:
    """Name of one block-determinant entry: a hook partition over A or its dual."""

    partition: IndexVector
    alphabet: str  # "A" or "A^∨"
    block: str  # one of P, Q, M, N

    @property
    def text(self) -> str:
        parts = self.partition
        ones = sum(1 for p in parts if p == 1)
        last = parts[-1]
        if last == 1:
            ones -= 1  # the final part doubles as the displayed row
        if ones <= 2 and last <= 9:
            sub = "1" * ones + str(last)
        else:
            sub = (f"1^{ones}," if ones else "") + str(last)
        return f"S_{{{sub}}}({self.alphabet})"


@dataclass(frozen=True)
class GiambelliBlocks:
    """Blocks, hook data, and labels of the two-alphabet block determinant."""

    P: Matrix
    Q: Matrix
    M: Matrix
    N: Matrix
    neg_hooks: FrobeniusCoords  # (alpha | beta) of the reflected negative part
    pos_hooks: FrobeniusCoords  # (gamma | delta) of the nonnegative part
    labels: tuple[tuple[HookLabel, ...], ...]

    def assembled(self) -> Matrix:
        r1, r2 = self.P.rows, self.N.rows
        top = [list(self.P.row(i)) + list(self.Q.row(i)) for i in range(r1)]
        bottom = [list(self.M.row(i)) + list(self.N.row(i)) for i in range(r2)]
        return Matrix(top + bottom)


def giambelli_block(J: Sequence[int], A: Alphabet) -> tuple[GiambelliBlocks, Fraction]:
    """Block determinant of a weakly increasing J in Z^n over A and dual(A).

    The negative part of J, reflected, contributes hooks (alpha | beta)
    read in the reciprocal letters; the nonnegative part contributes
    (gamma | delta) in the plain letters.  Legs in the off-diagonal blocks
    are complemented to n - 1.  The determinant equals gschur(J, A).
    """
    J = as_index_vector(J)
    n = len(A)
    if len(J) != n:
        raise DimensionError(f"index vector of length {len(J)} against {n} letters")
    if not is_weakly_increasing(J):
        raise DomainError(f"{J} is not weakly increasing")
    if any(j < 0 for j in J) and any(a == 0 for a in A):
        raise PoleError("negative indices need 0 outside the alphabet")
    neg = tuple(j for j in J if j < 0)
    pos = tuple(j for j in J if j >= 0)
    nh = frobenius(tuple(-j for j in reversed(neg)))
    ph = frobenius(pos)
    alpha, beta = nh.alpha, nh.beta
    gamma, delta = ph.alpha, ph.beta
    r1, r2 = nh.rank, ph.rank
    Av = dual(A) if r1 else A  # dual only needed when negative hooks exist

    def s(part: IndexVector, letters: Alphabet) -> Fraction:
        return schur_partition(part, letters)

    P = Matrix(
        [[s(hook_amp(alpha[r1 - 1 - j], beta[r1 - 1 - i]), Av) for j in range(r1)] for i in range(r1)]
    )
    Q = Matrix(
        [[s(hook_amp(gamma[j], n - 1 - beta[r1 - 1 - i]), A) for j in range(r2)] for i in range(r1)]
    )
    M = Matrix(
        [[s(hook_amp(alpha[r1 - 1 - j], n - 1 - delta[i]), Av) for j in range(r1)] for i in range(r2)]
    )
    N = Matrix([[s(hook_amp(gamma[j], delta[i]), A) for j in range(r2)] for i in range(r2)])

    def lab(arm: int, leg: int, tag: str, block: str) -> HookLabel:
        return HookLabel(hook_amp(arm, leg), tag, block)

    labels: list[tuple[HookLabel, ...]] = []
    for i in range(r1):
        row = [lab(alpha[r1 - 1 - j], beta[r1 - 1 - i], "A^∨", "P") for j in range(r1)]
        row += [lab(gamma[j], n - 1 - beta[r1 - 1 - i], "A", "Q") for j in range(r2)]
        labels.append(tuple(row))
    for i in range(r2):
        row = [lab(alpha[r1 - 1 - j], n - 1 - delta[i], "A^∨", "M") for j in range(r1)]
        row += [lab(gamma[j], delta[i], "A", "N") for j in range(r2)]
        labels.append(tuple(row))

    blocks = GiambelliBlocks(P, Q, M, N, nh, ph, tuple(labels))
    value = det(blocks.assembled())
    return blocks, value


@dataclass(frozen=True)
class RecurrentSeq:
    """Window of 2n consecutive values of a sequence with root set A.

    The window must satisfy the linear recurrence whose characteristic
    polynomial is the monic root polynomial of A, checked on all n shifts
    that fit inside the window.
    """

    window: tuple[Fraction, ...]
    m0: int
    A: Alphabet

    def __post_init__(self):
        n = len(self.A)
        if n == 0:
            raise DomainError("recurrent sequence over an empty alphabet")
        w = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in self.window)
        object.__setattr__(self, "window", w)
        if len(w) != 2 * n:
            raise DomainError(f"window must hold 2n = {2 * n} values, got {len(w)}")
        p = _char_coeffs(self.A)
        for s in range(n):
            if sum(p[j] * w[s + j] for j in range(n + 1)) != 0:
                raise DomainError(f"window breaks the recurrence at shift {s}")

    @classmethod
    def from_seeds(cls, seeds: Sequence[Fraction | int], m0: int, A: Alphabet) -> "RecurrentSeq":
        """Extend n seed values forward to a full 2n window."""
        n = len(A)
        vals = [c if isinstance(c, Fraction) else Fraction(c) for c in seeds]
        if len(vals) != n:
            raise DomainError(f"need exactly n = {n} seed values, got {len(vals)}")
        p = _char_coeffs(A)
        while len(vals) < 2 * n:
            vals.append(-sum(p[j] * vals[len(vals) - n + j] for j in range(n)))
        return cls(tuple(vals), m0, A)


def _char_coeffs(A: Alphabet) -> list[Fraction]:
    """Coefficients p_0..p_n of the monic root polynomial of A."""
    rp = root_poly(A)
    return [rp.coeff(j) for j in range(len(A) + 1)]


def recur_extend(seq: RecurrentSeq, m: int) -> Fraction:
    """Value of the sequence at any index, extending the window both ways."""
    n = len(seq.A)
    p = _char_coeffs(seq.A)
    lo = seq.m0
    hi = seq.m0 + 2 * n - 1
    if lo <= m <= hi:
        return seq.window[m - lo]
    if m > hi:
        vals = list(seq.window[-n:])  # values at hi-n+1 .. hi
        for _ in range(m - hi):
            nxt = -sum(p[j] * vals[j] for j in range(n))
            vals = vals[1:] + [nxt]
        return vals[-1]
    if p[0] == 0:
        raise PoleError("backward extension needs 0 outside the alphabet")
    vals = list(seq.window[:n])  # values at lo .. lo+n-1
    for _ in range(lo - m):
        prev = -sum(p[j] * vals[j - 1] for j in range(1, n + 1)) / p[0]
        vals = [prev] + vals[:-1]
    return vals[0]


def houmu_ratio(seqs: Sequence[RecurrentSeq], J: Sequence[int]) -> Fraction:
    """Ratio of the two recurrence determinants |T^(k)_(j_l + l - 1)| / |T^(k)_(l - 1)|.

    All sequences must share one alphabet; the ratio is independent of the
    seeds whenever the denominator is nonzero and equals gschur(J, A).
    """
    J = as_index_vector(J)
    n = len(J)
    if len(seqs) != n:
        raise DimensionError(f"need {n} sequences for an index vector of length {n}")
    if n == 0:
        return Fraction(1)
    A = seqs[0].A
    if any(s.A != A for s in seqs):
        raise DomainError("sequences must share one alphabet")
    if len(A) != n:
        raise DimensionError(f"index vector of length {n} against {len(A)} letters")
    num = Matrix([[recur_extend(seqs[k], J[l] + l) for k in range(n)] for l in range(n)])
    den = Matrix([[recur_extend(seqs[k], l) for k in range(n)] for l in range(n)])
    d = det(den)
    if d == 0:
        raise DegeneracyError("seed sequences are linearly dependent")
    return det(num) / d
