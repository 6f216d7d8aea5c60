"""Schur functions for integer index vectors.

Two determinant routes live here.  The bialternant `gschur` divides
|a_k^(j_l + l - 1)| by the Vandermonde determinant and accepts any
J in Z^n, well beyond partitions.  The multi-Schur determinant
|S^(j_k - i_l + k - l)(arg_k)| takes one difference argument per column
and produces Laurent polynomials when the arguments carry x or x^-1.
Index vectors follow the weakly increasing convention throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .alphabet import Alphabet, DiffArgument, complete_series, diff_arg, vandermonde_delta
from .errors import DimensionError, DomainError, PoleError
from .laurent import LaurentPoly
from .linalg import Matrix, det

IndexVector = tuple[int, ...]


def as_index_vector(J: Sequence[int]) -> IndexVector:
    return tuple(int(j) for j in J)


def is_weakly_increasing(J: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(J, J[1:]))


def is_partition(J: Sequence[int]) -> bool:
    """Weakly increasing with nonnegative parts."""
    return is_weakly_increasing(J) and all(j >= 0 for j in J)


def gschur(J: Sequence[int], A: Alphabet) -> Fraction:
    """Bialternant ratio |a_k^(j_l + l - 1)| / |a_k^(l - 1)| for J in Z^n."""
    J = as_index_vector(J)
    n = len(J)
    if n != len(A):
        raise DimensionError(f"index vector of length {n} against {len(A)} letters")
    if n == 0:
        return Fraction(1)
    exps = [j + l for l, j in enumerate(J)]
    if min(exps) < 0 and any(a == 0 for a in A):
        raise PoleError("negative exponent on a zero letter")
    num = Matrix([[a**e for a in A] for e in exps])
    return det(num) / vandermonde_delta(A)


@dataclass(frozen=True)
class MultiSchurSpec:
    """Index vectors and per-column arguments of a multi-Schur determinant."""

    J: IndexVector
    columns: tuple[DiffArgument, ...]
    I: IndexVector = ()

    def __post_init__(self):
        object.__setattr__(self, "J", as_index_vector(self.J))
        object.__setattr__(self, "I", as_index_vector(self.I) if self.I else (0,) * len(self.J))
        if len(self.columns) != len(self.J):
            raise DimensionError("one column argument required per index entry")
        if len(self.I) != len(self.J):
            raise DimensionError("row and column index vectors must have equal length")


def multi_schur(spec: MultiSchurSpec) -> LaurentPoly:
    """Determinant |S^(j_k - i_l + k - l)(arg_k)|, rows l, columns k."""
    n = len(spec.J)
    if n == 0:
        return LaurentPoly.one()
    cols: list[list[LaurentPoly]] = []
    for k in range(n):
        top = max(spec.J[k] - spec.I[l] + k - l for l in range(n))
        series = complete_series(spec.columns[k], max(top, 0))
        col = []
        for l in range(n):
            idx = spec.J[k] - spec.I[l] + k - l
            col.append(series[idx] if idx >= 0 else LaurentPoly.zero())
        cols.append(col)
    m = Matrix([[cols[k][l] for k in range(n)] for l in range(n)])
    out = det(m)
    return out if isinstance(out, LaurentPoly) else LaurentPoly.const(out)


def multi_schur_uniform(J: Sequence[int], arg: DiffArgument, I: Sequence[int] = ()) -> LaurentPoly:
    """Multi-Schur determinant with the same argument in every column."""
    J = as_index_vector(J)
    return multi_schur(MultiSchurSpec(J, (arg,) * len(J), as_index_vector(I)))


def schur_partition(P: Sequence[int], A: Alphabet) -> Fraction:
    """Classical Schur function of a partition with at most |A| parts.

    Routed through the bialternant after front-padding with zero parts.
    """
    P = as_index_vector(P)
    if not is_partition(P):
        raise DomainError(f"{P} is not a partition")
    n = len(A)
    if len(P) > n:
        raise DomainError(f"partition with {len(P)} parts needs at most {n}")
    return gschur((0,) * (n - len(P)) + P, A)


def box_complement(I: Sequence[int], m: int, n: int) -> IndexVector:
    """Complement of the partition I inside the m^n box, reading backwards."""
    I = as_index_vector(I)
    if len(I) != n:
        raise DimensionError(f"partition of length {len(I)} in a box of height {n}")
    if not is_partition(I):
        raise DomainError(f"{I} is not a partition")
    if I and I[-1] > m:
        raise DomainError(f"part {I[-1]} exceeds box width {m}")
    return tuple(m - i for i in reversed(I))


@dataclass(frozen=True)
class FrobeniusCoords:
    """Arm/leg coordinates (alpha | beta) of a partition's diagonal hooks."""

    alpha: IndexVector
    beta: IndexVector

    @property
    def rank(self) -> int:
        return len(self.alpha)


def frobenius(P: Sequence[int]) -> FrobeniusCoords:
    """Frobenius coordinates alpha_i = lam_i - i, beta_i = lam'_i - i."""
    P = as_index_vector(P)
    if not is_partition(P):
        raise DomainError(f"{P} is not a partition")
    lam = sorted(P, reverse=True)
    rank = 0
    while rank < len(lam) and lam[rank] >= rank + 1:
        rank += 1
    conj = [sum(1 for l in lam if l >= i) for i in range(1, rank + 1)]
    alpha = tuple(lam[i] - (i + 1) for i in range(rank))
    beta = tuple(conj[i] - (i + 1) for i in range(rank))
    return FrobeniusCoords(alpha, beta)


def hook_amp(i: int, j: int) -> IndexVector:
    """Hook partition with arm i and leg j: j ones below a row of i + 1."""
    if i < 0 or j < 0:
        raise DomainError("hook coordinates must be nonnegative")
    return (1,) * j + (i + 1,)
