"""Exact matrices over the rationals or over Laurent polynomials.

Determinants over rational entries use the Bareiss fraction-free scheme
(all interior divisions are exact); matrices with polynomial entries fall
back to division-free Laplace expansion, memoized over row subsets.  The
Laplace route doubles as an independent oracle for the Bareiss route.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegeneracyError, DimensionError
from .laurent import LaurentPoly

Entry = Fraction | LaurentPoly


class Matrix:
    """Rectangular matrix with immutable entry storage."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        rows = tuple(tuple(r) for r in entries)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise DimensionError("ragged rows in matrix literal")
        self._rows = rows
        self.rows = len(rows)
        self.cols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Entry:
        return self._rows[i][j]

    def row(self, i: int) -> tuple[Entry, ...]:
        return self._rows[i]

    def to_lists(self) -> list[list[Entry]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> "Matrix":
        return Matrix([[self._rows[i][j] for i in range(self.rows)] for j in range(self.cols)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def all_rational(self) -> bool:
        return all(isinstance(e, Fraction) for r in self._rows for e in r)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in r) for r in self._rows)
        return f"Matrix[{body}]"


def det(m: Matrix) -> Entry:
    """Determinant; exact for both rational and polynomial entries."""
    if not m.is_square:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 0:
        return Fraction(1)
    if m.all_rational():
        return _det_bareiss(m)
    return det_cofactor(m)


def _det_bareiss(m: Matrix) -> Fraction:
    n = m.rows
    a = [list(r) for r in m.to_lists()]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Bareiss interior quotients have no remainder
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(m: Matrix) -> Entry:
    """Division-free Laplace expansion, memoized over remaining-row subsets.

    Works over any commutative ring of entries; used as the production
    route for polynomial matrices and as the oracle for rational ones.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of a {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    zero: Entry = LaurentPoly.zero() if not m.all_rational() else Fraction(0)
    one: Entry = LaurentPoly.one() if not m.all_rational() else Fraction(1)
    states: dict[frozenset[int], Entry] = {frozenset(range(n)): one}
    for col in range(n):
        nxt: dict[frozenset[int], Entry] = {}
        for rows_left, val in states.items():
            for pos, r in enumerate(sorted(rows_left)):
                e = m.entry(r, col)
                if isinstance(e, LaurentPoly) and e.is_zero:
                    continue
                if isinstance(e, Fraction) and e == 0:
                    continue
                term = val * e
                if pos % 2:
                    term = -term
                key = rows_left - {r}
                acc = nxt.get(key)
                nxt[key] = term if acc is None else acc + term
        states = nxt
        if not states:
            return zero
    return states.get(frozenset(), zero)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc: Entry = Fraction(0)
            for k in range(a.cols):
                acc = acc + a.entry(i, k) * b.entry(k, j)
            row.append(acc)
        out.append(row)
    return Matrix(out)


def mat_inverse(m: Matrix) -> Matrix:
    """Exact inverse of a square rational matrix by Gauss-Jordan elimination."""
    if not m.is_square:
        raise DimensionError("inverse of a non-square matrix")
    if not m.all_rational():
        raise DimensionError("inverse implemented over rational entries only")
    n = m.rows
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m.to_lists())]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot_row is None:
            raise DegeneracyError("singular matrix has no inverse")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return Matrix([r[n:] for r in a])


def mat_pow_signed(m: Matrix, e: int) -> Matrix:
    """m**e for any integer e; negative powers go through the exact inverse."""
    if not m.is_square:
        raise DimensionError("power of a non-square matrix")
    if e < 0:
        return mat_pow_signed(mat_inverse(m), -e)
    out = Matrix.identity(m.rows)
    base = m
    while e:
        if e & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        e >>= 1
    return out
