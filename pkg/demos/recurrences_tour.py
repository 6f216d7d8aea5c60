"""
Schur values from recurrent sequences
=====================================

Any sequence satisfying T_(m+2) = 3 T_(m+1) - 2 T_m has its values driven
by the root set A = {1, 2} of the characteristic polynomial.  Windowed
determinants of such sequences compute Schur values of A without ever
touching the letters themselves.
"""

from fractions import Fraction

from schurdiv import Alphabet, DegeneracyError, RecurrentSeq, gschur, houmu_ratio, recur_extend

A = Alphabet([1, 2])

# The Mersenne numbers 2^m - 1 satisfy the recurrence.  A sequence is
# stored as a window of 2n consecutive values plus its starting index;
# the constructor rejects windows that break the recurrence.
mersenne = RecurrentSeq((0, 1, 3, 7), m0=0, A=A)
print(f"T_m = 2^m - 1 on m in [0..3]: {[str(v) for v in mersenne.window]}")

# The window extends in both directions, fractions appearing backwards.
for m in (4, 10, -1, -3):
    print(f"   T_{m} = {recur_extend(mersenne, m)}")
assert recur_extend(mersenne, 10) == 2**10 - 1
assert recur_extend(mersenne, -3) == Fraction(2**-3) - 1

# Two sequences with the same recurrence, one index vector J of length 2:
# the ratio of the J-shifted window determinant to the unshifted one is
# S_J(A), independent of which seeds were chosen.
geometric = RecurrentSeq.from_seeds([1, 2], m0=0, A=A)  # 2^m
print(f"\nsecond sequence 2^m on [0..3]: {[str(v) for v in geometric.window]}")

J = (1, 1)
ratio = houmu_ratio([geometric, mersenne], J)
print(f"determinant ratio for J={J}: {ratio}")
assert ratio == gschur(J, A) == 2

# Different seeds, same answer.
other = [RecurrentSeq.from_seeds(s, m0=0, A=A) for s in ([5, -3], [Fraction(1, 7), 4])]
for J in [(1, 1), (0, 3), (-2, 1), (-4, -1)]:
    assert houmu_ratio(other, J) == gschur(J, A)
    print(f"   J={J!s:9} ratio = {gschur(J, A)}")

# Proportional seeds make the denominator determinant vanish; that is a
# degeneracy, reported as an error rather than a wrong value.
try:
    houmu_ratio([mersenne, mersenne], (1, 1))
except DegeneracyError as exc:
    print(f"\ndegenerate seeds rejected: {exc}")
else:
    raise AssertionError("expected a degeneracy error")

print("\nall checks passed")
