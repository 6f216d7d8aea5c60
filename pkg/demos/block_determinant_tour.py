"""
One Schur value, three determinants
===================================

The index vector J = (-4, -3, -2, 1, 3, 4) mixes negative and positive
parts.  Its Schur value over a six-letter alphabet can be computed as a
bialternant, as a staircase minor of the companion matrix, or as a compact
block determinant whose entries are hook Schur functions in the letters A
and their reciprocals A^v.  All three agree exactly.
"""

from schurdiv import Alphabet, det, dual, giambelli_block, giambelli_general, gschur, schur_partition

J = (-4, -3, -2, 1, 3, 4)
A = Alphabet([1, 2, 3, 5, 7, 11])
print(f"J = {J}")
print(f"A = {A}")

# Route 1: the bialternant, a ratio of two 6x6 determinants.
value = gschur(J, A)
print(f"\nbialternant value      S_J(A) = {value}")

# Route 2: a 6x6 minor of the double companion matrix.  Works for any
# integer index vector, weakly increasing or not.
minor, minor_value = giambelli_general(J, A)
assert minor_value == value
print(f"staircase minor (6x6)  det    = {minor_value}")

# Route 3: the block determinant.  The negative part of J, reflected,
# becomes a partition with diagonal hooks (alpha | beta); the positive
# part gives (gamma | delta).  rank 2 + rank 2 hooks here, so the 6x6
# problem collapses to a 4x4 determinant.
blocks, block_value = giambelli_block(J, A)
assert block_value == value
nh, ph = blocks.neg_hooks, blocks.pos_hooks
print(f"hook block (4x4)       det    = {block_value}")
print(f"\nreflected negative part: hooks (alpha|beta) = ({nh.alpha}|{nh.beta})")
print(f"nonnegative part:        hooks (gamma|delta) = ({ph.alpha}|{ph.beta})")

# Every entry of the block matrix is a single hook Schur function; the
# labels say which hook over which letters.
print("\nentry labels:")
width = max(len(lab.text) for row in blocks.labels for lab in row)
for row in blocks.labels:
    print("   " + "  ".join(lab.text.ljust(width) for lab in row))
assert blocks.labels[0][0].text == "S_{12}(A^∨)"

# The two diagonal blocks are themselves Giambelli determinants of the two
# partition halves, one in the reciprocal letters and one in the plain.
half_neg = det(blocks.P)
half_pos = det(blocks.N)
print(f"\ndet P = {half_neg}  (= S_(2,3,4)(A^v))")
print(f"det N = {half_pos}  (= S_(1,3,4)(A))")
assert half_neg == schur_partition((2, 3, 4), dual(A))
assert half_pos == schur_partition((1, 3, 4), A)

# The full value is not the product of the halves: the off-diagonal
# blocks couple the two alphabets.
assert value != half_neg * half_pos
assert det(blocks.assembled()) == value

print("\nall three routes agree")
