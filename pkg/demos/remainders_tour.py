"""
Division remainders without dividing
====================================

Remainders modulo (x - 1)(x - 2), three ways: schoolbook long division,
Lagrange interpolation, and the closed determinant forms.  Everything is
an exact rational; every comparison below is ==, not approx.
"""

from fractions import Fraction

from schurdiv import (
    Alphabet,
    ColumnRange,
    LaurentPoly,
    double_companion,
    poly_divmod,
    remainder_laurent,
    remainder_via_interpolation,
    remainder_x_pow,
    root_poly,
)

x = LaurentPoly.x_pow(1)
A = Alphabet([1, 2])
R = root_poly(A)  # x^2 - 3x + 2
print(f"modulus  R(x) = {R}")

# Long division of x^5: quotient and remainder satisfy f = q*R + r exactly.
f = x**5
q, r = poly_divmod(f, R)
print(f"\nx^5      = ({q}) * R(x) + ({r})")
assert f == q * R + r

# The same remainder from interpolation: r is the unique polynomial of
# degree < 2 agreeing with f on the roots.
assert remainder_via_interpolation(f, A) == r

# And from the determinant closed form, no division performed at all.
assert remainder_x_pow(5, A) == r

# Negative powers have remainders too: x^-1 is invertible modulo R because
# no root is zero.  Long division cannot produce this one.
r_inv = remainder_x_pow(-1, A)
print(f"x^-1     = {r_inv}  (mod R)")
assert r_inv == LaurentPoly({0: Fraction(3, 2), 1: Fraction(-1, 2)})
# check it really inverts x: x * r(x) leaves remainder 1
assert remainder_laurent(x * r_inv, A) == LaurentPoly.one()

# One row per power: the remainder coordinates over a window of powers
# form the double companion matrix (columns = powers, rows = coordinates).
window = ColumnRange(-2, 3)
C = double_companion(A, window)
print(f"\nremainder coordinates of x^k, k in [{window.kmin}..{window.kmax}]:")
for i in range(C.rows):
    print("   " + "  ".join(str(C.entry(i, j)).rjust(6) for j in range(C.cols)))
for j, k in enumerate(range(window.kmin, window.kmax + 1)):
    col = LaurentPoly({i: C.entry(i, j) for i in range(C.rows)})
    assert col == remainder_x_pow(k, A)

# Linearity ties it together: any Laurent polynomial reduces term by term.
g = 5 * x**4 - x + LaurentPoly({-2: Fraction(1, 3)})
print(f"\ng(x)     = {g}")
print(f"g mod R  = {remainder_laurent(g, A)}")
assert remainder_laurent(g, A) == remainder_via_interpolation(g, A)

print("\nall checks passed")
