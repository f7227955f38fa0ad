"""
Whirls and their products
=========================

A whirl is an n-periodic unipotent matrix with one nonzero superdiagonal.
Products of m whirls have m superdiagonals whose entries are loop
elementary symmetric functions of the whirl parameters.
"""

# %%
from fractions import Fraction

from loopcrystal import ProductPoint, entry, from_factors, loop_e, poly_eval, whirl
from loopcrystal.whirl import render

# Two whirls with n = 2: M(2, 3) and M(5, 7).
A, B = whirl((2, 3)), whirl((5, 7))
print(render(A, range(1, 4), range(1, 6)))

# %%
# Their product carries two diagonals: 7, 10 on the first and 14, 15 on the second.
x = ProductPoint.of((2, 3), (5, 7))
Y = from_factors(x)
print(render(Y, range(1, 4), range(1, 6)))
assert Y == A @ B

# %%
# Each entry y_{i,i+r} is e_r^{(i)} evaluated at the whirl parameters.
point = x.assignment()
for i in (1, 2):
    for r in (1, 2):
        poly = loop_e(r, i, 2, 2)
        print(f"e_{r}^({i}) = {poly}  ->  {poly_eval(poly, point)}  (matrix entry {entry(Y, i, i + r)})")

# %%
# Rational parameters stay exact.
z = ProductPoint.of((Fraction(1, 3), 2, Fraction(5, 4)), (1, Fraction(2, 7), 3))
print(render(from_factors(z), range(1, 4), range(1, 6)))
