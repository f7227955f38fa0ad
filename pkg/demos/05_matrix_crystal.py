"""
The crystal on banded unipotent matrices
========================================

On matrices with at most m superdiagonals, e_k^c multiplies by a Chevalley
generator on each side.  Sending a point to its whirl product intertwines
this with the crystal on X_M^m, and the R-matrix orbits become fibres.
"""

# %%
from fractions import Fraction

from loopcrystal import ProductPoint, UCrystalContext, from_factors, product_e, quotient_check, u_e, u_stats
from loopcrystal.loopsym import SkewShape, energy, schur_pushforward
from loopcrystal.exact import poly_eval
from loopcrystal.whirl import render

x = ProductPoint.of((2, 3), (5, 7))
ctx = UCrystalContext(2, 2)
Y = from_factors(x)
print("(eps_1, phi_1) =", u_stats(Y, 1, ctx))
Z = u_e(Y, 1, 2, ctx)
print(render(Z, range(1, 3), range(1, 5)))
print("equals M(e_1^2 x):", Z == from_factors(product_e(x, 1, 2)))

# %%
print(quotient_check(x, 1, 2))

# %%
# Pulling back a loop Schur function along e_k^c removes corners of one color.
print(schur_pushforward(SkewShape((1,)), 0, 2, 2, x))  # 78/7

# %%
# The energy is fixed by e_k^c for k != 0 mod n and moves at k = 0.
D = energy(2, 2)
for k in (1, 2):
    print(k, poly_eval(D, product_e(x, k, Fraction(3)).assignment()))
