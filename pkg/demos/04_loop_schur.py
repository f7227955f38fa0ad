"""
Loop Schur functions
====================

A loop Schur function sums over semistandard tableaux, with each cell
contributing a variable whose color is its content shifted by r, mod n.
The same polynomial is a determinant in loop elementary symmetric
functions, and its value at a point is a minor of the whirl product.
"""

# %%
from loopcrystal import ProductPoint, SkewShape, energy, jacobi_trudi_schur, poly_eval, tableaux_schur
from loopcrystal.loopsym import energy_shape, schur_value, tableaux
from loopcrystal.whirl import from_factors

shape = SkewShape((2,))
for T in tableaux(shape, 2):
    print(T)
print(tableaux_schur(shape, 0, 3, 2))

# %%
# Tableaux and determinant agree as polynomials.
shape = SkewShape((3, 2, 1), (1,))
for r in (1, 2, 3):
    p, q = tableaux_schur(shape, r, 3, 3), jacobi_trudi_schur(shape, r, 3, 3)
    print(f"r={r}: {len(p)} terms, equal: {p == q}")

# %%
# Numerically, the determinant is a minor of M(x).
x = ProductPoint.of((1, 2, 3), (2, 1, 1), (3, 1, 2))
print(schur_value(shape, 1, from_factors(x)), "=", poly_eval(tableaux_schur(shape, 1, 3, 3), x.assignment()))

# %%
# The energy is the loop Schur function of a dilated staircase.
print(energy_shape(3, 3))
print(poly_eval(energy(2, 2), ProductPoint.of((2, 3), (5, 7)).assignment()))
