"""
The birational R-matrix
=======================

Swapping two adjacent whirls without changing their product is possible in
exactly one nontrivial way.  The swaps generate an action of the symmetric
group that commutes with the crystal structure.
"""

# %%
import random

from loopcrystal import ProductPoint, apply_s, apply_word, from_factors, kappa, product_e
from loopcrystal.crystal import random_point
from loopcrystal.rmatrix import orbit, reduced_words

x = ProductPoint.of((2, 3), (5, 7))
print("kappa_1 =", kappa(*x.factors, 1), " kappa_2 =", kappa(*x.factors, 2))
y = apply_s(1, x)
print("s_1 x =", [[str(v) for v in f.coords] for f in y.factors])
print("same product:", from_factors(y) == from_factors(x))
print("involution:", apply_s(1, y) == x)

# %%
# Braid relation on three factors with n = 3.
rng = random.Random(11)
z = random_point(rng, 3, 3)
print("braid:", apply_word([1, 2, 1], z) == apply_word([2, 1, 2], z))

# %%
# The S_3 orbit: six points, one matrix.
points = orbit(z)
print(len(reduced_words(3)), "group elements;", len({from_factors(p) for p in points}), "distinct product")

# %%
# The swaps commute with e_k^c.
print(all(apply_s(1, product_e(z, k, 3)) == product_e(apply_s(1, z), k, 3) for k in (1, 2, 3)))
