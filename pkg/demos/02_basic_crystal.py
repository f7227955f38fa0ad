"""
The basic geometric crystal and its products
============================================

Each factor of X_M^m is an n-torus; e_k^c rescales two adjacent
coordinates.  On the product the parameter is split across factors, and
the result still satisfies the geometric crystal relations.
"""

# %%
import random
from fractions import Fraction

from loopcrystal import CartanData, ProductPoint, check_axioms, product_e, product_stats, random_point

x = ProductPoint.of((2, 3), (5, 7))
eps, phi, gamma = product_stats(x, 1)
print(f"eps_1 = {eps}, phi_1 = {phi}, gamma_1 = {gamma}")

# %%
y = product_e(x, 1, 2)
for f in y.factors:
    print([str(v) for v in f.coords])
print("eps_1 after:", product_stats(y, 1)[0], "(was", eps, "then divided by c = 2)")

# %%
# The Cartan matrix used in the relations; n = 2 is the degenerate case with a_12 = -2.
for n in (2, 3, 4):
    print(n, CartanData(n).matrix())

# %%
# Check every relation at a random point with n = 3, m = 3.
rng = random.Random(5)
report = check_axioms(random_point(rng, 3, 3), Fraction(5, 2), Fraction(1, 3))
print(f"{len(report.results)} relations checked; all pass: {report.all_passed}")
print({s: report.count(s) for s in ("pass", "skip", "fail", "pole")})
