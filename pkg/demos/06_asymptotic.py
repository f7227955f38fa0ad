"""
Infinite products and limit ratios
==================================

For an infinite product the statistics become limits of ratios of
neighbouring entries.  This works in floating point on a finite window.
A pure stream of geometrically shrinking whirls has ratios tending to zero,
whereas a stream that starts with a curl has finite nonzero limits.
"""

# %%
import numpy as np

from loopcrystal import asymptotic as asy

# The first phi ratios along row 1 roughly halve at every step.
narrow = asy.truncated_product(asy.WhirlStream((1.0, 1.0), 0.5), 120, 12)
print(np.array2string(np.array(asy.phi_sequence(narrow, 1)), precision=3))

# At width 60 the entries underflow before the ratios can settle.
pure = asy.truncated_product(asy.WhirlStream((1.0, 1.0), 0.5), 120, 60)
try:
    asy.limit_ratios(pure, 1)
except ZeroDivisionError as err:
    print("pure stream:", err)

# %%
stream = asy.WhirlStream((1.0, 1.5, 0.7), 0.5, curl=(0.6, 0.8, 0.5))
Y = asy.truncated_product(stream, 120, 60)
for k, s in asy.asym_stats(Y).items():
    print(f"k={k}: eps={s.eps:.12f} phi={s.phi:.12f} converged={s.converged}")

# %%
Z = asy.asym_e(Y, 1, 2.0)
print("eps_1 halves:", asy.limit_ratios(Z, 1).eps / asy.limit_ratios(Y, 1).eps)
print("relations hold:", asy.check_asym_axioms(Y, 2.0, 0.5).all_passed)

# %%
# Left multiplication by u_k(a) moves the phi family by a simple rule.
phi = {k: s.phi for k, s in asy.asym_stats(Y).items()}
print(asy.update_phi(phi, 2, 0.3, 3))
print({k: s.phi for k, s in asy.asym_stats(asy.left_chevalley(Y, 2, 0.3)).items()})
