"""Betti numbers of Springer and extended Springer fibers.

Run: python3 demos/poincare_polynomials.py
"""

from extspringer import poincare as pc
from extspringer.partitions import Partition

lam = Partition([6, 6])
print("P(Sp_[6,6])      ", pc.springer_poincare(lam))
print("P(ext Sp_[6,6])  ", pc.extended_poincare(lam))

# The extended polynomial splits over the divisors d of lambda, each quotient
# shape weighted by Euler's totient and shifted by the drop in dimension.
for d, weight, shift, mu in pc.totient_terms(lam):
    print(f"  d={d}: {weight} * t^{shift} * P(Sp_[{mu}]) = {pc.springer_poincare(mu)}")

# Splitting by characters of the center Z_12: chi_i only sees tableaux whose
# maximal divisor is a multiple of 12/gcd(12, i).
eq = pc.equivariant_poincare(lam)
for i, p in enumerate(eq.by_char):
    if p:
        print(f"  chi_{i:<2} {p}")

# Stalk of the Lusztig sheaf at x_lambda for chi_6 on [4,4,2,2].
stalk = pc.lusztig_stalk_poincare(Partition([4, 4, 2, 2]), 6)
print("stalk chi_6      ", f"t^{stalk.shift} ({stalk.poly})")

# The cells and how the center cycles through each tableau's copies.
for orbit in pc.center_orbits(pc.extended_cells(Partition([2, 2]))):
    print("  orbit", [(c.tableau.to_text(), c.r, c.dim) for c in orbit])
