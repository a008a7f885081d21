"""Torus weights, the finite groups H and H_J, and the components they cut out.

Run: python3 demos/toric_components.py
"""

from extspringer import toric
from extspringer import verify

# Exponents of v_k = e^{mu_k} in the coordinates z_1..z_11 for n = 12.
for k in range(1, 12):
    print(f"v_{k:<2}", list(toric.v_exponents(12, k).exps))
print("mu_4", [str(c) for c in toric.mu_coefficients(12, 4)])

# A frame fixes which coordinates are J (constant), K (zero) or I (free).
frame = toric.ToricFrame.from_jk(4, J=[1, 3], K=[2])
print("frame", frame.to_json(), "d* =", toric.d_star(frame))

# H acts on the tuples (c_j) of roots of unity; orbits match the label phi.
orbits = verify.h_orbits(frame)
for orbit in orbits:
    print("  orbit", orbit[:4], "... phi =", toric.phi(frame, orbit[0]).r)

# The center permutes the components cyclically, giving these characters.
print("characters", toric.component_characters(frame))

# Monomials invariant under H_J split into an H-invariant part plus an ideal term.
f = toric.ExponentVector(6, [1, 2, 3, 1, 5])
dec = toric.invariant_sum_decomposition(f, J=[4], c=[0])
print("g =", list(dec.g.exps), "m =", dec.m, "scalar omega^", dec.scalar_exponent)
