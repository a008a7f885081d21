"""Row-strict tableaux, their I/J/K labels, blocks and Springer inversions.

Run: python3 demos/tableaux_and_inversions.py
"""

from extspringer import inversions as inv
from extspringer import tableaux as tb
from extspringer.partitions import Partition, springer_dim

# A tableau of shape [4,4,2,2], rows separated by "/".
sigma = tb.RowStrictTableau.parse("3,4,5,6/1,2,9,10/7,8/11,12")
print("sigma        ", sigma, " shape", sigma.shape)

# Each i < n is labelled by where i+1 sits: directly right (J),
# further right and not lower (I), or anywhere else (K).
dec = tb.ijk_decomposition(sigma)
print("I, J, K      ", sorted(dec.I), sorted(dec.J), sorted(dec.K))

# Consecutive labels sitting side by side form blocks; their gcd is d_sigma.
print("blocks       ", tb.blocks(sigma))
print("d_sigma      ", tb.max_divisor(sigma))

# Merging each block of size 2 gives a tableau of shape [2,2,1,1].
q = tb.quotient_tableau(sigma, 2)
print("sigma/2      ", q)

# Springer inversions count the dimension of the cell indexed by sigma.
invs = inv.springer_inversions(sigma)
print("|sigma|      ", len(invs), invs.sorted())
print("|sigma/2|    ", inv.inversion_count(q))

# Springer pairs always number dim Sp_lambda, whichever tableau is chosen.
print("pairs, dim   ", inv.pair_count(sigma), springer_dim(sigma.shape))

# The cells are indexed by all row-strict tableaux of the shape.
lam = Partition([2, 2])
for t in tb.enumerate_rst(lam):
    print(f"  {t.to_text():<10} |sigma|={inv.inversion_count(t)}  d={tb.max_divisor(t)}")
