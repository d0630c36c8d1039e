"""
The effect index of a 2x2 table
===============================

A table P counts how often each outcome B followed each intervention A.
This walk-through computes the effect index and checks that several
familiar association measures reduce to it.
"""

import numpy as np

from causal_interfaces import FrequencyTable, canonicalize, measures, row_normalize, symmetric_confusion

# Rows are the intervention A = 0, 1; columns are the outcome B = 0, 1.
p = FrequencyTable.from_matrix([[0.23, 0.25], [0.20, 0.32]])
r = row_normalize(p)
print("row-normalized R:\n", np.round(r.as_lists(), 6))

###############################################################################
# The effect index is the gap between the two rows in the B = 1 column.
# It equals the determinant of R and also trace(R) - 1.

m = measures(p)
print(f"effect index       {m.epsilon_hat:.6f}")
print(f"det R              {m.det_r:.6f}")
print(f"trace R - 1        {m.trace_r - 1:.6f}")
print(f"Cov / Var(A)       {m.covariance / m.variance_a:.6f}")
print(f"AUC                {m.auc:.6f}  (= 1/2 + eps/2)")

###############################################################################
# Swapping the outcome labels flips the sign. Canonicalization swaps the
# columns back so the determinant is nonnegative.

flipped = p.swap_columns()
print("\nflipped effect index:", round(measures(flipped).epsilon_hat, 6))
back, record = canonicalize(flipped)
print("columns swapped back:", record.columns_swapped, back.as_lists())

###############################################################################
# The symmetric decomposition writes P as a causal diagonal part plus a
# rank-one confusion table C.

dec = symmetric_confusion(p)
print("\nconfusion C:\n", np.round(dec.confusion.matrix, 6))
print("det C:", f"{np.linalg.det(dec.confusion.matrix):.2e}")
