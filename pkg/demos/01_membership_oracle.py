"""
Membership oracle for the trigonometric approximation
======================================================

The set under study is the image of the elliptope (unit-diagonal PSD
matrices) under the entrywise map (2/pi)*arcsin. Deciding membership is one
entrywise inverse map plus one eigendecomposition.
"""

import numpy as np

from trigcut import (
    SymMatrix,
    TaCandidate,
    arcsin_map,
    rank1_cut_matrix,
    sample_elliptope,
    sin_map,
    ta_membership,
)

# %%
# Cut matrices are fixed points of the arcsin map, so they are members.

cut = rank1_cut_matrix([1, -1, 1, -1])
print("cut matrix:\n", cut.entries)
print("arcsin map leaves it unchanged:", np.array_equal(arcsin_map(cut.matrix).entries, cut.entries))

verdict = ta_membership(TaCandidate(cut.matrix))
print("member:", verdict.in_ta, " preimage min eigenvalue:", verdict.preimage_min_eigenvalue)

# %%
# A generic member: push any correlation matrix through the arcsin map.

x = sample_elliptope(5, 3, seed=2024)
member = TaCandidate(arcsin_map(x.matrix))
verdict = ta_membership(member)
print("\nsampled member accepted:", verdict.in_ta)
print("round trip error:", np.max(np.abs(sin_map(member.matrix).entries - x.entries)))

# %%
# A non-member with unit diagonal: all off-diagonal entries -1/2. The sum of
# its three off-diagonal entries is -1.5 < -1, which no convex combination of
# cut matrices can reach, and the oracle rejects it with a witness.

bad = np.full((3, 3), -0.5)
np.fill_diagonal(bad, 1.0)
verdict = ta_membership(TaCandidate(SymMatrix(bad)))
print("\nnegative control member:", verdict.in_ta)
print("witness eigenvalue of the preimage:", verdict.preimage_min_eigenvalue)
print("(exactly 1 - sqrt(2) =", 1 - np.sqrt(2), ")")
