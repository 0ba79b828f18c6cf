"""
Relaxation, rounding, and the 2/pi sandwich
===========================================

End-to-end on the unit triangle: exact cut by enumeration, the elliptope
relaxation bound by factorized gradient ascent, random-hyperplane rounding,
and the empirical check that rounding correlations follow the arcsin map.
"""

import numpy as np

from trigcut import (
    CutInstance,
    SymMatrix,
    arcsin_map,
    brute_force_opt,
    elliptope_maximize,
    graph_to_objective,
    hyperplane_rounding,
    sandwich_report,
)

# %%
# The triangle with unit weights. Best cut separates one vertex: value 2.
# The relaxation bound is 9/4 at the matrix with all off-diagonals -1/2.

triangle = graph_to_objective(3, [(1, 2, 1.0), (2, 3, 1.0), (1, 3, 1.0)], form="cut-value")
brute = brute_force_opt(triangle)
print("exact max cut:", triangle.constant + brute.optimum, "at", brute.argmax)

sol = elliptope_maximize(triangle, seed=1)
print("relaxation bound:", triangle.constant + sol.value)
print("solution off-diagonals:", np.round(sol.x_matrix.entries[np.triu_indices(3, 1)], 6))

# %%
# Rounding: sign(V g) for Gaussian g. On the triangle a single sample already
# achieves the optimum fairly often.

rounding = hyperplane_rounding(sol, samples=10_000, seed=7)
print("\nbest rounded cut value:", triangle.constant + rounding.best_value, "cut", rounding.best_cut)

# %%
# The empirical mean of x x^T over many samples follows (2/pi) arcsin(X)
# entrywise; this is what connects the relaxation to the trigonometric
# approximation in the first place.

big = hyperplane_rounding(sol, samples=500_000, seed=11)
target = arcsin_map(sol.x_matrix.matrix).entries
print("\nempirical mean vs arcsin map, entry (1,2):",
      big.empirical_mean_matrix.entries[0, 1], "vs", target[0, 1])

# %%
# The sandwich certificate on a PSD objective: (2/pi)*sdp <= exact <= sdp.

rng = np.random.default_rng(5)
b = rng.standard_normal((8, 8))
report = sandwich_report(CutInstance(SymMatrix(b.T @ b)), seed=3)
print(f"\nPSD instance: sdp {report.sdp_value:.6f}, exact {report.brute_value:.6f}, "
      f"lower bound {report.lower_bound:.6f}")
print("sandwich holds:", report.holds, " ratio exact/sdp:", round(report.ratio, 4))
