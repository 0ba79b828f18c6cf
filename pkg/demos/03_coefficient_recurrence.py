"""
Taylor coefficients of sin(lam * arcsin x)
==========================================

The coefficients obey a two-step recurrence whose factors are nonnegative for
lam in [0, 1]; by Schoenberg's characterization of positivity-preserving
entrywise maps, that nonnegativity is exactly what makes the star-likeness
argument work. At odd integers the recurrence truncates and recovers the
classical multiple-angle polynomials.
"""

import math

import numpy as np

from trigcut import nonnegativity_certificate, series_eval, taylor_coeffs, truncation_check

# %%
# The first coefficients at lam = 1/2. Even indices vanish identically.

table = taylor_coeffs(0.5, 9)
for i, c in enumerate(table.coeffs):
    print(f"a_{i} = {c:.10g}")

# %%
# Nonnegativity across the whole unit interval, checked exactly (the
# recurrence multiplies nonnegative factors, so there is no roundoff excuse).

report = nonnegativity_certificate(np.linspace(0, 1, 101), max_order=500)
print("\nnonnegativity certificate passed:", report.passed)

# %%
# Truncated series against the closed form.

table = taylor_coeffs(0.8, 400)
for x in (0.1, 0.5, 0.9):
    approx = series_eval(table, x)
    exact = math.sin(0.8 * math.asin(x))
    print(f"x={x}: series {approx:.15f}  closed form {exact:.15f}  gap {abs(approx - exact):.2e}")

# %%
# Truncation at odd integers: sin(3t) = 3 sin t - 4 sin^3 t and
# sin(5t) = 5 sin t - 20 sin^3 t + 16 sin^5 t come straight out of the
# recurrence, with every later coefficient exactly zero.

for m in (3, 5):
    check = truncation_check(m, max_order=50)
    head = taylor_coeffs(float(m), m).coeffs
    poly = " + ".join(f"{head[i]:g} x^{i}" for i in range(1, m + 1, 2))
    print(f"m={m}: truncates exactly: {check.passed};  polynomial {poly}")
