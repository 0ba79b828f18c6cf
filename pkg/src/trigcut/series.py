"""Taylor coefficients of sin(lam * arcsin x): recurrence, evaluation, and
the certificates built on them.

The function solves (1 - x^2) f'' - x f' + lam^2 f = 0, which forces the
two-step coefficient recurrence

    a_{n+2} = (n^2 - lam^2) / ((n+2)(n+1)) * a_n,   a_0 = 0, a_1 = lam.

For lam in [0, 1] every factor is nonnegative, so all coefficients are
nonnegative: by Schoenberg's characterization the entrywise map preserves
positive semidefiniteness. At odd integers lam = m the factor vanishes at
n = m and the series truncates to a degree-m polynomial (the sin(m*theta)
expansion in sin(theta)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .report import CertificateReport, fmt

MAX_ORDER_CAP = 10**6


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Coefficients a_0..a_N at fixed lam; a_0 = 0, a_1 = lam, even entries 0."""

    lam: float
    coeffs: np.ndarray

    @property
    def max_order(self) -> int:
        return len(self.coeffs) - 1


def taylor_coeffs(lam: float, max_order: int) -> CoefficientTable:
    """Forward recurrence for a_0..a_N; coefficients kept in float64.

    For lam in [0, 1] the recurrence multiplies nonnegative factors, so there
    is no cancellation and floats lose nothing; at odd integer lam the factor
    (n^2 - lam^2) is exactly zero in floating point, so truncation is exact.
    """
    if max_order < 1:
        raise ValueError("max_order must be at least 1")
    if max_order > MAX_ORDER_CAP:
        raise ValueError(f"max_order {max_order} exceeds the cap {MAX_ORDER_CAP}")
    if not math.isfinite(lam):
        raise ValueError("lam must be finite")
    coeffs = np.zeros(max_order + 1)
    odd_count = (max_order + 1) // 2  # indices 1, 3, ..., and lam itself is a_1
    n = np.arange(1, 2 * odd_count - 2, 2, dtype=np.float64)
    factors = (n * n - lam * lam) / ((n + 2.0) * (n + 1.0))
    coeffs[1 : 2 * odd_count : 2] = np.cumprod(np.concatenate(([lam], factors)))
    coeffs.setflags(write=False)
    return CoefficientTable(lam=float(lam), coeffs=coeffs)


def series_eval(table: CoefficientTable, x: float, margin: float = 0.05) -> float:
    """Horner evaluation of the truncated series at x.

    |x| must stay at least ``margin`` away from 1 so the discarded tail is
    negligible at the table's order (default margin 0.05 with N = 400 leaves
    a tail below 1e-9).
    """
    if not 0.0 < margin < 1.0:
        raise ValueError("margin must lie in (0, 1)")
    bound = 1.0 - margin
    if abs(x) > bound + 1e-12:
        raise ValueError(f"|x| must be at most {bound:.17g}; the truncation tail is not negligible")
    return float(np.polynomial.polynomial.polyval(x, table.coeffs))


def nonnegativity_certificate(lambda_grid, max_order: int) -> CertificateReport:
    """Exact (tolerance-free) nonnegativity of a_0..a_N across a lam grid in [0, 1].

    For lam in [0, 1] every recurrence factor is nonnegative, so a negative
    coefficient would be a genuine failure, never roundoff; the comparison is
    an exact float test and the report carries the minimum coefficient seen.
    """
    grid = np.asarray(lambda_grid, dtype=np.float64)
    if grid.size == 0:
        raise ValueError("lambda grid must be nonempty")
    if np.min(grid) < 0.0 or np.max(grid) > 1.0:
        raise ValueError("lambda grid must lie within [0, 1]")
    minima = []
    witnesses = []
    for lam in grid:
        lam = float(lam)
        table = taylor_coeffs(lam, max_order)
        lo = float(np.min(table.coeffs))
        minima.append(lo)
        if lo < 0.0:
            index = int(np.argmin(table.coeffs))
            witnesses.append(f"lambda={fmt(lam)} a_{index}={fmt(lo)}")
    return CertificateReport(
        kind="coefficient-nonnegativity",
        passed=not witnesses,
        grid=tuple(float(g) for g in grid),
        point_values=tuple(minima),
        stats=(("min_coefficient", min(minima)),),
        witnesses=tuple(witnesses),
    )


def truncation_check(odd_m: int, max_order: int) -> CertificateReport:
    """Certify the exact truncation of the series at an odd integer lam = m.

    The factor (n^2 - m^2) kills the recurrence at n = m, so a_n(m) must be
    exactly zero for every n > m: sin(m * arcsin x) is a degree-m polynomial.
    Also asserts a_n(0) = 0 for all n. This is the operational content, at
    integer points, of the claim that the coefficient polynomials vanish at
    0, +-1, ..., +-n.
    """
    if odd_m < 1 or odd_m % 2 == 0:
        raise ValueError("m must be an odd positive integer")
    if max_order <= odd_m:
        raise ValueError(f"max_order must exceed m = {odd_m} for the tail to be visible")
    table = taylor_coeffs(float(odd_m), max_order)
    witnesses = []
    tail = table.coeffs[odd_m + 1 :]
    if np.any(tail != 0.0):
        for offset in np.nonzero(tail != 0.0)[0]:
            index = odd_m + 1 + int(offset)
            witnesses.append(f"a_{index}({odd_m})={fmt(float(table.coeffs[index]))} expected 0")
    zero_table = taylor_coeffs(0.0, max_order)
    if np.any(zero_table.coeffs != 0.0):
        witnesses.append("a_n(0) != 0 for some n")
    head = tuple(float(c) for c in table.coeffs[: odd_m + 1])
    return CertificateReport(
        kind="integer-truncation",
        passed=not witnesses,
        point_values=head,
        stats=(
            ("m", float(odd_m)),
            ("max_tail_abs", float(np.max(np.abs(tail))) if tail.size else 0.0),
        ),
        witnesses=tuple(witnesses),
    )
