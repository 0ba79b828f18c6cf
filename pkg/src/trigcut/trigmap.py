"""Entrywise trigonometric maps and the membership / star-likeness oracles.

The trigonometric approximation of the cut polytope is the image of the
elliptope under the entrywise map (2/pi)*arcsin. Membership is decidable in
O(n^3): apply the inverse map sin(pi*y/2) entrywise and test the preimage for
positive semidefiniteness. Star-likeness with center I is certified by
scanning membership along the segment lam*X + (1-lam)*I.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .report import CertificateReport, fmt
from .symmetric import ElliptopePoint, SymMatrix, psd_check

TWO_OVER_PI = 2.0 / math.pi
HALF_PI = math.pi / 2.0

# Entries in (1, 1 + CLAMP_SLACK] are treated as ulp-level excursions and
# clamped; anything beyond is a real input error, not rounding.
CLAMP_SLACK = 1e-12

SPLIT_RESIDUAL_TOL = 1e-12


def _clamped(entries: np.ndarray) -> tuple[np.ndarray, int]:
    over = np.abs(entries) > 1.0
    if not np.any(over):
        return entries, 0
    if float(np.max(np.abs(entries))) > 1.0 + CLAMP_SLACK:
        raise ValueError(f"entries must lie within [-1, 1] up to slack {CLAMP_SLACK:g}")
    return np.clip(entries, -1.0, 1.0), int(np.sum(over))


def _pin_units(src: np.ndarray, out: np.ndarray) -> np.ndarray:
    # +-1 are fixed points of both maps; pin them so cut matrices map to
    # themselves bit for bit.
    out[src == 1.0] = 1.0
    out[src == -1.0] = -1.0
    return out


@dataclass(frozen=True, eq=False)
class TaCandidate:
    """Unit-diagonal matrix with entries in [-1, 1]: the shape any member of
    the trigonometric approximation must have.

    Construction pins the diagonal to exactly 1 and clamps ulp-level
    excursions beyond +-1, recording how many entries were touched in
    ``clamped_entries``. Larger excursions are rejected.
    """

    matrix: SymMatrix
    clamped_entries: int = 0

    def __post_init__(self) -> None:
        a = self.matrix.entries
        if float(np.max(np.abs(np.diag(a) - 1.0))) > CLAMP_SLACK:
            raise ValueError("candidate must have unit diagonal")
        vals, n_clamped = _clamped(a)
        if n_clamped or not np.all(np.diag(vals) == 1.0):
            b = np.array(vals, copy=True)
            np.fill_diagonal(b, 1.0)
            object.__setattr__(self, "matrix", SymMatrix(b))
        object.__setattr__(self, "clamped_entries", n_clamped)

    @property
    def n(self) -> int:
        return self.matrix.n


@dataclass(frozen=True, eq=False)
class MembershipVerdict:
    """Witness-carrying membership verdict: the preimage and its smallest
    eigenvalue, not just a boolean."""

    in_ta: bool
    preimage_min_eigenvalue: float
    preimage: SymMatrix
    tolerance_used: float


@dataclass(frozen=True, eq=False)
class RayScanReport:
    """Per-lambda membership verdicts along the segment from X to I."""

    lambda_grid: tuple[float, ...]
    verdicts: tuple[MembershipVerdict, ...]
    all_pass: bool
    central_point: SymMatrix


def arcsin_map(m: SymMatrix) -> SymMatrix:
    """Entrywise (2/pi)*arcsin; requires entries in [-1, 1].

    +-1 are fixed points and are mapped exactly, so a unit diagonal stays a
    unit diagonal and cut matrices are invariant.
    """
    vals, _ = _clamped(m.entries)
    out = TWO_OVER_PI * np.arcsin(vals)
    return SymMatrix(_pin_units(vals, out))


def sin_map(m: SymMatrix) -> SymMatrix:
    """Entrywise sin(pi*y/2), the inverse of :func:`arcsin_map` on [-1, 1].

    +-1 map exactly to +-1.
    """
    vals, _ = _clamped(m.entries)
    out = np.sin(HALF_PI * vals)
    return SymMatrix(_pin_units(vals, out))


def angle_scaling_map(m: SymMatrix, lam: float) -> SymMatrix:
    """Entrywise sin(lam * arcsin(x)) for lam in [0, 1], diagonal included.

    A diagonal of 1 therefore lands on sin(pi*lam/2), not 1; ray constructions
    that need a unit diagonal must mix with the identity before calling the
    membership oracle.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lam must lie in [0, 1], got {lam!r}")
    vals, _ = _clamped(m.entries)
    return SymMatrix(np.sin(lam * np.arcsin(vals)))


def ta_membership(c: TaCandidate, tol: float | None = None) -> MembershipVerdict:
    """Membership oracle for the trigonometric approximation.

    X belongs iff its entrywise sin(pi*x/2) preimage is PSD with unit
    diagonal; one entrywise map plus one symmetric eigendecomposition, O(n^3).
    """
    preimage = sin_map(c.matrix)
    verdict = psd_check(preimage, tol)
    return MembershipVerdict(verdict.is_psd, verdict.min_eigenvalue, preimage, verdict.tolerance_used)


def starlike_ray_scan(c: TaCandidate, grid_size: int = 101, tol: float | None = None) -> RayScanReport:
    """Certify that the whole segment from X to the identity stays in the set.

    Runs :func:`ta_membership` on lam*X + (1-lam)*I over a uniform lam grid
    (endpoints included). Raises if X itself fails the oracle: a bad input is
    a precondition violation, distinct from a scan failure. Eigenvalues along
    the ray are continuous in lam, so a fine grid plus tolerance yields a
    credible numerical certificate.
    """
    if grid_size < 2:
        raise ValueError("grid_size must be at least 2")
    base = ta_membership(c, tol)
    if not base.in_ta:
        raise ValueError(
            "input is not in the trigonometric approximation "
            f"(preimage min eigenvalue {base.preimage_min_eigenvalue:.6e})"
        )
    eye = np.eye(c.n)
    grid = np.linspace(0.0, 1.0, grid_size)
    verdicts = []
    for lam in grid:
        ray_point = TaCandidate(SymMatrix(lam * c.matrix.entries + (1.0 - lam) * eye))
        verdicts.append(ta_membership(ray_point, tol))
    return RayScanReport(
        lambda_grid=tuple(float(g) for g in grid),
        verdicts=tuple(verdicts),
        all_pass=all(v.in_ta for v in verdicts),
        central_point=SymMatrix(eye),
    )


def decomposition_residual(x: ElliptopePoint, lam: float) -> float:
    """Max entrywise gap between the conjugated mixing with I and its split form.

    Compares sin_map(lam*arcsin_map(X) + (1-lam)*I) against
    angle_scaling_map(X, lam) + (1 - sin(pi*lam/2))*I. The two sides agree
    identically in exact arithmetic; the residual measures float noise only.
    """
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lam must lie in [0, 1], got {lam!r}")
    eye = np.eye(x.n)
    mixed = SymMatrix(lam * arcsin_map(x.matrix).entries + (1.0 - lam) * eye)
    left = sin_map(mixed).entries
    right = angle_scaling_map(x.matrix, lam).entries + (1.0 - math.sin(HALF_PI * lam)) * eye
    return float(np.max(np.abs(left - right)))


def positivity_scan(x: ElliptopePoint, lambda_grid=None, tol: float | None = None) -> CertificateReport:
    """Scan whether the angle-scaling map keeps a correlation matrix PSD.

    For each lam in the grid, checks angle_scaling_map(X, lam) >= 0 and
    records any failing (lam, min eigenvalue) pair as a witness; also tracks
    the split-identity residual of :func:`decomposition_residual`. Default
    grid: 101 uniform points on [0, 1].
    """
    if lambda_grid is None:
        grid = np.linspace(0.0, 1.0, 101)
    else:
        grid = np.sort(np.asarray(lambda_grid, dtype=np.float64))
        if grid.size == 0:
            raise ValueError("lambda grid must be nonempty")
        if grid[0] < 0.0 or grid[-1] > 1.0:
            raise ValueError("lambda grid must lie within [0, 1]")
    minima = []
    witnesses = []
    max_residual = 0.0
    for lam in grid:
        lam = float(lam)
        verdict = psd_check(angle_scaling_map(x.matrix, lam), tol)
        minima.append(verdict.min_eigenvalue)
        if not verdict.is_psd:
            witnesses.append(f"lambda={fmt(lam)} min_eigenvalue={fmt(verdict.min_eigenvalue)}")
        max_residual = max(max_residual, decomposition_residual(x, lam))
    if max_residual > SPLIT_RESIDUAL_TOL:
        witnesses.append(f"split_residual={fmt(max_residual)} exceeds {fmt(SPLIT_RESIDUAL_TOL)}")
    return CertificateReport(
        kind="positivity",
        passed=not witnesses,
        grid=tuple(float(g) for g in grid),
        point_values=tuple(minima),
        stats=(
            ("min_eigenvalue", min(minima)),
            ("max_split_residual", max_residual),
        ),
        witnesses=tuple(witnesses),
    )
