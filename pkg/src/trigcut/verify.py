"""Certification suites at the scale used for acceptance; shared by the CLI.

Each suite expands one global seed into per-point seeds with
:func:`trigcut.seeding.derive_seeds`, so serial and parallel drivers report
identical statistics, and returns a :class:`CertificateReport` whose
witnesses pinpoint any failing point.
"""

from __future__ import annotations

import math

import numpy as np

from .maxcut import CutInstance, brute_force_opt, graph_to_objective, mc_membership
from .report import CertificateReport, fmt
from .sdp import TWO_OVER_PI, elliptope_maximize, gram_rows, round_gram_rows, sandwich_report
from .seeding import derive_seeds
from .series import nonnegativity_certificate, series_eval, taylor_coeffs, truncation_check
from .symmetric import SymMatrix, psd_check, sample_elliptope
from .trigmap import (
    TaCandidate,
    angle_scaling_map,
    arcsin_map,
    decomposition_residual,
    starlike_ray_scan,
    ta_membership,
)

SUITE_NAMES = ("lemma", "starlike", "coeffs", "sandwich", "hull", "rounding")

TRIANGLE_EDGES = ((1, 2, 1.0), (2, 3, 1.0), (1, 3, 1.0))


def _point_shapes(index: int, dims: tuple[int, ...]) -> tuple[int, int]:
    """Deterministic (n, rank) cycle covering interior and boundary strata."""
    n = dims[index % len(dims)]
    rank = 1 + (index % n)
    return n, rank


def verify_lemma(
    seed: int = 42,
    points: int = 500,
    dims=range(2, 13),
    grid_points: int = 11,
    tol: float = 1e-9,
) -> CertificateReport:
    """PSD preservation of the entrywise angle-scaling map on sampled
    correlation matrices, plus the split-identity residual.

    Per point records the worst min-eigenvalue over the lambda grid; the
    report also carries a coarse histogram of those minima.
    """
    dims = tuple(dims)
    grid = np.linspace(0.0, 1.0, grid_points)
    per_point = []
    witnesses = []
    max_residual = 0.0
    for i, child in enumerate(derive_seeds(seed, points)):
        n, rank = _point_shapes(i, dims)
        x = sample_elliptope(n, rank, child)
        worst = math.inf
        for lam in grid:
            lam = float(lam)
            verdict = psd_check(angle_scaling_map(x.matrix, lam), tol)
            worst = min(worst, verdict.min_eigenvalue)
            if not verdict.is_psd:
                witnesses.append(
                    f"point={i} n={n} rank={rank} seed={child} "
                    f"lambda={fmt(lam)} min_eigenvalue={fmt(verdict.min_eigenvalue)}"
                )
            max_residual = max(max_residual, decomposition_residual(x, lam))
        per_point.append(worst)
    if max_residual > 1e-12:
        witnesses.append(f"max_split_residual={fmt(max_residual)} exceeds 1e-12")
    minima = np.asarray(per_point)
    stats = (
        ("min_eigenvalue", float(np.min(minima))),
        ("max_split_residual", max_residual),
        ("hist_below_-1e-9", int(np.sum(minima < -1e-9))),
        ("hist_-1e-9_to_0", int(np.sum((minima >= -1e-9) & (minima < 0.0)))),
        ("hist_0_or_above", int(np.sum(minima >= 0.0))),
    )
    return CertificateReport(
        kind="lemma",
        passed=not witnesses,
        seed=seed,
        grid=tuple(float(g) for g in grid),
        point_values=tuple(per_point),
        stats=stats,
        witnesses=tuple(witnesses),
    )


def verify_starlike(
    seed: int = 42,
    points: int = 200,
    dims=range(2, 11),
    grid_points: int = 101,
    tol: float = 1e-9,
) -> CertificateReport:
    """Segment-to-identity membership scans on sampled members of the set.

    Samples X on the elliptope, pushes it through the arcsin map (so the
    point is a member by construction), and scans the full ray.
    """
    dims = tuple(dims)
    per_point = []
    witnesses = []
    for i, child in enumerate(derive_seeds(seed, points)):
        n, rank = _point_shapes(i, dims)
        candidate = TaCandidate(arcsin_map(sample_elliptope(n, rank, child).matrix))
        scan = starlike_ray_scan(candidate, grid_points, tol)
        per_point.append(min(v.preimage_min_eigenvalue for v in scan.verdicts))
        if not scan.all_pass:
            for lam, verdict in zip(scan.lambda_grid, scan.verdicts):
                if not verdict.in_ta:
                    witnesses.append(
                        f"point={i} n={n} rank={rank} seed={child} "
                        f"lambda={fmt(lam)} min_eigenvalue={fmt(verdict.preimage_min_eigenvalue)}"
                    )
    return CertificateReport(
        kind="starlike",
        passed=not witnesses,
        seed=seed,
        grid=tuple(float(g) for g in np.linspace(0.0, 1.0, grid_points)),
        point_values=tuple(per_point),
        stats=(("min_eigenvalue", min(per_point)),),
        witnesses=tuple(witnesses),
    )


def verify_coeffs(
    grid_points: int = 101,
    max_order: int = 500,
    eval_order: int = 400,
) -> CertificateReport:
    """Coefficient-level certificates: exact nonnegativity, truncated-series
    accuracy against the closed form, the defining ODE residual, and exact
    truncation at odd integers.

    Deterministic; no sampling involved.
    """
    witnesses = []

    nonneg = nonnegativity_certificate(np.linspace(0.0, 1.0, grid_points), max_order)
    witnesses.extend(nonneg.witnesses)
    min_coefficient = dict(nonneg.stats)["min_coefficient"]

    # Truncated series against sin(lam * arcsin x) away from the endpoints.
    max_series_error = 0.0
    for lam in np.linspace(0.0, 1.0, 21):
        table = taylor_coeffs(float(lam), eval_order)
        for x in np.linspace(-0.95, 0.95, 39):
            err = abs(series_eval(table, float(x)) - math.sin(lam * math.asin(x)))
            max_series_error = max(max_series_error, err)
    if max_series_error > 1e-9:
        witnesses.append(f"series_vs_closed_form={fmt(max_series_error)} exceeds 1e-9")

    # Residual of (1 - x^2) f'' - x f' + lam^2 f with closed-form derivatives.
    max_ode_residual = 0.0
    for lam in np.linspace(0.0, 1.0, 21):
        for x in np.linspace(-0.9, 0.9, 37):
            theta = math.asin(x)
            root = math.sqrt(1.0 - x * x)
            f = math.sin(lam * theta)
            fp = lam / root * math.cos(lam * theta)
            fpp = x / (1.0 - x * x) * fp - lam * lam / (1.0 - x * x) * f
            residual = abs((1.0 - x * x) * fpp - x * fp + lam * lam * f)
            max_ode_residual = max(max_ode_residual, residual)
    if max_ode_residual > 1e-10:
        witnesses.append(f"ode_residual={fmt(max_ode_residual)} exceeds 1e-10")

    # Exact truncation at odd integers, with the classical degree-3 and
    # degree-5 polynomials recovered.
    for m in (1, 3, 5, 7):
        check = truncation_check(m, max(eval_order, m + 10))
        witnesses.extend(check.witnesses)
    known = {3: {1: 3.0, 3: -4.0}, 5: {1: 5.0, 3: -20.0, 5: 16.0}}
    for m, expected in known.items():
        table = taylor_coeffs(float(m), m + 2)
        for idx, coeff in expected.items():
            if abs(float(table.coeffs[idx]) - coeff) > 1e-12:
                witnesses.append(f"a_{idx}({m})={fmt(float(table.coeffs[idx]))} expected {fmt(coeff)}")

    return CertificateReport(
        kind="coeffs",
        passed=not witnesses,
        grid=tuple(float(g) for g in np.linspace(0.0, 1.0, grid_points)),
        point_values=nonneg.point_values,
        stats=(
            ("min_coefficient", min_coefficient),
            ("max_series_error", max_series_error),
            ("max_ode_residual", max_ode_residual),
        ),
        witnesses=tuple(witnesses),
    )


def verify_sandwich(
    seed: int = 42,
    instances: int = 100,
    dims=range(2, 13),
    restarts: int = 5,
) -> CertificateReport:
    """Random PSD instances through the sandwich certifier, plus the frozen
    triangle instance (relaxed cut bound 9/4 against exact cut 2).

    Requires at least 95% of runs to converge and every converged run to
    satisfy both legs of the sandwich.
    """
    dims = tuple(dims)
    witnesses = []
    ratios = []
    converged_count = 0
    for i, child in enumerate(derive_seeds(seed, instances)):
        n = dims[i % len(dims)]
        rng = np.random.default_rng(child)
        b = rng.standard_normal((n, n))
        inst_mat = SymMatrix(b.T @ b)
        report = sandwich_report(CutInstance(inst_mat), seed=child, restarts=restarts)
        ratios.append(report.ratio)
        if report.converged:
            converged_count += 1
            if not report.holds:
                witnesses.append(
                    f"instance={i} n={n} seed={child} sdp={fmt(report.sdp_value)} "
                    f"brute={fmt(report.brute_value)} lower={fmt(report.lower_bound)}"
                )
        elif not report.holds:
            witnesses.append(
                f"instance={i} n={n} seed={child} non-converged relaxation leg failed "
                f"sdp={fmt(report.sdp_value)} brute={fmt(report.brute_value)}"
            )
    if converged_count < math.ceil(0.95 * instances):
        witnesses.append(f"converged={converged_count} of {instances}, need 95%")

    triangle = graph_to_objective(3, TRIANGLE_EDGES, form="cut-value")
    sol = elliptope_maximize(triangle, seed=seed, restarts=restarts)
    bound = triangle.constant + sol.value
    exact = triangle.constant + brute_force_opt(triangle).optimum
    if abs(bound - 2.25) > 1e-4:
        witnesses.append(f"triangle_bound={fmt(bound)} expected 2.25 within 1e-4")
    if exact != 2.0:
        witnesses.append(f"triangle_cut={fmt(exact)} expected 2")
    if not exact / bound >= TWO_OVER_PI:
        witnesses.append(f"triangle_ratio={fmt(exact / bound)} below 2/pi")

    return CertificateReport(
        kind="sandwich",
        passed=not witnesses,
        seed=seed,
        point_values=tuple(ratios),
        stats=(
            ("converged", converged_count),
            ("instances", instances),
            ("triangle_bound", bound),
            ("triangle_cut", exact),
        ),
        witnesses=tuple(witnesses),
    )


def verify_hull(
    seed: int = 42,
    points: int = 200,
    dims=(3, 4, 5),
    residual_tol: float = 1e-8,
) -> CertificateReport:
    """Sampled members of the trigonometric approximation sit inside the cut
    polytope (the inner-approximation claim), with a negative control.

    The control is the unit-diagonal matrix with all off-diagonals -1/2: its
    pairwise-sum inequality X_12 + X_13 + X_23 >= -1 fails, so it must be
    rejected by both the membership oracle and the hull LP.
    """
    dims = tuple(dims)
    per_point = []
    witnesses = []
    for i, child in enumerate(derive_seeds(seed, points)):
        n, rank = _point_shapes(i, dims)
        candidate = TaCandidate(arcsin_map(sample_elliptope(n, rank, child).matrix))
        membership = mc_membership(candidate, n_cap=max(dims))
        per_point.append(membership.residual)
        if not membership.in_hull:
            witnesses.append(
                f"point={i} n={n} rank={rank} seed={child} infeasibility={fmt(membership.residual)}"
            )
        elif membership.residual > residual_tol:
            witnesses.append(
                f"point={i} n={n} rank={rank} seed={child} residual={fmt(membership.residual)}"
            )

    control = np.full((3, 3), -0.5)
    np.fill_diagonal(control, 1.0)
    control_candidate = TaCandidate(SymMatrix(control))
    control_ta = ta_membership(control_candidate)
    control_hull = mc_membership(control_candidate)
    if control_ta.in_ta:
        witnesses.append("negative control unexpectedly passed the membership oracle")
    if control_hull.in_hull:
        witnesses.append("negative control unexpectedly inside the cut polytope")

    return CertificateReport(
        kind="hull",
        passed=not witnesses,
        seed=seed,
        point_values=tuple(per_point),
        stats=(
            ("max_residual", max(per_point)),
            ("control_preimage_min_eigenvalue", control_ta.preimage_min_eigenvalue),
            ("control_infeasibility", control_hull.residual),
        ),
        witnesses=tuple(witnesses),
    )


def verify_rounding(
    seed: int = 42,
    points: int = 20,
    dims=range(2, 7),
    samples: int = 10**6,
    deviation_tol: float | None = None,
    entry_budget: int = 1,
) -> CertificateReport:
    """Hyperplane rounding reproduces the arcsin map empirically.

    For each sampled correlation matrix, the mean of x x^T over ``samples``
    rounded cuts must match (2/pi) arcsin(X) entrywise within ``deviation_tol``
    (default: the 3-sigma radius 3/sqrt(samples), i.e. 3e-3 at 1e6 samples),
    allowing at most ``entry_budget`` entries per matrix to exceed it.
    """
    dims = tuple(dims)
    if deviation_tol is None:
        deviation_tol = 3.0 / math.sqrt(samples)
    per_point = []
    witnesses = []
    total_exceeding = 0
    for i, child in enumerate(derive_seeds(seed, points)):
        n = dims[i % len(dims)]
        x = sample_elliptope(n, n, child)
        rounding = round_gram_rows(gram_rows(x), np.eye(n), samples, child)
        target = arcsin_map(x.matrix).entries
        gaps = np.abs(rounding.empirical_mean_matrix.entries - target)
        upper = np.triu_indices(n, k=1)
        exceeding = int(np.sum(gaps[upper] > deviation_tol))
        total_exceeding += exceeding
        per_point.append(float(np.max(gaps[upper])) if len(upper[0]) else 0.0)
        if exceeding > entry_budget:
            witnesses.append(
                f"point={i} n={n} seed={child} entries_exceeding={exceeding} "
                f"max_gap={fmt(per_point[-1])}"
            )
    return CertificateReport(
        kind="rounding",
        passed=not witnesses,
        seed=seed,
        point_values=tuple(per_point),
        stats=(
            ("max_gap", max(per_point)),
            ("entries_exceeding", total_exceeding),
            ("samples", samples),
        ),
        witnesses=tuple(witnesses),
    )


_SUITES = {
    "lemma": verify_lemma,
    "starlike": verify_starlike,
    "coeffs": verify_coeffs,
    "sandwich": verify_sandwich,
    "hull": verify_hull,
    "rounding": verify_rounding,
}


def run_suite(name: str, **overrides) -> CertificateReport:
    """Dispatch a named certification suite; unknown names list the valid ones."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; valid suites: {', '.join(SUITE_NAMES)}")
    return _SUITES[name](**overrides)
