"""Acceptance suite: every criterion at its stated tolerance, one pass/fail
line per criterion (visible with pytest -s)."""

import math
import time

import numpy as np
import pytest

from trigcut.maxcut import CutInstance, brute_force_opt, graph_to_objective, mc_membership
from trigcut.sdp import TWO_OVER_PI, elliptope_maximize
from trigcut.seeding import derive_seeds
from trigcut.symmetric import SymMatrix, sample_elliptope
from trigcut.trigmap import TaCandidate, decomposition_residual, ta_membership
from trigcut.verify import (
    TRIANGLE_EDGES,
    verify_coeffs,
    verify_hull,
    verify_lemma,
    verify_rounding,
    verify_sandwich,
    verify_starlike,
)

from test_maxcut import naive_brute_force


def report(number: int, name: str, ok: bool) -> None:
    print(f"criterion {number} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok


def test_criterion_1_lemma_suite():
    # 500 sampled elliptope points, n in 2..12, 11-point lambda grid,
    # min eigenvalue >= -1e-9 everywhere, single-threaded runtime < 30 s
    start = time.perf_counter()
    result = verify_lemma(seed=42, points=500, dims=range(2, 13), grid_points=11, tol=1e-9)
    elapsed = time.perf_counter() - start
    stats = dict(result.stats)
    ok = result.passed and stats["min_eigenvalue"] >= -1e-9 and elapsed < 30.0
    print(f"  lemma: min eigenvalue {stats['min_eigenvalue']:.3e}, runtime {elapsed:.2f}s")
    report(1, "positivity preservation", ok)


def test_criterion_2_starlike_suite():
    # 200 sampled members, n in 2..10, 101-point rays, tol 1e-9
    result = verify_starlike(seed=42, points=200, dims=range(2, 11), grid_points=101, tol=1e-9)
    stats = dict(result.stats)
    print(f"  starlike: min preimage eigenvalue {stats['min_eigenvalue']:.3e}")
    report(2, "star-like rays", result.passed)


def test_criterion_3_decomposition_identity():
    # entrywise split-identity agreement to 1e-12 on 100 random (X, lambda)
    worst = 0.0
    seeds = derive_seeds(42, 100)
    for i, child in enumerate(seeds):
        n = 2 + i % 11
        x = sample_elliptope(n, 1 + i % n, child)
        lam = float(np.random.default_rng(child).uniform(0.0, 1.0))
        worst = max(worst, decomposition_residual(x, lam))
    print(f"  decomposition: max residual {worst:.3e}")
    report(3, "mixing decomposition identity", worst <= 1e-12)


def test_criterion_4_coefficient_suite():
    # exact nonnegativity of a_0..a_500 on a 101-point grid; series vs closed
    # form <= 1e-9 at N=400 on |x| <= 0.95; ODE residual <= 1e-10; exact
    # truncation at odd integers with the degree-3/5 polynomials recovered
    result = verify_coeffs(grid_points=101, max_order=500, eval_order=400)
    stats = dict(result.stats)
    ok = (
        result.passed
        and stats["min_coefficient"] >= 0.0
        and stats["max_series_error"] <= 1e-9
        and stats["max_ode_residual"] <= 1e-10
    )
    print(
        f"  coeffs: min coefficient {stats['min_coefficient']:.1f}, "
        f"series error {stats['max_series_error']:.3e}, ODE residual {stats['max_ode_residual']:.3e}"
    )
    report(4, "coefficient recurrence", ok)


def test_criterion_5_sandwich_suite():
    # 100 random PSD instances (n <= 12), both legs within
    # 1e-6 * (1 + |sdp|), at least 95 converged; triangle bound 2.25 vs 2
    result = verify_sandwich(seed=42, instances=100, dims=range(2, 13), restarts=5)
    stats = dict(result.stats)
    ok = (
        result.passed
        and stats["converged"] >= 95
        and abs(stats["triangle_bound"] - 2.25) <= 1e-4
        and stats["triangle_cut"] == 2.0
        and stats["triangle_cut"] / stats["triangle_bound"] >= TWO_OVER_PI
    )
    print(
        f"  sandwich: {stats['converged']:.0f}/100 converged, "
        f"triangle bound {stats['triangle_bound']:.6f} vs cut {stats['triangle_cut']:.0f}"
    )
    report(5, "two-over-pi sandwich", ok)


def test_criterion_6_hull_suite():
    # 200 sampled members at n in {3,4,5} all land inside the cut polytope;
    # the -1/2 triangle matrix fails both oracles
    result = verify_hull(seed=42, points=200, dims=(3, 4, 5), residual_tol=1e-8)
    stats = dict(result.stats)
    control = np.full((3, 3), -0.5)
    np.fill_diagonal(control, 1.0)
    candidate = TaCandidate(SymMatrix(control))
    control_ok = (not ta_membership(candidate).in_ta) and (not mc_membership(candidate).in_hull)
    print(f"  hull: max residual {stats['max_residual']:.3e}, negative control rejected: {control_ok}")
    report(6, "inner approximation of the cut polytope", result.passed and control_ok)


def test_criterion_7_rounding_identity():
    # 20 elliptope points (n <= 6), 1e6 hyperplane samples, every entry within
    # 3e-3 of the arcsin map, at most 1 entry per matrix over the 3-sigma radius
    result = verify_rounding(seed=42, points=20, dims=range(2, 7), samples=10**6)
    stats = dict(result.stats)
    print(
        f"  rounding: max gap {stats['max_gap']:.4e}, "
        f"entries beyond 3e-3 {stats['entries_exceeding']:.0f}"
    )
    report(7, "rounding reproduces the arcsin map", result.passed)


def test_criterion_8_exact_oracles():
    triangle = graph_to_objective(3, TRIANGLE_EDGES, form="cut-value")
    triangle_cut = triangle.constant + brute_force_opt(triangle).optimum
    edge = graph_to_objective(2, [(1, 2, 1.0)], form="cut-value")
    edge_cut = edge.constant + brute_force_opt(edge).optimum
    rng = np.random.default_rng(42)
    agree = True
    for _ in range(100):
        n = int(rng.integers(2, 13))
        a = rng.standard_normal((n, n))
        inst = CutInstance(SymMatrix((a + a.T) / 2))
        result = brute_force_opt(inst)
        expected_val, expected_x = naive_brute_force(inst.a.entries)
        if result.optimum != expected_val or result.argmax != expected_x:
            agree = False
            break
    ok = triangle_cut == 2.0 and edge_cut == 1.0 and agree
    print(f"  oracles: triangle cut {triangle_cut:.0f}, edge cut {edge_cut:.0f}, gray==naive: {agree}")
    report(8, "exact enumeration oracles", ok)
