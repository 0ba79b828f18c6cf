"""Elliptope maximization by low-rank factorized ascent, random-hyperplane
rounding, and the 2/pi sandwich report tying the relaxation to the exact
optimum.

The relaxation max <A, X> over unit-diagonal PSD X is solved in factorized
form X = V V^T with unit-norm rows of V: the feasible-set projection is a
closed-form row normalization, and at rank = n the factorized landscape has
no spurious local maxima for generic A, so no external solver is needed at
desk scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .maxcut import BruteForceResult, CutInstance, brute_force_opt
from .seeding import derive_seeds
from .symmetric import ElliptopePoint, SymMatrix, psd_check

TWO_OVER_PI = 2.0 / math.pi
_ARMIJO = 1e-4
_MIN_STEP = 1e-13
_ROUNDING_CHUNK = 1 << 17


@dataclass(frozen=True, eq=False)
class ConvergenceInfo:
    iterations: int
    gradient_norm: float
    restarts: int
    converged: bool


@dataclass(frozen=True, eq=False)
class SdpSolution:
    """Factorized relaxation solution: value = <A, V V^T> with unit-norm rows of V."""

    value: float
    gram_factor: np.ndarray
    x_matrix: ElliptopePoint
    convergence: ConvergenceInfo
    instance: CutInstance


@dataclass(frozen=True, eq=False)
class RoundingResult:
    """Best sampled cut and the empirical mean of x x^T across samples."""

    best_cut: tuple[int, ...]
    best_value: float
    empirical_mean_matrix: SymMatrix
    samples: int


@dataclass(frozen=True, eq=False)
class SandwichReport:
    """(2/pi) * sdp_value <= brute_value <= sdp_value, within tolerance.

    When the solver run is flagged non-converged its value is only a lower
    bound on the true relaxation optimum: the relaxation leg
    (brute <= sdp + tol) is still sound, but the 2/pi leg is inconclusive and
    is skipped; ``converged`` records which case applies.
    """

    sdp_value: float
    brute_value: float
    lower_bound: float
    ratio: float
    holds: bool
    converged: bool
    tolerance_used: float


def _normalize_rows(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v, axis=1)[:, None]


def _objective(a: np.ndarray, v: np.ndarray) -> float:
    return float(np.sum(v * (a @ v)))


def _ascend(a: np.ndarray, v: np.ndarray, tol: float, max_iter: int):
    """Projected gradient ascent on the product of unit spheres.

    Backtracking line search from step 1.0 with halving and Armijo constant
    1e-4, measured after the row-normalization retraction. Stops when the
    projected gradient norm drops below tol * (1 + |value|).
    """
    value = _objective(a, v)
    gnorm = math.inf
    for iteration in range(max_iter):
        grad = 2.0 * (a @ v)
        proj = grad - np.sum(grad * v, axis=1)[:, None] * v
        gnorm = float(np.linalg.norm(proj))
        if gnorm <= tol * (1.0 + abs(value)):
            return v, value, iteration, gnorm, True
        step = 1.0
        improved = False
        while step >= _MIN_STEP:
            trial = _normalize_rows(v + step * proj)
            trial_value = _objective(a, trial)
            if trial_value >= value + _ARMIJO * step * gnorm * gnorm:
                v, value, improved = trial, trial_value, True
                break
            step *= 0.5
        if not improved:
            # Line search stalled at float resolution; report whether the
            # gradient criterion happens to hold at this iterate.
            return v, value, iteration + 1, gnorm, gnorm <= tol * (1.0 + abs(value))
    return v, value, max_iter, gnorm, False


def elliptope_maximize(
    inst: CutInstance,
    rank: int | None = None,
    seed: int = 0,
    tol: float = 1e-7,
    max_iter: int = 100_000,
    restarts: int = 5,
) -> SdpSolution:
    """Maximize <A, X> over the elliptope via X = V V^T with unit-norm rows.

    Runs ``restarts`` independent ascents from Gaussian starts (seeded
    deterministically from ``seed``) and keeps the best value; ties keep the
    earliest restart. Rank defaults to n, where restarts are a safety net
    rather than a correctness requirement. A best run that exhausted
    ``max_iter`` is returned flagged non-converged; its value is still a
    valid lower bound on the true optimum since every iterate is feasible.
    """
    n = inst.n
    r = n if rank is None else rank
    if not 1 <= r <= n:
        raise ValueError(f"rank must be in [1, {n}], got {r}")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    a = inst.a.entries
    best = None
    for child_seed in derive_seeds(seed, restarts):
        rng = np.random.default_rng(child_seed)
        start = _normalize_rows(rng.standard_normal((n, r)))
        v, value, iterations, gnorm, converged = _ascend(a, start, tol, max_iter)
        if best is None or value > best[0]:
            best = (value, v, iterations, gnorm, converged)
    value, v, iterations, gnorm, converged = best
    v = np.array(v)
    v.setflags(write=False)
    x = v @ v.T
    return SdpSolution(
        value=value,
        gram_factor=v,
        x_matrix=ElliptopePoint(SymMatrix(x)),
        convergence=ConvergenceInfo(iterations, gnorm, restarts, converged),
        instance=inst,
    )


def gram_rows(point: ElliptopePoint, rank: int | None = None) -> np.ndarray:
    """A factor V with V V^T = X and unit-norm rows, from the eigendecomposition.

    Tiny negative eigenvalues are clipped to zero; rows are renormalized (they
    already have norm 1 up to roundoff because diag X = 1).
    """
    w, u = np.linalg.eigh(point.matrix.entries)
    v = u * np.sqrt(np.clip(w, 0.0, None))[None, :]
    if rank is not None:
        if not 1 <= rank <= point.n:
            raise ValueError(f"rank must be in [1, {point.n}]")
        v = v[:, -rank:]
    return _normalize_rows(v)


def round_gram_rows(v: np.ndarray, a: np.ndarray, samples: int, seed: int) -> RoundingResult:
    """Hyperplane rounding of a row-unit factor V against objective A.

    Per sample, draws g ~ N(0, I) and takes x = sign(V g), with sign(0) = +1
    (a measure-zero tie, fixed for reproducibility). Tracks the best objective
    value x^T A x and the running mean of x x^T; sampling is chunked, and the
    mean accumulates exact +-1 count sums, so results are identical for any
    chunk size. The best value is re-evaluated with the same expression the
    exact oracles use.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    v = np.asarray(v, dtype=np.float64)
    n, r = v.shape
    rng = np.random.default_rng(seed)
    sums = np.zeros((n, n))
    best_value = -math.inf
    best_cut = None
    done = 0
    while done < samples:
        take = min(_ROUNDING_CHUNK, samples - done)
        g = rng.standard_normal((r, take))
        signs = np.where(v @ g >= 0.0, 1.0, -1.0)
        sums += signs @ signs.T
        values = np.sum(signs * (a @ signs), axis=0)
        j = int(np.argmax(values))
        if best_cut is None or float(values[j]) > best_value:
            best_value = float(values[j])
            best_cut = signs[:, j].copy()
        done += take
    best_value = float(best_cut @ (a @ best_cut))
    return RoundingResult(
        best_cut=tuple(int(t) for t in best_cut),
        best_value=best_value,
        empirical_mean_matrix=SymMatrix(sums / samples),
        samples=samples,
    )


def hyperplane_rounding(sol: SdpSolution, samples: int, seed: int) -> RoundingResult:
    """Round a relaxation solution to cuts; see :func:`round_gram_rows`.

    The empirical mean matrix converges entrywise to the arcsin map of the
    solution matrix (E[sign(v_i.g) sign(v_j.g)] = (2/pi) arcsin <v_i, v_j>)
    at the Monte Carlo rate.
    """
    return round_gram_rows(sol.gram_factor, sol.instance.a.entries, samples, seed)


def sandwich_report(
    inst: CutInstance,
    tol: float | None = None,
    seed: int = 0,
    rank: int | None = None,
    restarts: int = 5,
) -> SandwichReport:
    """Certify (2/pi) * relaxation <= exact optimum <= relaxation for PSD A.

    The bound is stated for A >= 0 only, so a non-PSD objective is rejected.
    Tolerance defaults to 1e-6 * (1 + |sdp_value|). Runs the brute-force leg,
    so n is capped at 24.
    """
    verdict = psd_check(inst.a)
    if not verdict.is_psd:
        raise ValueError(
            "sandwich bound requires a PSD objective matrix "
            f"(min eigenvalue {verdict.min_eigenvalue:.6e})"
        )
    sol = elliptope_maximize(inst, rank=rank, seed=seed, restarts=restarts)
    brute: BruteForceResult = brute_force_opt(inst)
    sdp_value = sol.value
    if tol is None:
        tol = 1e-6 * (1.0 + abs(sdp_value))
    lower = TWO_OVER_PI * sdp_value
    relaxation_leg = brute.optimum <= sdp_value + tol
    two_pi_leg = lower <= brute.optimum + tol
    holds = relaxation_leg and (two_pi_leg if sol.convergence.converged else True)
    ratio = brute.optimum / sdp_value if sdp_value != 0.0 else math.nan
    return SandwichReport(
        sdp_value=sdp_value,
        brute_value=brute.optimum,
        lower_bound=lower,
        ratio=ratio,
        holds=holds,
        converged=sol.convergence.converged,
        tolerance_used=float(tol),
    )
