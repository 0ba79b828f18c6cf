"""Numerical certification toolkit for the trigonometric inner approximation
of the Max-Cut polytope.

The library works with three nested sets of unit-diagonal symmetric matrices:
the elliptope (PSD, the standard relaxation), the cut polytope (convex hull
of sign matrices x x^T, the exact feasible set), and between them the
trigonometric approximation, the entrywise (2/pi)*arcsin image of the
elliptope. Membership in the latter is decidable in polynomial time, and the
set is star-like with respect to the identity; this package certifies those
properties numerically, along with the Taylor-coefficient argument behind
them and the classical 2/pi sandwich between relaxation and exact optimum.
"""

from .maxcut import (
    BruteForceResult,
    CutInstance,
    GraphProvenance,
    HullMembership,
    brute_force_opt,
    cut_vertices,
    graph_to_objective,
    load_graph,
    mc_membership,
    read_rudy,
    sign_vector,
)
from .report import CertificateReport
from .sdp import (
    ConvergenceInfo,
    RoundingResult,
    SandwichReport,
    SdpSolution,
    elliptope_maximize,
    gram_rows,
    hyperplane_rounding,
    round_gram_rows,
    sandwich_report,
)
from .seeding import derive_seeds
from .series import (
    CoefficientTable,
    nonnegativity_certificate,
    series_eval,
    taylor_coeffs,
    truncation_check,
)
from .symmetric import (
    ElliptopePoint,
    PsdVerdict,
    SymMatrix,
    default_psd_tol,
    psd_check,
    rank1_cut_matrix,
    read_matrix,
    sample_elliptope,
    write_matrix,
)
from .trigmap import (
    MembershipVerdict,
    RayScanReport,
    TaCandidate,
    angle_scaling_map,
    arcsin_map,
    decomposition_residual,
    positivity_scan,
    sin_map,
    starlike_ray_scan,
    ta_membership,
)
from . import verify

__version__ = "0.1.0"

__all__ = [
    "BruteForceResult",
    "CertificateReport",
    "CoefficientTable",
    "ConvergenceInfo",
    "CutInstance",
    "ElliptopePoint",
    "GraphProvenance",
    "HullMembership",
    "MembershipVerdict",
    "PsdVerdict",
    "RayScanReport",
    "RoundingResult",
    "SandwichReport",
    "SdpSolution",
    "SymMatrix",
    "TaCandidate",
    "angle_scaling_map",
    "arcsin_map",
    "brute_force_opt",
    "cut_vertices",
    "decomposition_residual",
    "default_psd_tol",
    "derive_seeds",
    "elliptope_maximize",
    "gram_rows",
    "graph_to_objective",
    "hyperplane_rounding",
    "load_graph",
    "mc_membership",
    "nonnegativity_certificate",
    "positivity_scan",
    "psd_check",
    "rank1_cut_matrix",
    "read_matrix",
    "read_rudy",
    "round_gram_rows",
    "sample_elliptope",
    "sandwich_report",
    "series_eval",
    "sign_vector",
    "sin_map",
    "starlike_ray_scan",
    "ta_membership",
    "taylor_coeffs",
    "truncation_check",
    "verify",
    "write_matrix",
]
