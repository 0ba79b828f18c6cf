"""Exact small-scale oracles for the cut problem: brute-force maximization of
the quadratic form over sign vectors, graph-to-objective conversion, and
LP-based membership in the cut polytope (the convex hull of the rank-1 sign
matrices).

Since x x^T = (-x)(-x)^T, everything quotients by the global sign: sign
vectors are enumerated with their first entry fixed to +1, halving the work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .symmetric import SymMatrix
from .trigmap import TaCandidate

BRUTE_FORCE_CAP = 24
HULL_DEFAULT_CAP = 5
_SIMPLEX_PIVOT_EPS = 1e-12


@dataclass(frozen=True, eq=False)
class GraphProvenance:
    """Where an objective came from: vertex count and the 1-based weighted edge list."""

    n_vertices: int
    edges: tuple[tuple[int, int, float], ...]
    form: str


@dataclass(frozen=True, eq=False)
class CutInstance:
    """Objective matrix A plus an affine constant, so that the instance value
    of a sign vector is constant + x^T A x.

    For plain quadratic objectives the constant is 0. The cut-value form of a
    graph keeps the constant separate rather than folding it into the
    diagonal, which keeps reports human-checkable (diagonal terms are constant
    on sign vectors anyway).
    """

    a: SymMatrix
    constant: float = 0.0
    provenance: GraphProvenance | None = None

    @property
    def n(self) -> int:
        return self.a.n

    def objective(self, signs) -> float:
        x = np.asarray(signs, dtype=np.float64)
        return float(self.constant + x @ (self.a.entries @ x))


@dataclass(frozen=True, eq=False)
class BruteForceResult:
    """Exact optimum with its argmax (first component +1) and the enumeration size."""

    optimum: float
    argmax: tuple[int, ...]
    evaluations: int


@dataclass(frozen=True, eq=False)
class HullMembership:
    """Cut-polytope membership: convex weights over the vertex matrices when
    feasible (indexed as in :func:`cut_vertices`), else the phase-1
    infeasibility as ``residual``."""

    in_hull: bool
    weights: np.ndarray | None
    residual: float


def sign_vector(n: int, index: int) -> np.ndarray:
    """The index-th sign vector with x_1 = +1: bit b of index flips entry b+1 to -1."""
    if not 0 <= index < (1 << (n - 1)):
        raise ValueError(f"index must lie in [0, 2^{n - 1})")
    x = np.ones(n)
    for b in range(n - 1):
        if (index >> b) & 1:
            x[b + 1] = -1.0
    return x


def cut_vertices(n: int) -> np.ndarray:
    """All 2^(n-1) sign vectors with x_1 = +1, stacked as rows in index order."""
    count = 1 << (n - 1)
    out = np.ones((count, n))
    for b in range(n - 1):
        mask = ((np.arange(count) >> b) & 1).astype(bool)
        out[mask, b + 1] = -1.0
    return out


def _lex_less(a: np.ndarray, b: np.ndarray) -> bool:
    return a.tolist() < b.tolist()


def brute_force_opt(inst: CutInstance) -> BruteForceResult:
    """Exact maximum of x^T A x over sign vectors with x_1 = +1.

    Enumerates in Gray-code order with an O(n) incremental objective update
    per bit flip. Any candidate whose running value comes within a guard band
    of the incumbent is re-evaluated exactly, so the reported optimum satisfies
    optimum == x*^T A x* bit for bit and the selection (including the
    lexicographically-smallest tie rule, -1 before +1) matches naive
    enumeration. Instances with massive ties (e.g. A = I) trigger a
    re-evaluation per step and run slower.

    The affine constant of the instance is NOT included; callers add it.
    """
    n = inst.n
    if n > BRUTE_FORCE_CAP:
        raise ValueError(f"brute force is capped at n = {BRUTE_FORCE_CAP}, got {n}")
    a = inst.a.entries
    x = np.ones(n)
    s = a @ x
    best_val = float(x @ s)
    best_x = x.copy()
    # Guard must dominate the incremental drift (steps * ulp * scale).
    guard = 1e-7 * (1.0 + float(np.abs(a).sum()))
    running = best_val
    total = 1 << (n - 1)
    for t in range(1, total):
        k = (t & -t).bit_length()  # 1-based position of the flipped free bit
        running += 4.0 * (a[k, k] - x[k] * s[k])
        x[k] = -x[k]
        s += (2.0 * x[k]) * a[:, k]
        if running >= best_val - guard:
            exact = float(x @ (a @ x))
            if exact > best_val or (exact == best_val and _lex_less(x, best_x)):
                best_val = exact
                best_x = x.copy()
    return BruteForceResult(
        optimum=best_val,
        argmax=tuple(int(v) for v in best_x),
        evaluations=total,
    )


def graph_to_objective(n_vertices: int, edges, form: str = "cut-value") -> CutInstance:
    """Build the quadratic objective of a weighted graph.

    form="quadratic": A is the symmetric weight matrix W itself, objective
    x^T W x, constant 0.

    form="cut-value": the cut weight cut(x) = sum_E w_ij (1 - x_i x_j)/2
    satisfies cut(x) = W_total/2 - (1/2) sum_E w_ij x_i x_j, which is stored
    as constant = W_total/2 and A = -W/4 (the pair (i,j),(j,i) inside
    x^T A x supplies the remaining factor 2).

    Vertex indices are 1-based; duplicate edges accumulate their weights;
    self-loops are rejected.
    """
    if form not in ("quadratic", "cut-value"):
        raise ValueError(f"form must be 'quadratic' or 'cut-value', got {form!r}")
    if n_vertices < 1:
        raise ValueError("graph must have at least one vertex")
    w = np.zeros((n_vertices, n_vertices))
    clean = []
    total_weight = 0.0
    for i, j, weight in edges:
        i, j, weight = int(i), int(j), float(weight)
        if not (1 <= i <= n_vertices and 1 <= j <= n_vertices):
            raise ValueError(f"edge ({i},{j}) out of range 1..{n_vertices}")
        if i == j:
            raise ValueError(f"self-loop at vertex {i}")
        if not math.isfinite(weight):
            raise ValueError(f"edge ({i},{j}) has non-finite weight")
        w[i - 1, j - 1] += weight
        w[j - 1, i - 1] += weight
        total_weight += weight
        clean.append((i, j, weight))
    provenance = GraphProvenance(n_vertices, tuple(clean), form)
    if form == "quadratic":
        return CutInstance(SymMatrix(w), 0.0, provenance)
    return CutInstance(SymMatrix(-w / 4.0), 0.5 * total_weight, provenance)


def read_rudy(path) -> tuple[int, list[tuple[int, int, float]]]:
    """Parse a Rudy-style graph file: header "n m", then m lines "i j w".

    Indices are 1-based; weights may be integer or decimal; lines starting
    with '#' are comments. Parse failures report the offending line.
    """
    with open(path) as fh:
        raw = fh.read().splitlines()
    rows = [
        (no + 1, line.split())
        for no, line in enumerate(raw)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty graph file")
    line_no, head = rows[0]
    if len(head) != 2:
        raise ValueError(f"line {line_no}: expected header 'n m', got {len(head)} tokens")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ValueError(f"line {line_no}: header values must be integers") from None
    if n < 1 or m < 0:
        raise ValueError(f"line {line_no}: invalid header n={n} m={m}")
    if len(rows) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(rows) - 1}")
    edges = []
    for line_no, tokens in rows[1:]:
        if len(tokens) != 3:
            raise ValueError(f"line {line_no}: expected 'i j w', got {len(tokens)} tokens")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {line_no}: vertex indices must be integers") from None
        try:
            weight = float(tokens[2])
        except ValueError:
            raise ValueError(f"line {line_no}: weight {tokens[2]!r} is not a number") from None
        edges.append((i, j, weight))
    return n, edges


def load_graph(path, form: str = "cut-value") -> CutInstance:
    """Read a Rudy file and convert it to an objective in one step."""
    n, edges = read_rudy(path)
    return graph_to_objective(n, edges, form)


def _phase1_simplex(m_mat: np.ndarray, b: np.ndarray, max_pivots: int = 100_000):
    """Phase-1 simplex for M theta = b, theta >= 0, minimizing artificial mass.

    Dense tableau with Bland's anti-cycling rule (smallest-index entering
    column, smallest-index basic variable on ratio ties). Returns the
    structural solution and the residual infeasibility (0 iff feasible).
    """
    rows, cols = m_mat.shape
    flip = np.where(b < 0.0, -1.0, 1.0)
    tab = np.hstack([m_mat * flip[:, None], np.eye(rows), (b * flip)[:, None]])
    basis = list(range(cols, cols + rows))
    # Reduced costs with the artificial basis: structural columns price at
    # minus their column sums, artificials at zero.
    obj = np.zeros(cols + rows + 1)
    obj[:cols] = -tab[:, :cols].sum(axis=0)
    obj[-1] = -float(tab[:, -1].sum())
    for _ in range(max_pivots):
        entering = -1
        for j in range(cols + rows):
            if obj[j] < -_SIMPLEX_PIVOT_EPS:
                entering = j
                break
        if entering < 0:
            break
        col = tab[:, entering]
        leave = -1
        best_ratio = math.inf
        for i in range(rows):
            if col[i] > _SIMPLEX_PIVOT_EPS:
                ratio = tab[i, -1] / col[i]
                if ratio < best_ratio - _SIMPLEX_PIVOT_EPS or (
                    abs(ratio - best_ratio) <= _SIMPLEX_PIVOT_EPS
                    and (leave < 0 or basis[i] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = i
        if leave < 0:
            raise RuntimeError("phase-1 simplex became unbounded; this cannot happen")
        pivot_row = tab[leave] / tab[leave, entering]
        tab -= np.outer(tab[:, entering], pivot_row)
        tab[leave] = pivot_row
        obj -= obj[entering] * pivot_row
        basis[leave] = entering
    else:
        raise RuntimeError("phase-1 simplex failed to terminate")
    theta = np.zeros(cols)
    infeasibility = 0.0
    for i, var in enumerate(basis):
        if var < cols:
            theta[var] = tab[i, -1]
        else:
            infeasibility += float(tab[i, -1])
    return theta, infeasibility


def mc_membership(c: TaCandidate, n_cap: int = HULL_DEFAULT_CAP, tol: float = 1e-9) -> HullMembership:
    """Exact cut-polytope membership over the explicit vertex list.

    Solves the feasibility problem sum_k theta_k (x_k x_k^T) = X, theta >= 0,
    sum theta = 1 on the strict upper triangle (diagonals equal 1 on both
    sides) by phase-1 simplex. The vertex list has 2^(n-1) entries after the
    sign quotient, so n is capped (default 5: 16 vertices in dimension 11).
    An explicit-vertex LP is exact and trivially correct at this scale,
    unlike facet descriptions, which grow super-exponentially.
    """
    n = c.n
    if n > n_cap:
        raise ValueError(f"hull membership is capped at n = {n_cap} (2^(n-1) vertices), got {n}")
    vertices = cut_vertices(n)
    upper = np.triu_indices(n, k=1)
    columns = np.array([np.outer(v, v)[upper] for v in vertices]).T
    m_mat = np.vstack([columns, np.ones((1, len(vertices)))])
    b = np.concatenate([c.matrix.entries[upper], [1.0]])
    theta, infeasibility = _phase1_simplex(m_mat, b)
    if infeasibility > tol:
        return HullMembership(False, None, float(infeasibility))
    reconstruction = (vertices.T * theta) @ vertices
    residual = float(np.max(np.abs(reconstruction - c.matrix.entries)))
    theta.setflags(write=False)
    return HullMembership(True, theta, residual)
