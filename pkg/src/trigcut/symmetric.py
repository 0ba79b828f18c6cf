"""Dense symmetric matrices, PSD testing with an explicit tolerance policy,
and sampling of the elliptope (unit-diagonal PSD matrices).

Everything here is immutable after construction and safe to share across
threads; operations are pure functions of their arguments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 256  # desk scale; larger inputs are rejected outright
_DIAG_SLACK = 1e-8  # absorb window when pinning a unit diagonal


def default_psd_tol(entries: np.ndarray) -> float:
    """Relative PSD tolerance 1e-9 * max(1, max|entry|).

    Eigensolver backward error scales with the matrix norm, so an absolute
    tolerance would be wrong for badly scaled inputs.
    """
    return 1e-9 * max(1.0, float(np.max(np.abs(entries))))


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Real symmetric n x n matrix of float64.

    Construction symmetrizes by (M + M^T)/2 to absorb I/O rounding, rejects
    non-finite entries, and freezes the storage (read-only array).
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        a = np.array(self.entries, dtype=np.float64, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        if n < 1:
            raise ValueError("matrix dimension must be at least 1")
        if n > MAX_DIM:
            raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIM}")
        if not np.all(np.isfinite(a)):
            raise ValueError("matrix has non-finite entries")
        a = (a + a.T) / 2.0
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def identity(cls, n: int) -> "SymMatrix":
        return cls(np.eye(n))


@dataclass(frozen=True)
class PsdVerdict:
    """Result of a PSD test; ``is_psd`` iff ``min_eigenvalue >= -tolerance_used``."""

    is_psd: bool
    min_eigenvalue: float
    tolerance_used: float


def psd_check(m: SymMatrix, tol: float | None = None) -> PsdVerdict:
    """Positive semidefiniteness with the smallest eigenvalue as witness.

    Uses a full symmetric eigendecomposition rather than a Cholesky probe so
    the verdict carries ``min_eigenvalue`` for reports; at desk scale the cost
    difference is irrelevant. ``tol`` defaults to :func:`default_psd_tol`.
    Deterministic for fixed input.
    """
    if tol is None:
        tol = default_psd_tol(m.entries)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    eigenvalues = np.linalg.eigvalsh(m.entries)
    lo = float(eigenvalues[0])
    return PsdVerdict(is_psd=lo >= -tol, min_eigenvalue=lo, tolerance_used=float(tol))


@dataclass(frozen=True, eq=False)
class ElliptopePoint:
    """Unit-diagonal PSD matrix (a correlation matrix).

    The diagonal is pinned to exactly 1 on construction; positive
    semidefiniteness is validated at :func:`default_psd_tol`, and all entries
    must lie in [-1, 1] up to that tolerance (implied by PSD + unit diagonal).
    """

    matrix: SymMatrix

    def __post_init__(self) -> None:
        a = self.matrix.entries
        d = np.diag(a)
        if float(np.max(np.abs(d - 1.0))) > _DIAG_SLACK:
            raise ValueError("diagonal entries must all equal 1")
        if not np.all(d == 1.0):
            b = np.array(a, copy=True)
            np.fill_diagonal(b, 1.0)
            object.__setattr__(self, "matrix", SymMatrix(b))
        a = self.matrix.entries
        tol = default_psd_tol(a)
        verdict = psd_check(self.matrix, tol)
        if not verdict.is_psd:
            raise ValueError(
                "matrix is not positive semidefinite "
                f"(min eigenvalue {verdict.min_eigenvalue:.6e}, tolerance {tol:.3e})"
            )
        if float(np.max(np.abs(a))) > 1.0 + 10.0 * tol:
            raise ValueError("entries of a unit-diagonal PSD matrix must lie in [-1, 1]")

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def entries(self) -> np.ndarray:
        return self.matrix.entries


def sample_elliptope(n: int, rank: int, seed: int) -> ElliptopePoint:
    """Random correlation matrix V V^T from an n x rank Gaussian with normalized rows.

    Row-normalized Gaussian Gram matrices cover both the interior (rank = n)
    and the boundary strata (rank < n) of the elliptope, and the draw is
    deterministic per (n, rank, seed). This is a sampling convention, not an
    exhaustive measure over the set.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if rank < 1 or rank > n:
        raise ValueError(f"rank must be in [1, {n}], got {rank}")
    rng = np.random.default_rng(seed)
    v = rng.standard_normal((n, rank))
    norms = np.linalg.norm(v, axis=1)
    while np.any(norms < 1e-12):  # measure-zero guard; redraw keeps determinism
        bad = norms < 1e-12
        v[bad] = rng.standard_normal((int(np.sum(bad)), rank))
        norms = np.linalg.norm(v, axis=1)
    v /= norms[:, None]
    x = v @ v.T
    np.fill_diagonal(x, 1.0)
    return ElliptopePoint(SymMatrix(x))


def rank1_cut_matrix(signs) -> ElliptopePoint:
    """The cut matrix x x^T of a sign vector x; every entry is exactly +1 or -1.

    x and -x give the same matrix.
    """
    x = np.asarray(signs, dtype=np.float64)
    if x.ndim != 1 or x.size < 1:
        raise ValueError("sign vector must be one-dimensional and nonempty")
    if not np.all(np.abs(x) == 1.0):
        raise ValueError("sign vector entries must be +1 or -1")
    return ElliptopePoint(SymMatrix(np.outer(x, x)))


def write_matrix(m: SymMatrix, path) -> None:
    """Write the dense text format: first line n, then n rows of n floats.

    Values carry 17 significant digits so float64 round-trips exactly.
    """
    with open(path, "w") as fh:
        fh.write(f"{m.n}\n")
        for row in m.entries:
            fh.write(" ".join("%.17g" % v for v in row) + "\n")


def read_matrix(path) -> SymMatrix:
    """Parse the dense text format; the result is symmetrized on load.

    Parse failures report the offending line (and column for bad numbers).
    """
    with open(path) as fh:
        raw = fh.read().splitlines()
    content = [(i + 1, line.split()) for i, line in enumerate(raw) if line.strip()]
    if not content:
        raise ValueError("empty matrix file")
    line_no, head = content[0]
    if len(head) != 1:
        raise ValueError(f"line {line_no}: expected a single integer dimension, got {len(head)} tokens")
    try:
        n = int(head[0])
    except ValueError:
        raise ValueError(f"line {line_no}: dimension {head[0]!r} is not an integer") from None
    if n < 1:
        raise ValueError(f"line {line_no}: dimension must be at least 1")
    if len(content) - 1 != n:
        raise ValueError(f"expected {n} matrix rows, found {len(content) - 1}")
    out = np.empty((n, n))
    for r, (line_no, tokens) in enumerate(content[1:]):
        if len(tokens) != n:
            raise ValueError(f"line {line_no}: expected {n} values, got {len(tokens)}")
        for c, token in enumerate(tokens):
            try:
                out[r, c] = float(token)
            except ValueError:
                raise ValueError(f"line {line_no}, column {c + 1}: {token!r} is not a number") from None
    return SymMatrix(out)
