"""Dense symmetric matrices for signed graphs, a cyclic Jacobi eigensolver,
and exact trace / Rayleigh moments.

Matrices built from graphs keep an integer dtype so trace computations are
exact; floating point enters only through the eigensolver and bound values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sgraph import SignedGraph, degree_profile

__all__ = [
    "ConvergenceError",
    "SymMatrix",
    "Spectrum",
    "DEFAULT_EIG_TOL",
    "MAX_SWEEPS",
    "adjacency",
    "laplacian",
    "sign_all",
    "eigenvalues",
    "spectral_radius_laplacian",
    "trace_moment",
    "rayleigh_moment",
]

DEFAULT_EIG_TOL = 1e-12
MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    """The Jacobi iteration failed to reach the target off-diagonal norm."""

    def __init__(self, sweeps: int, residual: float):
        super().__init__(
            f"eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.sweeps = sweeps
        self.residual = residual


class SymMatrix:
    """Dense real symmetric matrix with exact (entrywise) symmetry.

    Wraps a read-only numpy array; rejects non-square or asymmetric input.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, copy=True)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] == 0:
            raise ValueError("matrix order must be positive")
        if not np.array_equal(arr, arr.T):
            raise ValueError("matrix is not symmetric")
        arr.setflags(write=False)
        self._data = arr

    @property
    def order(self) -> int:
        return self._data.shape[0]

    @property
    def data(self) -> np.ndarray:
        return self._data

    def __repr__(self) -> str:
        return f"SymMatrix(order={self.order}, dtype={self._data.dtype})"


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in ascending order."""

    values: tuple[float, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("spectrum cannot be empty")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise ValueError("eigenvalues must be sorted ascending")

    @property
    def lambda_max(self) -> float:
        return self.values[-1]


def adjacency(g: SignedGraph) -> SymMatrix:
    """Signed adjacency matrix: entry (i, j) is the sign of edge ij, else 0."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for e in g.edges:
        a[e.i - 1, e.j - 1] = e.sign
        a[e.j - 1, e.i - 1] = e.sign
    return SymMatrix(a)


def laplacian(g: SignedGraph) -> SymMatrix:
    """Laplacian D - A: degrees on the diagonal, negated signs off it."""
    m = np.zeros((g.n, g.n), dtype=np.int64)
    for e in g.edges:
        m[e.i - 1, e.j - 1] = -e.sign
        m[e.j - 1, e.i - 1] = -e.sign
        m[e.i - 1, e.i - 1] += 1
        m[e.j - 1, e.j - 1] += 1
    return SymMatrix(m)


def sign_all(g: SignedGraph, sign: int) -> SignedGraph:
    """Copy of ``g`` with every edge carrying ``sign``.

    With sign +1 the Laplacian becomes the ordinary unsigned Laplacian;
    with sign -1 it becomes the signless Laplacian D + A.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return SignedGraph.from_edges(g.n, [(e.i, e.j, sign) for e in g.edges])


def _offdiag_norm(a: np.ndarray) -> float:
    # Summed directly over the off-diagonal entries; subtracting the diagonal
    # mass from the total would cancel catastrophically near convergence.
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.sqrt(np.sum(off * off)))


def _rotate(a: np.ndarray, p: int, q: int, skip: float) -> None:
    # One Jacobi similarity rotation annihilating a[p, q].
    apq = a[p, q]
    if abs(apq) <= skip:
        return
    app, aqq = a[p, p], a[q, q]
    theta = (aqq - app) / (2.0 * apq)
    t = 1.0 / (abs(theta) + math.hypot(theta, 1.0))
    if theta < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    # The 2x2 pivot block has closed-form images; writing them directly
    # keeps the matrix exactly symmetric and the pivot exactly zero.
    a[p, p] = app - t * apq
    a[q, q] = aqq + t * apq
    a[p, q] = 0.0
    a[q, p] = 0.0


def eigenvalues(m: SymMatrix, tol: float = DEFAULT_EIG_TOL) -> Spectrum:
    """All eigenvalues of a symmetric matrix via cyclic Jacobi rotations.

    Sweeps the strict upper triangle in row order (a deterministic schedule),
    annihilating one off-diagonal pair per rotation, until the off-diagonal
    Frobenius norm drops to ``tol``.  Entries already below tol/(10*n^2) are
    skipped; they cannot push the norm back above tol on their own.

    Raises:
        ConvergenceError: the norm is still above ``tol`` after MAX_SWEEPS
            sweeps; the exception carries the residual.
    """
    n = m.order
    a = m.data.astype(np.float64, copy=True)
    if n == 1:
        return Spectrum((float(a[0, 0]),))
    skip = tol / (10.0 * n * n)
    residual = _offdiag_norm(a)
    for _ in range(MAX_SWEEPS):
        if residual <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, p, q, skip)
        residual = _offdiag_norm(a)
    else:
        if residual > tol:
            raise ConvergenceError(MAX_SWEEPS, residual)
    values = np.sort(np.diagonal(a).copy())
    return Spectrum(tuple(float(v) for v in values))


def spectral_radius_laplacian(g: SignedGraph) -> float:
    """Largest eigenvalue of the signed Laplacian (all of them are >= 0)."""
    return eigenvalues(laplacian(g)).lambda_max


def trace_moment(m: SymMatrix, k: int):
    """tr(M^k) for k in {1, 2, 3} by explicit matrix products.

    Integer matrices give an exact integer result.  For a signed Laplacian
    the values satisfy tr(L) = s1, tr(L^2) = s2 + s1, and
    tr(L^3) = s3 + 3*s2 - 6*t_net.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2, or 3, got {k!r}")
    a = m.data
    if k == 1:
        tr = np.trace(a)
    elif k == 2:
        tr = np.trace(a @ a)
    else:
        tr = np.trace(a @ a @ a)
    if np.issubdtype(a.dtype, np.integer):
        return int(tr)
    return float(tr)


def rayleigh_moment(g: SignedGraph, k: int) -> int:
    """x^T L(g)^k x at x = all-ones, as an exact integer, for k in {1, 2, 3}.

    Uses the closed forms
        k=1:  2 * sum_j dneg_j
        k=2:  4 * sum_j dneg_j^2
        k=3:  4 * sum_j d_j * dneg_j^2  -  8 * sum_edges sign_ij * dneg_i * dneg_j
    which agree with the matrix-product definition on every signed graph.
    """
    if k not in (1, 2, 3):
        raise ValueError(f"k must be 1, 2, or 3, got {k!r}")
    prof = degree_profile(g)
    dn = prof.d_neg
    if k == 1:
        return 2 * sum(dn)
    if k == 2:
        return 4 * sum(x * x for x in dn)
    cross = sum(e.sign * dn[e.i - 1] * dn[e.j - 1] for e in g.edges)
    return 4 * sum(d * x * x for d, x in zip(prof.d, dn)) - 8 * cross
