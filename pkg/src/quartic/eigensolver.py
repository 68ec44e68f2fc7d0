"""Dense symmetric eigensolver by row-cyclic Jacobi rotations.

Also provides Sturm-sequence bisection for symmetric tridiagonal matrices,
which the finite-difference oracle needs at sizes where O(n^3) sweeps are
out of reach.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 100

# pivots this small are treated as already annihilated (keeps theta finite)
_TINY_PIVOT = 1e-300


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues with matching orthonormal eigenvectors (columns)."""

    values: np.ndarray
    vectors: np.ndarray
    residual_norm: float
    sweeps_used: int


def _as_symmetric_array(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise DomainError("matrix is not exactly symmetric")
    if not np.all(np.isfinite(arr)):
        raise DomainError("matrix has non-finite entries")
    return arr


def _off_norm(a: np.ndarray) -> float:
    # summed directly; ||A||^2 - ||diag||^2 cancels catastrophically
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def solve_symmetric(a, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> EigenDecomposition:
    """Diagonalize a real symmetric matrix with cyclic Jacobi rotations.

    Sweeps visit pivots (p, q), p < q, row by row. Iteration stops once the
    off-diagonal Frobenius norm is at most ``tol * ||A||_F``; a matrix that is
    already diagonal to that level costs zero sweeps.

    Parameters
    ----------
    a : SymmetricMatrix or array_like
        Exactly symmetric input; it is copied, never modified.
    tol : float
        Relative off-diagonal tolerance.
    max_sweeps : int
        Raise :class:`ConvergenceError` if not converged after this many sweeps.
    """
    if not tol > 0:
        raise DomainError(f"tol must be > 0, got {tol}")
    if max_sweeps < 1:
        raise DomainError(f"max_sweeps must be >= 1, got {max_sweeps}")
    a0 = _as_symmetric_array(a)
    n = a0.shape[0]
    work = a0.copy()
    v = np.eye(n)
    norm = float(np.linalg.norm(a0))
    threshold = tol * norm

    sweeps = 0
    off = _off_norm(work)
    while off > threshold:
        if sweeps == max_sweeps:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {off:.3e}, "
                f"target {threshold:.3e})",
                off_norm=off,
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= _TINY_PIVOT:
                    continue
                theta = (work[q, q] - work[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                app = work[p, p] - t * apq
                aqq = work[q, q] + t * apq

                col_p = work[:, p].copy()
                col_q = work[:, q]
                work[:, p] = c * col_p - s * col_q
                work[:, q] = s * col_p + c * col_q
                row_p = work[p, :].copy()
                row_q = work[q, :]
                work[p, :] = c * row_p - s * row_q
                work[q, :] = s * row_p + c * row_q
                work[p, p], work[q, q] = app, aqq
                work[p, q] = work[q, p] = 0.0

                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _off_norm(work)

    values = np.diag(work).copy()
    order = np.argsort(values, kind="stable")
    values, v = values[order], v[:, order]
    residual = 0.0
    if n:
        residual = float(np.max(np.linalg.norm(a0 @ v - v * values, axis=0)))
    return EigenDecomposition(values, v, residual, sweeps)


def eigenvalues_sorted(a, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> list[float]:
    """Eigenvalues only, ascending."""
    return solve_symmetric(a, tol, max_sweeps).values.tolist()


def sturm_count(diag, off_sq, x: float) -> int:
    """Number of eigenvalues strictly below ``x`` of a symmetric tridiagonal matrix.

    ``off_sq[i]`` is the squared entry coupling rows i-1 and i, with
    ``off_sq[0] == 0``. Counts negative pivots of the LDL^T factorization
    of (T - x I).
    """
    count = 0
    q = 1.0
    for d, e2 in zip(diag, off_sq):
        q = d - x - e2 / q
        if q == 0.0:
            q = -1e-300
        if q < 0:
            count += 1
    return count


def tridiagonal_eigenvalues(diag, off, count: int | None = None) -> list[float]:
    """Lowest ``count`` eigenvalues of a symmetric tridiagonal matrix by bisection.

    Each eigenvalue is bracketed within a Gershgorin interval and bisected to
    roughly machine precision. Every Sturm count also tightens the brackets
    of all other wanted eigenvalues.
    """
    d = [float(x) for x in diag]
    e = [float(x) for x in off]
    n = len(d)
    if n == 0:
        raise DomainError("empty matrix")
    if len(e) != n - 1:
        raise DomainError(f"need {n - 1} off-diagonal entries, got {len(e)}")
    if count is None:
        count = n
    if not 1 <= count <= n:
        raise DomainError(f"count must be in [1, {n}], got {count}")

    off_sq = [0.0] + [x * x for x in e]
    radius = [abs(e[i - 1]) if i > 0 else 0.0 for i in range(n)]
    for i in range(n - 1):
        radius[i] += abs(e[i])
    lo0 = min(di - ri for di, ri in zip(d, radius))
    hi0 = max(di + ri for di, ri in zip(d, radius))
    eps = sys.float_info.epsilon
    scale = max(abs(lo0), abs(hi0), 1e-300)
    lo0 -= 2 * eps * scale
    hi0 += 2 * eps * scale

    lows = [lo0] * count
    highs = [hi0] * count
    for j in range(count):
        lo, hi = lows[j], highs[j]
        while hi - lo > 2 * eps * max(abs(lo), abs(hi)) + 1e-300:
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            c = sturm_count(d, off_sq, mid)
            # eigenvalues 0..c-1 lie below mid, the rest at or above it
            for i in range(j, count):
                if i < c:
                    highs[i] = min(highs[i], mid)
                else:
                    lows[i] = max(lows[i], mid)
            lo, hi = lows[j], highs[j]
        lows[j], highs[j] = lo, hi
    return [float(0.5 * (lo + hi)) for lo, hi in zip(lows, highs)]
