"""Smallest eigenpair of a small dense symmetric matrix.

Uses the cyclic Jacobi method.  The off-diagonal test is relative to the
geometric mean of the two diagonal entries, which keeps tiny eigenvalues of
graded positive definite matrices accurate; the collocation matrices built on
raw monomials are exactly of that kind.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .implicit import canonical_vector

__all__ = ["EigenResult", "ConvergenceError", "jacobi_eigh", "smallest_eigenpair"]

DEFAULT_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Raised when the Jacobi sweeps do not converge within the budget."""


@dataclass(frozen=True)
class EigenResult:
    value: float
    vector: np.ndarray
    residual: float
    near_kernel: int = 1


def jacobi_eigh(A, max_sweeps: int = 60):
    """Full eigendecomposition ``A = V diag(w) V^T`` by cyclic Jacobi rotations.

    Returns ``(w, V)`` unsorted, in the order the diagonal ends up in.
    """
    A = np.array(A, dtype=float)
    k = A.shape[0]
    V = np.eye(k)
    if k == 1:
        return A.diagonal().copy(), V
    eps = np.finfo(float).eps
    # Rotations are skipped relative to the diagonal.  Inside a numerically
    # null block that test can stall on roundoff, so past half the sweep
    # budget an absolute cutoff at roundoff of ||A|| is added.
    floor = np.finfo(float).tiny / eps
    for sweep in range(max_sweeps):
        if sweep == max_sweeps // 2:
            floor = max(floor, eps * np.linalg.norm(A))
        rotated = False
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                app, aqq = A[p, p], A[q, q]
                if abs(apq) <= eps * math.sqrt(abs(app * aqq)) or abs(apq) <= floor:
                    A[p, q] = A[q, p] = 0.0
                    continue
                rotated = True
                theta = (aqq - app) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # plain two-sided rotation; the closed-form diagonal update cancels badly on graded input
                colp = A[:, p].copy()
                colq = A[:, q]
                A[:, p] = c * colp - s * colq
                A[:, q] = s * colp + c * colq
                rowp = A[p, :].copy()
                rowq = A[q, :]
                A[p, :] = c * rowp - s * rowq
                A[q, :] = s * rowp + c * rowq
                vp = V[:, p].copy()
                vq = V[:, q]
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        if not rotated:
            jacobi_eigh.last_sweeps = sweep + 1
            return A.diagonal().copy(), V
    raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def smallest_eigenpair(A, tol: float = DEFAULT_TOL, max_sweeps: int = 60) -> EigenResult:
    """Minimize ``u^T A u`` over unit vectors ``u``.

    The returned vector is canonicalized (first nonzero entry positive).  The
    ``near_kernel`` field counts eigenvalues within ``10 * tol * ||A||_2`` of
    zero; a count above one means several independent minimizers exist.
    """
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    scale = np.abs(A).max()
    if np.abs(A - A.T).max() > 1e-10 * scale:
        raise ValueError("matrix is not symmetric")
    A = 0.5 * (A + A.T)

    w, V = jacobi_eigh(A, max_sweeps=max_sweeps)
    i = int(np.argmin(w))
    v = canonical_vector(V[:, i])
    value = float(w[i])
    norm2 = float(np.max(np.abs(w))) if w.size else 0.0
    residual = float(np.linalg.norm(A @ v - value * v))
    if residual > max(tol, 100 * np.finfo(float).eps) * max(norm2, np.finfo(float).tiny):
        raise ConvergenceError(f"eigenpair residual {residual:.3e} too large for ||A|| = {norm2:.3e}")
    near = int(np.count_nonzero(w <= 10.0 * tol * norm2))
    return EigenResult(value, v, residual, max(near, 1))
