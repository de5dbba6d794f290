"""Uniform sampling of parametric curves and the discrete quadratic forms.

With sample points ``p_j`` and tangents ``T_j``

    sum_j f_b(p_j)**2              = b^T (D1^T D1) b
    sum_j (grad f_b(p_j) . T_j)**2 = b^T (D2^T D2) b.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .continuous import QuadraticForms
from .implicit import basis_size, gradient_matrices, monomial_matrix

__all__ = [
    "ParametricFn",
    "SampledCurve",
    "SamplingWarning",
    "sample_uniform",
    "build_D1_discrete",
    "build_D2_discrete",
    "assemble_discrete",
]


class SamplingWarning(UserWarning):
    """Fewer samples than three times the number of unknown coefficients."""


@dataclass(frozen=True)
class ParametricFn:
    """A planar curve ``t -> position(t)`` with its analytic derivative."""

    position: Callable
    velocity: Callable
    domain: tuple
    name: str = ""

    def __post_init__(self):
        a, b = (float(v) for v in self.domain)
        if not (np.isfinite(a) and np.isfinite(b) and b > a):
            raise ValueError(f"empty or invalid parameter domain [{a}, {b}]")
        object.__setattr__(self, "domain", (a, b))


@dataclass(frozen=True)
class SampledCurve:
    points: np.ndarray
    tangents: np.ndarray
    params: np.ndarray = field(default=None)

    def __post_init__(self):
        P = np.array(self.points, dtype=float)
        T = np.array(self.tangents, dtype=float)
        if P.ndim != 2 or P.shape[1] != 2 or P.shape != T.shape:
            raise ValueError(f"points and tangents must both be (N, 2), got {P.shape} and {T.shape}")
        if not (np.all(np.isfinite(P)) and np.all(np.isfinite(T))):
            raise ValueError("sample points and tangents must be finite")
        t = None if self.params is None else np.array(self.params, dtype=float)
        if t is not None and t.shape != (P.shape[0],):
            raise ValueError("params must have one entry per point")
        for arr in (P, T) + ((t,) if t is not None else ()):
            arr.flags.writeable = False
        object.__setattr__(self, "points", P)
        object.__setattr__(self, "tangents", T)
        object.__setattr__(self, "params", t)

    def __len__(self):
        return self.points.shape[0]

    def transformed(self, center, scale: float) -> "SampledCurve":
        """Samples of the curve mapped by ``q -> (q - center) / scale``."""
        return SampledCurve((self.points - np.asarray(center, float)) / scale, self.tangents / scale, self.params)


def sample_uniform(f: ParametricFn, N: int, normalize_tangents: bool = False) -> SampledCurve:
    """Sample ``N`` parameters uniformly on the closed domain, both ends included."""
    if int(N) != N or N < 2:
        raise ValueError(f"need at least 2 samples, got {N!r}")
    a, b = f.domain
    ts = np.linspace(a, b, int(N))
    pts = np.empty((ts.size, 2))
    tans = np.empty((ts.size, 2))
    for j, t in enumerate(ts):
        p = np.asarray(f.position(t), dtype=float).reshape(2)
        v = np.asarray(f.velocity(t), dtype=float).reshape(2)
        if not (np.all(np.isfinite(p)) and np.all(np.isfinite(v))):
            raise ValueError(f"curve evaluation is not finite at t = {float(t)!r}")
        pts[j], tans[j] = p, v
    if normalize_tangents:
        norms = np.linalg.norm(tans, axis=1)
        if np.any(norms == 0.0):
            raise ValueError(f"zero tangent at t = {float(ts[np.argmin(norms)])!r}, cannot normalize")
        tans = tans / norms[:, None]
    return SampledCurve(pts, tans, ts)


def build_D1_discrete(s: SampledCurve, n: int) -> np.ndarray:
    """``D1[j, i] = phi_i(p_j)``."""
    return monomial_matrix(n, s.points[:, 0], s.points[:, 1])


def build_D2_discrete(s: SampledCurve, n: int) -> np.ndarray:
    """``D2[j, i] = grad phi_i(p_j) . T_j``."""
    gx, gy = gradient_matrices(n, s.points[:, 0], s.points[:, 1])
    return gx * s.tangents[:, :1] + gy * s.tangents[:, 1:]


def assemble_discrete(s: SampledCurve, n: int, lam: float) -> QuadraticForms:
    if lam < 0 or not np.isfinite(lam):
        raise ValueError(f"regulator gain must be a finite value >= 0, got {lam}")
    k = basis_size(n)
    if len(s) < 3 * k:
        warnings.warn(
            f"{len(s)} samples for {k} coefficients (degree {n}); the smallest eigenvalue "
            "may be uninformative below 3k samples",
            SamplingWarning,
            stacklevel=2,
        )
    D1 = build_D1_discrete(s, n)
    D2 = build_D2_discrete(s, n)
    A1 = D1.T @ D1
    A2 = D2.T @ D2
    A1 = 0.5 * (A1 + A1.T)
    A2 = 0.5 * (A2 + A2.T)
    A = A1 + lam * A2
    return QuadraticForms(n, float(lam), A1, A2, D1, D2, 0.5 * (A + A.T))
