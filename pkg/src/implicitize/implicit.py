"""Bivariate implicit polynomials over a graded monomial basis.

The basis order is fixed throughout the package: ascending total degree, and
inside each degree block ascending power of ``y``.  For ``n = 2`` this gives
``1, x, y, x^2, xy, y^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bernstein import binomial_table

__all__ = [
    "MonomialBasis2",
    "ImplicitCurve",
    "basis_exponents",
    "basis_size",
    "monomial_matrix",
    "gradient_matrices",
    "eval_implicit",
    "gradient_implicit",
    "canonicalize",
    "canonical_vector",
    "substitute_affine",
]


def basis_size(n: int) -> int:
    return (n + 1) * (n + 2) // 2


@dataclass(frozen=True)
class MonomialBasis2:
    degree: int
    exponents: tuple

    @property
    def size(self) -> int:
        return len(self.exponents)

    def as_array(self) -> np.ndarray:
        return np.array(self.exponents, dtype=int).reshape(-1, 2)


@lru_cache(maxsize=None)
def basis_exponents(n: int) -> MonomialBasis2:
    """Exponent pairs ``(a, b)`` of ``x**a * y**b`` with ``a + b <= n``."""
    if int(n) != n or n < 1:
        raise ValueError(f"implicit degree must be an integer >= 1, got {n!r}")
    n = int(n)
    exps = tuple((d - j, j) for d in range(n + 1) for j in range(d + 1))
    return MonomialBasis2(n, exps)


# entries this small (relative to a unit vector) are roundoff for sign purposes
SIGN_TOL = 1e-6


def canonical_vector(b) -> np.ndarray:
    """Unit-normalize ``b`` and flip its sign so the first nonzero entry is positive.

    Entries below ``SIGN_TOL`` after normalization do not count as nonzero, so
    roundoff in a coefficient that should vanish cannot decide the sign.
    """
    b = np.asarray(b, dtype=float).reshape(-1)
    norm = np.linalg.norm(b)
    if not np.isfinite(norm) or norm == 0.0:
        raise ValueError("cannot canonicalize a zero (or non-finite) coefficient vector")
    b = b / norm
    nz = np.flatnonzero(np.abs(b) > SIGN_TOL)
    if b[nz[0]] < 0:
        b = -b
    return b


@dataclass(frozen=True)
class ImplicitCurve:
    """Zero set of ``f(x, y) = sum_i coeffs[i] * x**a_i * y**b_i``."""

    degree: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1)
        k = basis_size(self.degree)
        if c.size != k:
            raise ValueError(f"degree {self.degree} needs {k} coefficients, got {c.size}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def basis(self) -> MonomialBasis2:
        return basis_exponents(self.degree)

    def __call__(self, x, y):
        return eval_implicit(self, x, y)

    def gradient(self, x, y):
        return gradient_implicit(self, x, y)


def monomial_matrix(n: int, x, y) -> np.ndarray:
    """Rows ``(phi_1(x_j, y_j), ..., phi_k(x_j, y_j))`` for each point."""
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    xp = x[:, None] ** np.arange(n + 1)
    yp = y[:, None] ** np.arange(n + 1)
    e = basis_exponents(n).as_array()
    return xp[:, e[:, 0]] * yp[:, e[:, 1]]


def gradient_matrices(n: int, x, y) -> tuple[np.ndarray, np.ndarray]:
    """Per-point partial derivatives of every basis monomial, as two N x k arrays."""
    x = np.asarray(x, dtype=float).reshape(-1)
    y = np.asarray(y, dtype=float).reshape(-1)
    xp = x[:, None] ** np.arange(n + 1)
    yp = y[:, None] ** np.arange(n + 1)
    e = basis_exponents(n).as_array()
    a, b = e[:, 0], e[:, 1]
    # a * x**(a-1) vanishes for a == 0, the clipped index is never used then
    gx = a * xp[:, np.maximum(a - 1, 0)] * yp[:, b]
    gy = b * xp[:, a] * yp[:, np.maximum(b - 1, 0)]
    return gx, gy


def _as_curve(c) -> ImplicitCurve:
    if isinstance(c, ImplicitCurve):
        return c
    c = np.asarray(c, dtype=float).reshape(-1)
    n = int(round((np.sqrt(8 * c.size + 1) - 3) / 2))
    return ImplicitCurve(n, c)


def eval_implicit(c, x, y):
    """Evaluate ``f`` at scalar or array coordinates (broadcast together)."""
    c = _as_curve(c)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    vals = monomial_matrix(c.degree, x, y) @ c.coeffs
    vals = vals.reshape(x.shape)
    return float(vals) if vals.ndim == 0 else vals


def gradient_implicit(c, x, y):
    """Return ``(df/dx, df/dy)``."""
    c = _as_curve(c)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    gx, gy = gradient_matrices(c.degree, x, y)
    fx = (gx @ c.coeffs).reshape(x.shape)
    fy = (gy @ c.coeffs).reshape(x.shape)
    if fx.ndim == 0:
        return float(fx), float(fy)
    return fx, fy


def canonicalize(c: ImplicitCurve) -> ImplicitCurve:
    return ImplicitCurve(c.degree, canonical_vector(c.coeffs))


def substitute_affine(coeffs, n: int, center, scale: float) -> np.ndarray:
    """Coefficients of ``g(x, y) = f((x - cx) / scale, (y - cy) / scale)``.

    ``coeffs`` describe ``f`` in the degree-``n`` basis; the result is in the same
    basis (not renormalized).
    """
    coeffs = np.asarray(coeffs, dtype=float).reshape(-1)
    cx, cy = center
    binom = binomial_table(n)
    index = {e: i for i, e in enumerate(basis_exponents(n).exponents)}
    out = np.zeros_like(coeffs)
    for (a, b), fab in zip(basis_exponents(n).exponents, coeffs):
        if fab == 0.0:
            continue
        w = fab / scale ** (a + b)
        # (x - cx)^a (y - cy)^b expanded by the binomial theorem
        for i in range(a + 1):
            xi = binom[a, i] * (-cx) ** (a - i)
            for j in range(b + 1):
                out[index[(i, j)]] += w * xi * binom[b, j] * (-cy) ** (b - j)
    return out
