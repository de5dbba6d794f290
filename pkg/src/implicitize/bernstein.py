"""Univariate polynomials in the Bernstein basis on [0, 1].

All routines work on plain float arrays of Bernstein coefficients; the
:class:`BernsteinPoly` wrapper just carries them with an explicit degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "BernsteinPoly",
    "binomial_table",
    "evaluate",
    "multiply",
    "elevate",
    "derivative",
    "gram",
    "power_to_bernstein",
]


@lru_cache(maxsize=8)
def _pascal(nmax: int) -> np.ndarray:
    table = np.zeros((nmax + 1, nmax + 1))
    table[:, 0] = 1.0
    for n in range(1, nmax + 1):
        table[n, 1 : n + 1] = table[n - 1, 1 : n + 1] + table[n - 1, 0:n]
    table.flags.writeable = False
    return table


def binomial_table(nmax: int) -> np.ndarray:
    """Float Pascal triangle; entry ``[n, k]`` is C(n, k) (zero for k > n)."""
    # round up so the cache is shared between nearby requests
    size = max(64, 1 << int(np.ceil(np.log2(max(nmax, 1) + 1))))
    return _pascal(size)[: nmax + 1, : nmax + 1]


@dataclass(frozen=True)
class BernsteinPoly:
    """Polynomial ``sum_i coeffs[i] * B_{i,p}(t)`` with ``p = len(coeffs) - 1``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=float).reshape(-1)
        if c.size == 0:
            raise ValueError("a Bernstein polynomial needs at least one coefficient")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, t):
        return evaluate(self, t)

    def __len__(self):
        return self.coeffs.size


def _coeffs(a) -> np.ndarray:
    if isinstance(a, BernsteinPoly):
        return a.coeffs
    return np.asarray(a, dtype=float).reshape(-1)


def evaluate(poly, t):
    """Evaluate by de Casteljau's algorithm. ``t`` may be a scalar or an array."""
    c = _coeffs(poly)
    t = np.asarray(t, dtype=float)
    s = 1.0 - t
    work = np.broadcast_to(c.reshape((-1,) + (1,) * t.ndim), c.shape + t.shape).copy()
    for r in range(c.size - 1, 0, -1):
        work[:r] = s * work[:r] + t * work[1 : r + 1]
    out = work[0]
    return float(out) if out.ndim == 0 else out


def multiply(a, b) -> BernsteinPoly:
    """Product of two Bernstein polynomials, of degree ``deg(a) + deg(b)``."""
    ca, cb = _coeffs(a), _coeffs(b)
    p, q = ca.size - 1, cb.size - 1
    binom = binomial_table(p + q)
    prod = np.convolve(binom[p, : p + 1] * ca, binom[q, : q + 1] * cb)
    return BernsteinPoly(prod / binom[p + q, : p + q + 1])


def elevate(a, target_degree: int) -> BernsteinPoly:
    """Raise the degree of ``a`` to ``target_degree`` without changing its values."""
    c = _coeffs(a)
    p = c.size - 1
    if target_degree < p:
        raise ValueError(f"cannot elevate degree {p} down to {target_degree}")
    for d in range(p, target_degree):
        i = np.arange(1, d + 1) / (d + 1)
        c = np.concatenate(([c[0]], i * c[:-1] + (1.0 - i) * c[1:], [c[-1]]))
    return BernsteinPoly(c)


def derivative(a) -> BernsteinPoly:
    c = _coeffs(a)
    p = c.size - 1
    if p < 1:
        raise ValueError("derivative needs degree >= 1 (write a constant as degree 1 first)")
    return BernsteinPoly(p * np.diff(c))


def gram(p: int) -> np.ndarray:
    """Gram matrix ``G[i, j] = int_0^1 B_{i,p} B_{j,p} dt`` in closed form."""
    if p < 0:
        raise ValueError("degree must be non-negative")
    binom = binomial_table(2 * p)
    row = binom[p, : p + 1]
    idx = np.add.outer(np.arange(p + 1), np.arange(p + 1))
    return np.outer(row, row) / ((2 * p + 1) * binom[2 * p][idx])


def power_to_bernstein(monomial_coeffs) -> BernsteinPoly:
    """Convert ``sum_j a_j t**j`` to Bernstein form of the same degree."""
    a = np.asarray(monomial_coeffs, dtype=float).reshape(-1)
    if a.size == 0:
        raise ValueError("empty coefficient list")
    p = a.size - 1
    binom = binomial_table(p)
    # c_i = sum_{j<=i} C(i, j) / C(p, j) a_j
    weights = binom[: p + 1, : p + 1] / binom[p, : p + 1]
    return BernsteinPoly(weights @ a)
