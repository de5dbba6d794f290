"""Continuous quadratic forms for planar Bezier curves.

For a curve ``p(t)`` of degree ``m`` and implicit degree ``n``, both
``f_b(p(t))`` and ``grad f_b(p(t)) . p'(t)`` are polynomials of degree at
most ``mn`` and linear in ``b``.  Writing them in the degree-``mn`` Bernstein
basis gives collocation matrices ``D1`` and ``D2``, and with the Gram matrix
``G`` of that basis

    int f_b(p(t))**2 dt                  = b^T (D1^T G D1) b
    int (grad f_b(p(t)) . p'(t))**2 dt   = b^T (D2^T G D2) b.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import bernstein as bz
from .implicit import basis_exponents

__all__ = [
    "BezierCurve2",
    "QuadraticForms",
    "compose_monomial",
    "build_D1",
    "build_D2",
    "assemble",
]


@dataclass(frozen=True)
class BezierCurve2:
    """Planar Bezier curve ``sum_i P_i B_{i,m}((t - a) / (b - a))`` on ``[a, b]``."""

    control_points: np.ndarray
    domain: tuple = (0.0, 1.0)

    def __post_init__(self):
        P = np.array(self.control_points, dtype=float)
        if P.ndim != 2 or P.shape[1] != 2:
            raise ValueError(f"control points must have shape (m+1, 2), got {P.shape}")
        if P.shape[0] < 2:
            raise ValueError("a Bezier curve needs at least two control points")
        if not np.all(np.isfinite(P)):
            raise ValueError("control points must be finite")
        a, b = (float(v) for v in self.domain)
        if not (np.isfinite(a) and np.isfinite(b) and b > a):
            raise ValueError(f"empty or invalid parameter domain [{a}, {b}]")
        P.flags.writeable = False
        object.__setattr__(self, "control_points", P)
        object.__setattr__(self, "domain", (a, b))

    @property
    def degree(self) -> int:
        return self.control_points.shape[0] - 1

    @property
    def span(self) -> float:
        return self.domain[1] - self.domain[0]

    def coordinate(self, axis: int) -> bz.BernsteinPoly:
        return bz.BernsteinPoly(self.control_points[:, axis])

    def _local(self, t):
        return (np.asarray(t, dtype=float) - self.domain[0]) / self.span

    def position(self, t) -> np.ndarray:
        s = self._local(t)
        return np.stack([bz.evaluate(self.coordinate(0), s), bz.evaluate(self.coordinate(1), s)], axis=-1)

    def velocity(self, t) -> np.ndarray:
        """Derivative with respect to the curve's own parameter ``t``."""
        s = self._local(t)
        dx = bz.derivative(self.coordinate(0))
        dy = bz.derivative(self.coordinate(1))
        return np.stack([bz.evaluate(dx, s), bz.evaluate(dy, s)], axis=-1) / self.span

    def transformed(self, center, scale: float) -> "BezierCurve2":
        """The curve mapped by ``q -> (q - center) / scale``."""
        return BezierCurve2((self.control_points - np.asarray(center, float)) / scale, self.domain)


@dataclass(frozen=True)
class QuadraticForms:
    """``A1``, ``A2`` and ``A = A1 + lam * A2`` with their collocation factors.

    ``root`` maps collocation coefficients to values whose squared norm is the
    integral (Gauss-Legendre nodes with square-root weights); ``None`` means the
    identity, as in the discrete case.
    """

    n: int
    lam: float
    A1: np.ndarray
    A2: np.ndarray
    D1: np.ndarray
    D2: np.ndarray
    A: np.ndarray = field(repr=False)
    root: np.ndarray | None = field(default=None, repr=False)

    def _sq(self, D, b) -> float:
        r = D @ np.asarray(b, dtype=float)
        if self.root is not None:
            r = self.root @ r
        return float(r @ r)

    def ad_error(self, b) -> float:
        """``b^T A1 b`` evaluated through the factor, so it is never negative."""
        return self._sq(self.D1, b)

    def wg_error(self, b) -> float:
        return self._sq(self.D2, b)


def _powers(poly: bz.BernsteinPoly, count: int) -> list:
    out = [bz.BernsteinPoly([1.0])]
    for _ in range(count):
        out.append(bz.multiply(out[-1], poly))
    return out


def compose_monomial(curve: BezierCurve2, a: int, b: int, target_degree: int) -> bz.BernsteinPoly:
    """Bernstein coefficients of ``p1(s)**a * p2(s)**b`` at degree ``target_degree``.

    ``s`` is the local parameter on [0, 1].
    """
    if a < 0 or b < 0:
        raise ValueError("exponents must be non-negative")
    need = curve.degree * (a + b)
    if target_degree < need:
        raise ValueError(f"target degree {target_degree} below the product degree {need}")
    xs = _powers(curve.coordinate(0), a)
    ys = _powers(curve.coordinate(1), b)
    return bz.elevate(bz.multiply(xs[a], ys[b]), target_degree)


def build_D1(curve: BezierCurve2, n: int) -> np.ndarray:
    """Columns: ``phi_i(p(t))`` in the degree-``mn`` Bernstein basis."""
    exps = basis_exponents(n).exponents
    d = curve.degree * n
    xs = _powers(curve.coordinate(0), n)
    ys = _powers(curve.coordinate(1), n)
    cols = [bz.elevate(bz.multiply(xs[a], ys[b]), d).coeffs for a, b in exps]
    return np.column_stack(cols)


def build_D2(curve: BezierCurve2, n: int) -> np.ndarray:
    """Columns: ``grad phi_i(p(t)) . p'(t)`` in the degree-``mn`` Bernstein basis.

    The derivative is taken with respect to the curve parameter on its own
    domain, so a domain of length ``L`` contributes a factor ``1 / L``.
    """
    exps = basis_exponents(n).exponents
    m = curve.degree
    d = m * n
    x, y = curve.coordinate(0), curve.coordinate(1)
    xs, ys = _powers(x, n), _powers(y, n)
    dx, dy = bz.derivative(x), bz.derivative(y)
    cols = []
    for a, b in exps:
        col = np.zeros(d + 1)
        if a:
            term = bz.multiply(bz.multiply(xs[a - 1], ys[b]), dx)
            col += a * bz.elevate(term, d).coeffs
        if b:
            term = bz.multiply(bz.multiply(xs[a], ys[b - 1]), dy)
            col += b * bz.elevate(term, d).coeffs
        cols.append(col)
    return np.column_stack(cols) / curve.span


def _quadrature_root(curve: BezierCurve2, d: int) -> np.ndarray:
    """``R`` with ``R^T R = G``: Bernstein values at Gauss-Legendre nodes times sqrt weights."""
    nodes, weights = np.polynomial.legendre.leggauss(d + 1)
    s = 0.5 * (nodes + 1.0)
    w = 0.5 * curve.span * weights
    # rows: sqrt(w_i) * B_{j,d}(s_i); d+1 nodes integrate degree 2d exactly
    basis = np.stack([bz.evaluate(np.eye(d + 1)[j], s) for j in range(d + 1)], axis=1)
    return np.sqrt(w)[:, None] * basis


def assemble(curve: BezierCurve2, n: int, lam: float) -> QuadraticForms:
    """Build ``A1``, ``A2`` and ``A = A1 + lam * A2`` for implicit degree ``n``.

    ``lam = 0`` gives Dokken's algebraic-distance form alone.
    """
    if lam < 0 or not np.isfinite(lam):
        raise ValueError(f"regulator gain must be a finite value >= 0, got {lam}")
    D1 = build_D1(curve, n)
    D2 = build_D2(curve, n)
    # Gram matrix of the basis over [a, b] rather than [0, 1]
    G = curve.span * bz.gram(curve.degree * n)
    A1 = D1.T @ G @ D1
    A2 = D2.T @ G @ D2
    A1 = 0.5 * (A1 + A1.T)
    A2 = 0.5 * (A2 + A2.T)
    A = A1 + lam * A2
    return QuadraticForms(n, float(lam), A1, A2, D1, D2, 0.5 * (A + A.T), _quadrature_root(curve, curve.degree * n))
