"""Builtin test curves: the two Bezier nets and the closed-form curves of the
worked examples, plus a unit circle."""

from __future__ import annotations

import math

import numpy as np

from .continuous import BezierCurve2
from .discrete import ParametricFn

__all__ = ["C1_CONTROL_POINTS", "C2_CONTROL_POINTS", "c1", "c2", "cardioid_c3", "spiral_c4", "circle", "NAMED", "DEFAULT_SAMPLES", "named_curve", "cardioid_quartic"]

C1_CONTROL_POINTS = ((0.0, 0.0), (2.0, 1.0), (0.0, 2.0), (1.0, 0.0))
C2_CONTROL_POINTS = ((1.0, 5.0), (-3.0, -15.0), (2.0, 20.0), (11.0, -5.0), (1.0, 5.0))


def c1() -> BezierCurve2:
    return BezierCurve2(C1_CONTROL_POINTS, (0.0, 1.0))


def c2() -> BezierCurve2:
    return BezierCurve2(C2_CONTROL_POINTS, (0.0, 1.0))


def cardioid_c3(domain=(0.0, 10.0)) -> ParametricFn:
    """``(2(1 + cos t) cos t, 2(1 + cos t) sin t)``; zero set of
    ``(x^2 + y^2 - 2x)^2 - 4(x^2 + y^2)``."""

    def position(t):
        r = 2.0 * (1.0 + math.cos(t))
        return r * math.cos(t), r * math.sin(t)

    def velocity(t):
        c, s = math.cos(t), math.sin(t)
        return -2.0 * s * c - 2.0 * (1.0 + c) * s, -2.0 * s * s + 2.0 * (1.0 + c) * c

    return ParametricFn(position, velocity, domain, "cardioid_c3")


def spiral_c4(domain=(0.0, 14.0)) -> ParametricFn:
    """Archimedean spiral ``(t cos t, t sin t)``."""

    def position(t):
        return t * math.cos(t), t * math.sin(t)

    def velocity(t):
        c, s = math.cos(t), math.sin(t)
        return c - t * s, s + t * c

    return ParametricFn(position, velocity, domain, "spiral_c4")


def circle(domain=(0.0, 2.0 * math.pi)) -> ParametricFn:
    def position(t):
        return math.cos(t), math.sin(t)

    def velocity(t):
        return -math.sin(t), math.cos(t)

    return ParametricFn(position, velocity, domain, "circle")


NAMED = {
    "cardioid_c3": cardioid_c3,
    "spiral_c4": spiral_c4,
    "circle": circle,
}

# sample counts used for the worked examples; anything else falls back to 50
DEFAULT_SAMPLES = {"cardioid_c3": 10, "spiral_c4": 20, "circle": 16}


def named_curve(name: str, domain) -> ParametricFn:
    try:
        factory = NAMED[name]
    except KeyError:
        raise ValueError(f"unknown named curve {name!r}; expected one of {sorted(NAMED)}") from None
    return factory(tuple(float(v) for v in domain))


def cardioid_quartic() -> np.ndarray:
    """Coefficients of ``(x^2 + y^2 - 2x)^2 - 4(x^2 + y^2)`` in the degree-4 basis."""
    from .implicit import basis_exponents

    # x^4 + 2x^2y^2 + y^4 - 4x^3 - 4xy^2 + 4x^2 - 4x^2 - 4y^2
    terms = {(4, 0): 1.0, (2, 2): 2.0, (0, 4): 1.0, (3, 0): -4.0, (1, 2): -4.0, (0, 2): -4.0}
    return np.array([terms.get(e, 0.0) for e in basis_exponents(4).exponents])
