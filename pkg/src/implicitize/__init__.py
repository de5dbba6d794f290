"""Approximate implicitization of planar parametric curves with a weak
gradient regularizer and adaptive degree selection."""

from .adaptive import (
    DegreeRecord,
    FitConfig,
    FitTrace,
    dokken_fit,
    fit_fixed_degree,
    fixed_degree_fit,
    wgm_discrete,
    wgm_polynomial,
)
from .bernstein import BernsteinPoly
from .contour import ContourMesh, marching_squares
from .continuous import BezierCurve2, QuadraticForms, assemble
from .discrete import ParametricFn, SampledCurve, assemble_discrete, sample_uniform
from .implicit import ImplicitCurve, basis_exponents, canonicalize, eval_implicit, gradient_implicit
from .spectral import ConvergenceError, EigenResult, smallest_eigenpair

__version__ = "0.1.0"

__all__ = [
    "BernsteinPoly",
    "BezierCurve2",
    "ContourMesh",
    "ConvergenceError",
    "DegreeRecord",
    "EigenResult",
    "FitConfig",
    "FitTrace",
    "ImplicitCurve",
    "ParametricFn",
    "QuadraticForms",
    "SampledCurve",
    "assemble",
    "assemble_discrete",
    "basis_exponents",
    "canonicalize",
    "dokken_fit",
    "eval_implicit",
    "fit_fixed_degree",
    "fixed_degree_fit",
    "gradient_implicit",
    "marching_squares",
    "sample_uniform",
    "smallest_eigenpair",
    "wgm_discrete",
    "wgm_polynomial",
]
