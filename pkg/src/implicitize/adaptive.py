"""Adaptive degree selection and fixed-degree fits.

``wgm_polynomial`` sweeps ``n = 1 .. n_max`` on a Bezier curve and stops once
the algebraic-distance error is small and the weak-gradient error has stopped
changing.  ``wgm_discrete`` does the same on uniform samples of a general
curve, but thresholds the weak-gradient error itself.  Both return the fitted
curve and a per-degree trace.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from .continuous import BezierCurve2, QuadraticForms, assemble
from .discrete import ParametricFn, SampledCurve, assemble_discrete, sample_uniform
from .implicit import ImplicitCurve, canonical_vector, substitute_affine
from .spectral import DEFAULT_TOL, smallest_eigenpair

__all__ = [
    "FitConfig",
    "DegreeRecord",
    "FitTrace",
    "fit_fixed_degree",
    "wgm_polynomial",
    "wgm_discrete",
    "dokken_fit",
    "normalizing_transform",
]

THRESHOLD_MET = "threshold_met"
REACHED_N_MAX = "reached_n_max"
FIXED_DEGREE = "fixed_degree"


@dataclass(frozen=True)
class FitConfig:
    n_max: int = 7
    lam: float = 0.1
    eps_ad: float = 1e-4
    eps_wg: float = 1e-3
    samples: int = 20
    method: str = "wgm"
    normalize_coords: bool = False
    normalize_tangents: bool = False

    @classmethod
    def polynomial_defaults(cls, **overrides) -> "FitConfig":
        return cls(**overrides)

    @classmethod
    def discrete_defaults(cls, **overrides) -> "FitConfig":
        base = dict(lam=0.01, eps_ad=1e-2, eps_wg=1e-1)
        base.update(overrides)
        return cls(**base)

    def validate(self) -> "FitConfig":
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"n_max must be an integer >= 1, got {self.n_max!r}")
        if not (math.isfinite(self.lam) and self.lam >= 0):
            raise ValueError(f"lambda must be >= 0, got {self.lam!r}")
        if not (self.eps_ad > 0 and self.eps_wg > 0):
            raise ValueError("stopping thresholds must be positive")
        if int(self.samples) != self.samples or self.samples < 2:
            raise ValueError(f"samples must be an integer >= 2, got {self.samples!r}")
        if self.method not in ("wgm", "dm"):
            raise ValueError(f"method must be 'wgm' or 'dm', got {self.method!r}")
        return self

    @property
    def effective_lam(self) -> float:
        return 0.0 if self.method == "dm" else float(self.lam)

    def as_dict(self) -> dict:
        """Plain dict with ``lam`` spelled ``lambda``, as written in reports."""
        d = asdict(self)
        return {("lambda" if k == "lam" else k): v for k, v in d.items()}

    @classmethod
    def from_dict(cls, d: dict) -> "FitConfig":
        return cls(**{("lam" if k == "lambda" else k): v for k, v in d.items()})


@dataclass(frozen=True)
class DegreeRecord:
    n: int
    e1: float
    e2: float
    lambda_min: float
    coeffs: np.ndarray
    near_kernel: int = 1


@dataclass
class FitTrace:
    records: list = field(default_factory=list)
    chosen_degree: int = 0
    termination: str = ""

    def __len__(self):
        return len(self.records)

    def __getitem__(self, i):
        return self.records[i]

    @property
    def final(self) -> DegreeRecord:
        for rec in self.records:
            if rec.n == self.chosen_degree:
                return rec
        raise LookupError("trace has no record for the chosen degree")


def normalizing_transform(points) -> tuple[np.ndarray, float]:
    """Center and half-extent mapping the bounding box of ``points`` into [-1, 1]^2."""
    pts = np.asarray(points, dtype=float)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    center = 0.5 * (lo + hi)
    scale = 0.5 * float(np.max(hi - lo))
    return center, (scale if scale > 0 else 1.0)


def _forms(problem, n: int, lam: float) -> QuadraticForms:
    if isinstance(problem, BezierCurve2):
        return assemble(problem, n, lam)
    if isinstance(problem, SampledCurve):
        return assemble_discrete(problem, n, lam)
    raise TypeError(f"expected BezierCurve2 or SampledCurve, got {type(problem).__name__}")


def fit_fixed_degree(problem, n: int, lam: float, tol: float = DEFAULT_TOL) -> DegreeRecord:
    """Minimize ``b^T (A1 + lam A2) b`` over unit ``b`` at implicit degree ``n``.

    ``problem`` is a :class:`BezierCurve2` (integral forms) or a
    :class:`SampledCurve` (finite sums).  The errors are evaluated with the
    returned coefficient vector: ``e1 = b^T A1 b``, ``e2 = b^T A2 b``, computed
    as squared norms of the collocation factors so roundoff cannot make them
    negative.
    """
    forms = _forms(problem, n, lam)
    eig = smallest_eigenpair(forms.A, tol=tol)
    b = eig.vector
    return DegreeRecord(
        n=n,
        e1=forms.ad_error(b),
        e2=forms.wg_error(b),
        lambda_min=eig.value,
        coeffs=b,
        near_kernel=eig.near_kernel,
    )


def _adaptive(problem, cfg: FitConfig, stop) -> FitTrace:
    lam = cfg.effective_lam
    trace = FitTrace()
    prev_e2 = math.inf
    for n in range(1, cfg.n_max + 1):
        rec = fit_fixed_degree(problem, n, lam)
        trace.records.append(rec)
        if n == cfg.n_max:
            trace.chosen_degree, trace.termination = n, REACHED_N_MAX
            break
        if stop(rec, prev_e2):
            trace.chosen_degree, trace.termination = n, THRESHOLD_MET
            break
        prev_e2 = rec.e2
    return trace


def _result(trace: FitTrace, transform=None) -> ImplicitCurve:
    rec = trace.final
    coeffs = rec.coeffs
    if transform is not None:
        center, scale = transform
        coeffs = canonical_vector(substitute_affine(coeffs, rec.n, center, scale))
    return ImplicitCurve(rec.n, coeffs)


def wgm_polynomial(curve: BezierCurve2, cfg: FitConfig | None = None) -> tuple[ImplicitCurve, FitTrace]:
    """Adaptive fit of a polynomial curve.

    For ``n < n_max`` stops when ``e1 <= eps_ad`` and the weak-gradient error
    differs from the previous degree's by at most ``eps_wg``.  At ``n = 1``
    there is no previous value, so only the first test applies.

    With ``normalize_coords`` the fit runs on the curve scaled into [-1, 1]^2;
    the trace holds that frame's values and the returned curve is mapped back.
    """
    cfg = (cfg or FitConfig.polynomial_defaults()).validate()
    transform = None
    if cfg.normalize_coords:
        transform = normalizing_transform(curve.control_points)
        curve = curve.transformed(*transform)

    def stop(rec, prev_e2):
        wg_ok = prev_e2 == math.inf or abs(rec.e2 - prev_e2) <= cfg.eps_wg
        return rec.e1 <= cfg.eps_ad and wg_ok

    trace = _adaptive(curve, cfg, stop)
    return _result(trace, transform), trace


def wgm_discrete(f: ParametricFn | SampledCurve, cfg: FitConfig | None = None) -> tuple[ImplicitCurve, FitTrace]:
    """Adaptive fit of a general curve from ``cfg.samples`` uniform samples.

    For ``n < n_max`` stops when ``e1 <= eps_ad`` and ``e2 <= eps_wg``.
    A pre-sampled :class:`SampledCurve` is accepted as well.
    """
    cfg = (cfg or FitConfig.discrete_defaults()).validate()
    if isinstance(f, SampledCurve):
        samples = f
    else:
        samples = sample_uniform(f, cfg.samples, normalize_tangents=cfg.normalize_tangents)
    transform = None
    if cfg.normalize_coords:
        transform = normalizing_transform(samples.points)
        samples = samples.transformed(*transform)

    def stop(rec, prev_e2):
        return rec.e1 <= cfg.eps_ad and rec.e2 <= cfg.eps_wg

    trace = _adaptive(samples, cfg, stop)
    return _result(trace, transform), trace


def fixed_degree_fit(problem, n: int, cfg: FitConfig) -> tuple[ImplicitCurve, FitTrace]:
    """One fit at degree ``n`` packaged like the adaptive results."""
    cfg = cfg.validate()
    transform = None
    if cfg.normalize_coords:
        pts = problem.control_points if isinstance(problem, BezierCurve2) else problem.points
        transform = normalizing_transform(pts)
        problem = problem.transformed(*transform)
    rec = fit_fixed_degree(problem, n, cfg.effective_lam)
    trace = FitTrace([rec], n, FIXED_DEGREE)
    return _result(trace, transform), trace


def dokken_fit(problem, n: int) -> tuple[ImplicitCurve, float]:
    """Dokken's method: the smallest-eigenvalue unit eigenvector of ``A1`` alone."""
    rec = fit_fixed_degree(problem, n, 0.0)
    return ImplicitCurve(n, rec.coeffs), rec.e1


def with_method(cfg: FitConfig, method: str) -> FitConfig:
    return replace(cfg, method=method)
