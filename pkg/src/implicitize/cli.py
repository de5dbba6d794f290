"""``implicitize`` command line front end.

Exit codes: 0 success, 2 invalid spec or flags, 3 I/O failure, 4 fit failure.
Errors are written to stderr as a one-line JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from .adaptive import FitConfig, fixed_degree_fit, wgm_discrete, wgm_polynomial
from .contour import marching_squares, padded_bbox
from .continuous import BezierCurve2
from .curves import DEFAULT_SAMPLES
from .discrete import SamplingWarning, sample_uniform
from .render import build_report, coefficients_csv, render_svg, report_json
from .specfile import SpecError, load_spec

EXIT_OK = 0
EXIT_SPEC = 2
EXIT_IO = 3
EXIT_FIT = 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _fail("usage", message, EXIT_SPEC)


def _fail(kind: str, message: str, code: int):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    raise SystemExit(code)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="implicitize", description="Approximate implicitization of planar parametric curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    fit = sub.add_parser("fit", help="fit an implicit polynomial to a curve spec")
    fit.error = parser.error
    fit.add_argument("--spec", required=True, help="curve spec JSON file")
    fit.add_argument("--method", choices=["wgm", "dm"], default="wgm")
    fit.add_argument("--degree", type=int, help="fixed implicit degree (skips the adaptive loop)")
    fit.add_argument("--nmax", type=int, default=7)
    fit.add_argument("--lambda", dest="lam", type=float, help="regulator gain")
    fit.add_argument("--eps-ad", type=float)
    fit.add_argument("--eps-wg", type=float)
    fit.add_argument("--samples", type=int, help="uniform samples for non-polynomial curves")
    fit.add_argument("--normalize", action="store_true", help="fit in coordinates scaled to [-1, 1]^2")
    fit.add_argument("--normalize-tangents", action="store_true")
    fit.add_argument("--svg", help="write a contour plot")
    fit.add_argument("--csv", help="write coefficients as a,b,coeff rows")
    fit.add_argument("--report", help="write the JSON report here instead of stdout")
    fit.add_argument("--resolution", type=int, default=400, help="contour grid cells per side")
    return parser


def make_config(args, polynomial: bool, name: str | None = None) -> FitConfig:
    base = FitConfig.polynomial_defaults() if polynomial else FitConfig.discrete_defaults()
    overrides = {"n_max": args.nmax, "method": args.method, "normalize_coords": args.normalize,
                 "normalize_tangents": args.normalize_tangents}
    if args.lam is not None:
        overrides["lambda"] = args.lam
    if args.eps_ad is not None:
        overrides["eps_ad"] = args.eps_ad
    if args.eps_wg is not None:
        overrides["eps_wg"] = args.eps_wg
    if args.samples is not None:
        overrides["samples"] = args.samples
    elif not polynomial:
        overrides["samples"] = DEFAULT_SAMPLES.get(name, 50)
    cfg = FitConfig.from_dict({**base.as_dict(), **overrides})
    try:
        return cfg.validate()
    except ValueError as exc:
        raise SpecError(str(exc)) from None


def run_fit(args) -> dict:
    spec = load_spec(args.spec)
    curve = spec.build()
    cfg = make_config(args, spec.is_polynomial, spec.name)
    if args.degree is not None and args.degree < 1:
        raise SpecError(f"--degree must be >= 1, got {args.degree}")
    if args.resolution < 2:
        raise SpecError(f"--resolution must be >= 2, got {args.resolution}")

    samples = None
    if spec.is_polynomial:
        problem = curve
    else:
        samples = sample_uniform(curve, cfg.samples, normalize_tangents=cfg.normalize_tangents)
        problem = samples

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", SamplingWarning)
        if args.degree is not None:
            result, trace = fixed_degree_fit(problem, args.degree, cfg)
        elif spec.is_polynomial:
            result, trace = wgm_polynomial(problem, cfg)
        else:
            result, trace = wgm_discrete(problem, cfg)

    report = build_report(result, trace, cfg)
    _write(args.report, report_json(report)) if args.report else sys.stdout.write(report_json(report))
    if args.csv:
        _write(args.csv, coefficients_csv(result))
    if args.svg:
        _write(args.svg, _svg(result, curve, samples, args.resolution, cfg.method))
    return report


def _svg(result, curve, samples, resolution, method) -> str:
    a, b = curve.domain
    ts = np.linspace(a, b, 400)
    if isinstance(curve, BezierCurve2):
        dense = curve.position(ts)
    else:
        dense = np.array([curve.position(t) for t in ts], dtype=float)
    bbox = padded_bbox(dense if samples is None else np.vstack([dense, samples.points]))
    mesh = marching_squares(result, bbox, resolution)
    color = "black" if method == "dm" else "red"
    pts = None if samples is None else samples.points
    return render_svg(mesh.polylines(), [dense], bbox, samples=pts, contour_color=color)


def _write(path, text: str):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        run_fit(args)
    except SpecError as exc:
        _fail("spec", str(exc), EXIT_SPEC)
    except OSError as exc:
        _fail("io", str(exc), EXIT_IO)
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        _fail("fit", str(exc), EXIT_FIT)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
