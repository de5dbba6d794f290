"""Report, CSV and SVG writers for fit results."""

from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET

import numpy as np

from .adaptive import FitConfig, FitTrace
from .implicit import ImplicitCurve

__all__ = ["SCHEMA_VERSION", "build_report", "report_json", "coefficients_csv", "render_svg"]

SCHEMA_VERSION = 1


def _floats(a) -> list:
    return [float(v) for v in np.asarray(a).reshape(-1)]


def build_report(curve: ImplicitCurve, trace: FitTrace, cfg: FitConfig) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "method": cfg.method,
        "config": cfg.as_dict(),
        "trace": [
            {"n": r.n, "e1": r.e1, "e2": r.e2, "lambda_min": r.lambda_min, "coeffs": _floats(r.coeffs)}
            for r in trace.records
        ],
        "chosen_degree": trace.chosen_degree,
        "termination": trace.termination,
        "coeffs": _floats(curve.coeffs),
        "basis_order": [list(e) for e in curve.basis.exponents],
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=False) + "\n"


def coefficients_csv(curve: ImplicitCurve) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "coeff"])
    for (a, b), c in zip(curve.basis.exponents, curve.coeffs):
        w.writerow([a, b, repr(float(c))])
    return buf.getvalue()


def _path_data(points, to_px) -> str:
    pts = [to_px(p) for p in points]
    head = "M{:.3f},{:.3f}".format(*pts[0])
    return head + "".join(" L{:.3f},{:.3f}".format(*p) for p in pts[1:])


def render_svg(contour_lines, input_curves, bbox, samples=None, width: int = 600, contour_color: str = "red") -> str:
    """SVG with the input curve(s) dashed in blue and the implicit contour solid.

    ``contour_lines`` and ``input_curves`` are lists of (M, 2) polylines in
    model coordinates; ``samples`` are drawn as dots.
    """
    x0, y0, x1, y1 = bbox
    height = max(1, int(round(width * (y1 - y0) / (x1 - x0))))

    def to_px(p):
        return ((p[0] - x0) / (x1 - x0) * width, (y1 - p[1]) / (y1 - y0) * height)

    svg = ET.Element(
        "svg",
        xmlns="http://www.w3.org/2000/svg",
        width=str(width),
        height=str(height),
        viewBox=f"0 0 {width} {height}",
    )
    for line in input_curves:
        ET.SubElement(svg, "path", d=_path_data(line, to_px), fill="none", stroke="blue",
                      **{"stroke-width": "1.5", "stroke-dasharray": "6,4", "class": "input"})
    for line in contour_lines:
        if len(line) < 2:
            continue
        ET.SubElement(svg, "path", d=_path_data(line, to_px), fill="none", stroke=contour_color,
                      **{"stroke-width": "1.5", "class": "contour"})
    if samples is not None:
        for p in np.asarray(samples).reshape(-1, 2):
            cx, cy = to_px(p)
            ET.SubElement(svg, "circle", cx=f"{cx:.3f}", cy=f"{cy:.3f}", r="3", fill="blue")
    return ET.tostring(svg, encoding="unicode") + "\n"
