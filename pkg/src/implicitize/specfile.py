"""JSON curve specifications.

Two kinds are understood::

    {"kind": "bezier", "degree": 3, "control_points": [[0, 0], [2, 1], [0, 2], [1, 0]], "domain": [0, 1]}
    {"kind": "named", "name": "cardioid_c3", "domain": [0, 10]}
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .continuous import BezierCurve2
from .curves import NAMED, named_curve
from .discrete import ParametricFn

__all__ = ["SpecError", "CurveSpec", "parse_spec", "load_spec", "dump_spec"]

_FIELDS = {
    "bezier": ({"kind", "degree", "control_points"}, {"domain"}),
    "named": ({"kind", "name", "domain"}, set()),
}


class SpecError(ValueError):
    """Invalid curve specification or fit configuration."""


@dataclass(frozen=True)
class CurveSpec:
    kind: str
    domain: tuple
    degree: int | None = None
    control_points: tuple | None = None
    name: str | None = None

    @property
    def is_polynomial(self) -> bool:
        return self.kind == "bezier"

    def build(self) -> BezierCurve2 | ParametricFn:
        if self.kind == "bezier":
            return BezierCurve2(self.control_points, self.domain)
        return named_curve(self.name, self.domain)

    def to_dict(self) -> dict:
        if self.kind == "bezier":
            return {
                "kind": "bezier",
                "degree": self.degree,
                "control_points": [list(p) for p in self.control_points],
                "domain": list(self.domain),
            }
        return {"kind": "named", "name": self.name, "domain": list(self.domain)}


def _number(v, what) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
        raise SpecError(f"{what} must be a finite number, got {v!r}")
    return float(v)


def _domain(raw) -> tuple:
    if not isinstance(raw, list) or len(raw) != 2:
        raise SpecError(f"domain must be a two-element list, got {raw!r}")
    a, b = (_number(v, "domain bound") for v in raw)
    if not b > a:
        raise SpecError(f"empty parameter domain [{a}, {b}]")
    return (a, b)


def parse_spec(text: str | bytes) -> CurveSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise SpecError("curve spec must be a JSON object")
    kind = doc.get("kind")
    if kind not in _FIELDS:
        raise SpecError(f"unknown curve kind {kind!r}; expected one of {sorted(_FIELDS)}")
    required, optional = _FIELDS[kind]
    missing = required - doc.keys()
    if missing:
        raise SpecError(f"missing field(s) for {kind} spec: {sorted(missing)}")
    unknown = doc.keys() - required - optional
    if unknown:
        raise SpecError(f"unknown field(s) for {kind} spec: {sorted(unknown)}")

    if kind == "named":
        name = doc["name"]
        if name not in NAMED:
            raise SpecError(f"unknown named curve {name!r}; expected one of {sorted(NAMED)}")
        return CurveSpec("named", _domain(doc["domain"]), name=name)

    degree = doc["degree"]
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise SpecError(f"degree must be an integer >= 1, got {degree!r}")
    pts = doc["control_points"]
    if not isinstance(pts, list):
        raise SpecError("control_points must be a list of [x, y] pairs")
    if len(pts) != degree + 1:
        raise SpecError(f"degree {degree} needs {degree + 1} control points, got {len(pts)}")
    cps = []
    for p in pts:
        if not isinstance(p, list) or len(p) != 2:
            raise SpecError(f"control point must be an [x, y] pair, got {p!r}")
        cps.append((_number(p[0], "coordinate"), _number(p[1], "coordinate")))
    domain = _domain(doc["domain"]) if "domain" in doc else (0.0, 1.0)
    return CurveSpec("bezier", domain, degree=degree, control_points=tuple(cps))


def load_spec(path) -> CurveSpec:
    with open(path, "rb") as fh:
        return parse_spec(fh.read())


def dump_spec(spec: CurveSpec) -> str:
    return json.dumps(spec.to_dict())
