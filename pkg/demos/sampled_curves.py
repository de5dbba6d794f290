"""Implicitizing curves that are only known through samples.

The cardioid is algebraic of degree 4 and ten samples are enough to pin
it down.  The Archimedean spiral is not algebraic at all, so the sweep
runs to the maximum degree and returns the best approximation it found.

    python3 demos/sampled_curves.py [output_dir]
"""

import sys
import warnings
from pathlib import Path

import numpy as np

from implicitize import FitConfig, wgm_discrete
from implicitize.implicit import canonical_vector
from implicitize.contour import marching_squares, padded_bbox
from implicitize.curves import cardioid_c3, cardioid_quartic, spiral_c4
from implicitize.discrete import SamplingWarning, sample_uniform
from implicitize.render import render_svg

warnings.simplefilter("ignore", SamplingWarning)


def run(name, f, N, out_dir):
    samples = sample_uniform(f, N)
    result, trace = wgm_discrete(samples, FitConfig.discrete_defaults(samples=N))
    print(f"{name}: {N} samples on t in {f.domain}")
    for rec in trace.records:
        print(f"  n={rec.n}  e1={rec.e1:.3e}  e2={rec.e2:.3e}")
    print(f"  -> degree {trace.chosen_degree} ({trace.termination})")

    dense = np.array([f.position(t) for t in np.linspace(*f.domain, 800)])
    bbox = padded_bbox(np.vstack([dense, samples.points]))
    mesh = marching_squares(result, bbox, resolution=400)
    path = out_dir / f"{name}.svg"
    path.write_text(render_svg(mesh.polylines(), [dense], bbox, samples=samples.points))
    print(f"  wrote {path}\n")
    return result


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo_output")
    out_dir.mkdir(parents=True, exist_ok=True)

    cardioid = run("cardioid", cardioid_c3(), 10, out_dir)
    if cardioid.degree == 4:
        cos = canonical_vector(cardioid.coeffs) @ canonical_vector(cardioid_quartic())
        print(f"cosine with (x^2+y^2-2x)^2 - 4(x^2+y^2): {cos:.12f}\n")

    run("spiral", spiral_c4(), 20, out_dir)


if __name__ == "__main__":
    main()
