import math
import warnings

import numpy as np
import numpy.testing as npt
import pytest

from implicitize.curves import cardioid_c3, circle, spiral_c4
from implicitize.discrete import (
    ParametricFn,
    SampledCurve,
    SamplingWarning,
    assemble_discrete,
    build_D1_discrete,
    build_D2_discrete,
    sample_uniform,
)
from implicitize.implicit import ImplicitCurve
from oracles import direct_f, direct_grad, random_unit

CIRCLE = np.array([-1, 0, 0, 1, 0, 1]) / math.sqrt(3)


class TestSampling:
    def test_circle_params(self):
        s = sample_uniform(circle(), 5)
        npt.assert_allclose(s.params, [0, math.pi / 2, math.pi, 3 * math.pi / 2, 2 * math.pi])
        npt.assert_allclose(s.tangents[0], [0.0, 1.0])

    @pytest.mark.parametrize("f, N", [(cardioid_c3(), 10), (spiral_c4(), 20)])
    def test_example_sample_counts(self, f, N):
        s = sample_uniform(f, N)
        assert len(s) == N
        assert s.params[0] == f.domain[0] and s.params[-1] == f.domain[1]

    def test_deterministic(self):
        a, b = sample_uniform(spiral_c4(), 20), sample_uniform(spiral_c4(), 20)
        assert a.points.tobytes() == b.points.tobytes()
        assert a.tangents.tobytes() == b.tangents.tobytes()

    @pytest.mark.parametrize("f", [cardioid_c3(), spiral_c4(), circle()])
    def test_velocity_matches_position(self, f):
        h = 1e-5
        for t in np.linspace(*f.domain, 7)[1:-1]:
            fd = (np.array(f.position(t + h)) - np.array(f.position(t - h))) / (2 * h)
            npt.assert_allclose(f.velocity(t), fd, atol=1e-7)

    def test_normalized_tangents(self):
        s = sample_uniform(spiral_c4(), 9, normalize_tangents=True)
        npt.assert_allclose(np.linalg.norm(s.tangents, axis=1), 1.0)

    def test_non_finite_reports_parameter(self):
        f = ParametricFn(lambda t: (1.0 / t, 0.0), lambda t: (-1.0 / t**2, 0.0), (0.0, 1.0))
        with pytest.raises(ValueError, match="t = 0.0"):
            with np.errstate(divide="ignore"):
                sample_uniform(f, 3)

    def test_too_few(self):
        with pytest.raises(ValueError):
            sample_uniform(circle(), 1)


class TestCollocation:
    def test_line_points(self):
        x = np.array([0.0, 1.0, 2.5])
        s = SampledCurve(np.c_[x, x], np.ones((3, 2)))
        D1 = build_D1_discrete(s, 1)
        npt.assert_allclose(D1, np.c_[np.ones(3), x, x])
        npt.assert_allclose(D1 @ [0, 1, -1], 0)

    def test_circle_residuals(self):
        s = sample_uniform(circle(), 12)
        npt.assert_allclose(build_D1_discrete(s, 2) @ CIRCLE, 0, atol=1e-15)
        npt.assert_allclose(build_D2_discrete(s, 2) @ CIRCLE, 0, atol=1e-15)
        npt.assert_array_equal(build_D2_discrete(s, 2)[:, 0], 0)

    def test_random_against_direct(self, rng):
        P, T = rng.normal(size=(2, 8, 2))
        s = SampledCurve(P, T)
        b = rng.normal(size=10)
        c = ImplicitCurve(3, b)
        npt.assert_allclose(build_D1_discrete(s, 3) @ b, c(P[:, 0], P[:, 1]), rtol=1e-13, atol=1e-13)
        gx, gy = c.gradient(P[:, 0], P[:, 1])
        npt.assert_allclose(build_D2_discrete(s, 3) @ b, gx * T[:, 0] + gy * T[:, 1], rtol=1e-12, atol=1e-12)


class TestAssemble:
    def test_circle_kernel(self):
        F = assemble_discrete(sample_uniform(circle(), 16), 2, 0.01)
        assert abs(CIRCLE @ F.A @ CIRCLE) <= 1e-14

    @pytest.mark.parametrize("f, N, n", [(cardioid_c3(), 10, 4), (spiral_c4(), 20, 5)])
    def test_direct_sums(self, rng, f, N, n):
        s = sample_uniform(f, N)
        F = assemble_discrete(s, n, 0.01)
        x, y = s.points.T
        for _ in range(5):
            b = random_unit(rng, F.A.shape[0])
            ad = np.sum(direct_f(b, n, x, y) ** 2)
            gx, gy = direct_grad(b, n, x, y)
            wg = np.sum((gx * s.tangents[:, 0] + gy * s.tangents[:, 1]) ** 2)
            assert b @ F.A1 @ b == pytest.approx(ad, rel=1e-12)
            assert b @ F.A2 @ b == pytest.approx(wg, rel=1e-12)

    def test_warns_on_sparse_sampling(self):
        s = sample_uniform(circle(), 10)
        with pytest.warns(SamplingWarning):
            assemble_discrete(s, 3, 0.01)
        with warnings.catch_warnings():
            warnings.simplefilter("error", SamplingWarning)
            assemble_discrete(s, 1, 0.01)

    def test_rejects_negative_lambda(self):
        with pytest.raises(ValueError):
            assemble_discrete(sample_uniform(circle(), 10), 1, -1.0)
