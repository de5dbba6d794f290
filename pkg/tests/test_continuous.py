import numpy as np
import numpy.testing as npt
import pytest

from implicitize import bernstein as bz
from implicitize.continuous import BezierCurve2, assemble, build_D1, build_D2, compose_monomial
from implicitize.curves import C1_CONTROL_POINTS, C2_CONTROL_POINTS
from oracles import (
    ad_integral,
    bernstein_basis_values,
    bezier_point,
    bezier_tangent,
    direct_f,
    direct_grad,
    random_unit,
    wg_integral,
)


class TestCurve:
    def test_validation(self):
        with pytest.raises(ValueError):
            BezierCurve2([(0.0, 0.0)])
        with pytest.raises(ValueError):
            BezierCurve2([(0, 0), (1, 1)], (1.0, 1.0))
        with pytest.raises(ValueError):
            BezierCurve2([(0, 0), (np.inf, 1)])

    def test_position_and_velocity_on_domain(self):
        curve = BezierCurve2(C1_CONTROL_POINTS, (2.0, 6.0))
        t = np.array([2.0, 3.5, 6.0])
        s = (t - 2.0) / 4.0
        npt.assert_allclose(curve.position(t), bezier_point(C1_CONTROL_POINTS, s), atol=1e-14)
        npt.assert_allclose(curve.velocity(t), bezier_tangent(C1_CONTROL_POINTS, s) / 4.0, atol=1e-14)


class TestComposeMonomial:
    def test_line_xy(self, line):
        npt.assert_allclose(compose_monomial(line, 1, 1, 2).coeffs, [0.0, 0.0, 1.0])

    def test_constant(self, c2):
        npt.assert_array_equal(compose_monomial(c2, 0, 0, 7).coeffs, np.ones(8))

    def test_c1_x2y(self, c1):
        poly = compose_monomial(c1, 2, 1, 9)
        t = np.linspace(0, 1, 10)
        xy = bezier_point(C1_CONTROL_POINTS, t)
        npt.assert_allclose(bz.evaluate(poly, t), xy[:, 0] ** 2 * xy[:, 1], rtol=1e-10, atol=1e-12)

    def test_insufficient_degree(self, c1):
        with pytest.raises(ValueError):
            compose_monomial(c1, 2, 1, 8)


class TestCollocation:
    def test_line_D1(self, line):
        D1 = build_D1(line, 1)
        npt.assert_allclose(D1, [[1, 0, 0], [1, 1, 1]])
        npt.assert_allclose(D1 @ [0, 1, -1], 0)

    def test_line_D2(self, line):
        D2 = build_D2(line, 1)
        npt.assert_allclose(D2, [[0, 1, 1], [0, 1, 1]])
        npt.assert_allclose(D2 @ [0, 1, -1], 0)

    def test_constant_columns(self, c2):
        npt.assert_array_equal(build_D1(c2, 3)[:, 0], 1.0)
        npt.assert_array_equal(build_D2(c2, 3)[:, 0], 0.0)

    @pytest.mark.parametrize("which", ["D1", "D2"])
    def test_factorization_identity(self, c1, rng, which):
        n = 3
        D = build_D1(c1, n) if which == "D1" else build_D2(c1, n)
        t = np.linspace(0, 1, 50)
        alpha = bernstein_basis_values(3 * n, t)
        xy = bezier_point(C1_CONTROL_POINTS, t)
        tan = bezier_tangent(C1_CONTROL_POINTS, t)
        for _ in range(20):
            b = rng.normal(size=10)
            if which == "D1":
                direct = direct_f(b, n, xy[:, 0], xy[:, 1])
            else:
                gx, gy = direct_grad(b, n, xy[:, 0], xy[:, 1])
                direct = gx * tan[:, 0] + gy * tan[:, 1]
            assert np.max(np.abs(alpha @ D @ b - direct)) <= 1e-9


class TestAssemble:
    def test_line_exact(self, line):
        F = assemble(line, 1, 0.1)
        b = np.array([0, 1, -1]) / np.sqrt(2)
        assert abs(b @ F.A @ b) <= 1e-15

    @pytest.mark.parametrize("cps, n", [(C1_CONTROL_POINTS, 2), (C2_CONTROL_POINTS, 3)])
    def test_integral_identities(self, rng, cps, n):
        F = assemble(BezierCurve2(cps), n, 0.1)
        for _ in range(10):
            b = random_unit(rng, F.A.shape[0])
            assert b @ F.A1 @ b == pytest.approx(ad_integral(cps, b, n), rel=1e-8)
            assert b @ F.A2 @ b == pytest.approx(wg_integral(cps, b, n), rel=1e-8)
            assert F.ad_error(b) == pytest.approx(ad_integral(cps, b, n), rel=1e-8)
            assert F.wg_error(b) == pytest.approx(wg_integral(cps, b, n), rel=1e-8)

    def test_general_domain(self, rng):
        # same geometry on [-1, 3]: integrals pick up the parametrization
        dom = (-1.0, 3.0)
        F = assemble(BezierCurve2(C1_CONTROL_POINTS, dom), 2, 0.5)
        b = random_unit(rng, 6)
        assert b @ F.A1 @ b == pytest.approx(ad_integral(C1_CONTROL_POINTS, b, 2, dom), rel=1e-10)
        assert b @ F.A2 @ b == pytest.approx(wg_integral(C1_CONTROL_POINTS, b, 2, dom), rel=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
    def test_psd(self, c2, n):
        F = assemble(c2, n, 0.1)
        for M in (F.A1, F.A2, F.A):
            npt.assert_array_equal(M, M.T)
            assert np.linalg.eigvalsh(M).min() >= -1e-10 * np.linalg.norm(M, 2)

    def test_exact_cubic_in_kernel(self, c1):
        A = assemble(c1, 3, 0.1).A
        assert np.linalg.eigvalsh(A).min() <= 1e-12 * np.linalg.norm(A, 2)

    def test_rejects_negative_lambda(self, c1):
        with pytest.raises(ValueError):
            assemble(c1, 2, -0.1)

    def test_lambda_zero_drops_gradient_term(self, c1):
        F = assemble(c1, 2, 0.0)
        npt.assert_array_equal(F.A, F.A1)
