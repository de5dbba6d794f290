import numpy as np
import numpy.testing as npt
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from implicitize import bernstein as bz
from oracles import bernstein_basis_values, bernstein_power_eval, gauss_legendre

coeff_lists = st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=7)


class TestEvaluate:
    def test_linear_midpoint(self):
        assert bz.evaluate([0.0, 1.0], 0.5) == pytest.approx(0.5)

    def test_partition_of_unity(self):
        assert bz.evaluate([1.0, 1.0, 1.0], 0.3) == pytest.approx(1.0)

    def test_cubic_against_power_expansion(self):
        # (0,2,0,1) -> 2*3t(1-t)^2 + t^3
        t = 0.5
        expected = 6 * t * (1 - t) ** 2 + t**3
        assert bz.evaluate([0.0, 2.0, 0.0, 1.0], t) == pytest.approx(expected, rel=1e-15)

    def test_endpoints(self):
        p = bz.BernsteinPoly([3.0, -1.0, 4.0, 1.5])
        assert p(0.0) == 3.0
        assert p(1.0) == 1.5

    def test_vectorized(self, rng):
        c = rng.normal(size=6)
        t = np.linspace(0, 1, 13)
        npt.assert_allclose(bz.evaluate(c, t), bernstein_power_eval(c, t), rtol=1e-12, atol=1e-14)


class TestMultiply:
    def test_t_times_one_minus_t(self):
        npt.assert_allclose(bz.multiply([1.0, 0.0], [0.0, 1.0]).coeffs, [0.0, 0.5, 0.0])

    def test_by_one_is_elevation(self):
        npt.assert_allclose(bz.multiply([1.0, 1.0], [3.0, 5.0]).coeffs, [3.0, 4.0, 5.0])

    def test_t_squared(self):
        npt.assert_allclose(bz.multiply([0.0, 1.0], [0.0, 1.0]).coeffs, [0.0, 0.0, 1.0])

    @settings(max_examples=50, deadline=None)
    @given(coeff_lists, coeff_lists)
    def test_pointwise_product(self, a, b):
        prod = bz.multiply(a, b)
        assert prod.degree == len(a) + len(b) - 2
        t = np.linspace(0, 1, 21)
        lhs = bz.evaluate(prod, t)
        rhs = bernstein_power_eval(a, t) * bernstein_power_eval(b, t)
        scale = np.max(np.abs(a)) * np.max(np.abs(b)) + 1e-300
        npt.assert_allclose(lhs, rhs, rtol=1e-10, atol=1e-10 * scale)


class TestElevate:
    def test_constant(self):
        npt.assert_allclose(bz.elevate([1.0], 2).coeffs, [1.0, 1.0, 1.0])

    def test_linear(self):
        npt.assert_allclose(bz.elevate([0.0, 1.0], 2).coeffs, [0.0, 0.5, 1.0])

    def test_values_preserved(self, rng):
        a = rng.normal(size=4)
        e = bz.elevate(a, 6)
        t = np.linspace(0, 1, 11)
        npt.assert_allclose(bz.evaluate(e, t), bz.evaluate(a, t), atol=1e-12)

    def test_rejects_lowering(self):
        with pytest.raises(ValueError):
            bz.elevate([1.0, 2.0, 3.0], 1)

    @pytest.mark.parametrize("p", [0, 1, 5, 17, 30])
    def test_partition_of_unity(self, p):
        one = bz.elevate([1.0], p)
        for t in (0.0, 0.123, 0.5, 0.999):
            assert bz.evaluate(one, t) == pytest.approx(1.0, abs=1e-13)


class TestDerivative:
    def test_identity(self):
        npt.assert_allclose(bz.derivative([0.0, 1.0]).coeffs, [1.0])

    def test_constant(self):
        npt.assert_allclose(bz.derivative([1.0, 1.0, 1.0]).coeffs, [0.0, 0.0])

    def test_t_squared(self):
        d = bz.derivative([0.0, 0.0, 1.0])
        npt.assert_allclose(d.coeffs, [0.0, 2.0])
        assert d(0.7) == pytest.approx(1.4)

    def test_rejects_constant(self):
        with pytest.raises(ValueError):
            bz.derivative([2.0])

    def test_central_difference_order(self, rng):
        a = rng.normal(size=6)
        d = bz.derivative(a)
        t = 0.37
        errs = []
        for h in (1e-3, 1e-4):
            fd = (bz.evaluate(a, t + h) - bz.evaluate(a, t - h)) / (2 * h)
            errs.append(abs(bz.evaluate(d, t) - fd))
        # second order: a 10x smaller step shrinks the error about 100x
        assert 50 < errs[0] / errs[1] < 200


class TestGram:
    def test_degree_zero(self):
        npt.assert_allclose(bz.gram(0), [[1.0]])

    def test_degree_one(self):
        npt.assert_allclose(bz.gram(1), [[1 / 3, 1 / 6], [1 / 6, 1 / 3]], rtol=1e-15)

    @pytest.mark.parametrize("p", [2, 9, 20])
    def test_against_quadrature(self, p):
        t, w = gauss_legendre(0.0, 1.0, order=p + 8)
        B = bernstein_basis_values(p, t)
        expected = (B * w[:, None]).T @ B
        npt.assert_allclose(bz.gram(p), expected, rtol=1e-12)

    @pytest.mark.parametrize("p", [1, 4, 12])
    def test_structure(self, p):
        G = bz.gram(p)
        npt.assert_array_equal(G, G.T)
        assert np.all(G > 0)
        assert np.linalg.eigvalsh(G).min() > 0
        assert G.sum() == pytest.approx(1.0, rel=1e-13)


class TestPowerToBernstein:
    @pytest.mark.parametrize(
        "mono, expected",
        [([0.0, 1.0], [0.0, 1.0]), ([1.0], [1.0]), ([0.0, 0.0, 1.0], [0.0, 0.0, 1.0])],
    )
    def test_small_cases(self, mono, expected):
        npt.assert_allclose(bz.power_to_bernstein(mono).coeffs, expected)

    def test_random_values(self, rng):
        mono = rng.normal(size=5)
        t = np.linspace(0, 1, 9)
        npt.assert_allclose(bz.evaluate(bz.power_to_bernstein(mono), t), np.polyval(mono[::-1], t), atol=1e-13)


def test_binomial_table():
    tab = bz.binomial_table(10)
    assert tab[10, 5] == 252
    assert tab[3, 5] == 0


def test_poly_is_immutable():
    p = bz.BernsteinPoly([1.0, 2.0])
    with pytest.raises(ValueError):
        p.coeffs[0] = 5.0
