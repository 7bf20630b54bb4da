import math

import numpy as np
import pytest

from fockhaus import entire


class TestMonomial:
    def test_constant(self):
        u0 = entire.monomial(0)
        assert u0.degree == 0
        assert u0(0.7 + 0.2j) == pytest.approx(1.0)

    def test_cube_at_two(self):
        assert entire.monomial(3)(2.0) == pytest.approx(8.0)

    def test_dilated_fifth_power(self):
        f = entire.dilate(entire.monomial(5), 2.0)
        assert f(2.0) == pytest.approx(1.0)

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            entire.monomial(-1)


class TestKernel:
    def test_zero_point_gives_constant(self):
        k = entire.kernel(1.0, 0.0)
        assert k.degree == 0
        assert k(5.0) == pytest.approx(1.0)

    def test_value_matches_exponential(self):
        k = entire.kernel(1.0, 1.0, radius=4.0)
        assert abs(k(1.0) - math.e) <= 1e-12 * math.e

    def test_coefficient_formula(self):
        k = entire.kernel(2.0, 1.0, radius=4.0)
        assert k.coeffs[3] == pytest.approx(8.0 / 6.0, rel=1e-14)

    def test_coefficient_ratio(self):
        a = 0.8 - 0.3j
        beta = 1.7
        k = entire.kernel(beta, a, radius=5.0)
        for n in range(k.degree - 1):
            ratio = k.coeffs[n + 1] / k.coeffs[n]
            assert ratio == pytest.approx(beta * np.conj(a) / (n + 1), rel=1e-12)

    def test_truncation_error_when_degree_too_small(self):
        with pytest.raises(entire.TruncationError):
            entire.kernel(1.0, 1.0, n_max=3, radius=10.0)
        with pytest.raises(entire.TruncationError):
            entire.kernel(5.0, 10.0, radius=12.0)  # needs degree beyond the cap

    def test_complex_evaluation_against_exp(self):
        a = 1.0 + 0.5j
        k = entire.kernel(1.0, a, radius=3.0)
        for z in (0.5, 1.0j, 1.0 + 1.0j, -2.0):
            assert k(z) == pytest.approx(np.exp(z * np.conj(a)), rel=1e-12)


class TestDilate:
    def test_identity(self):
        f = entire.CoeffFunction([1.0, 2.0, 3.0])
        assert entire.dilate(f, 1.0) is f

    def test_monomial_coefficient(self):
        g = entire.dilate(entire.monomial(2), 2.0)
        assert g.coeffs[2] == pytest.approx(0.25)

    def test_affine_example(self):
        f = entire.CoeffFunction([1.0, 1.0])
        assert entire.dilate(f, 4.0)(4.0) == pytest.approx(2.0)

    def test_composition_is_product(self):
        rng = np.random.default_rng(3)
        f = entire.CoeffFunction(rng.normal(size=8) + 1j * rng.normal(size=8))
        for s, t in ((1.5, 2.0), (1.0, 3.0), (2.5, 2.5)):
            lhs = entire.dilate(entire.dilate(f, s), t)
            rhs = entire.dilate(f, s * t)
            np.testing.assert_allclose(lhs.coeffs, rhs.coeffs, rtol=1e-14)

    def test_rejects_contraction(self):
        with pytest.raises(ValueError):
            entire.dilate(entire.monomial(1), 0.5)


class TestRademacher:
    def test_all_plus_signs(self):
        f = entire.CoeffFunction([1.0, -2.0, 3.0j])
        g = entire.rademacher_randomize(f, [1, 1, 1])
        assert g == f

    def test_single_flip(self):
        u3 = entire.monomial(3)
        g = entire.rademacher_randomize(u3, [1, 1, 1, -1])
        assert g.coeffs[3] == pytest.approx(-1.0)

    def test_involution(self):
        rng = np.random.default_rng(11)
        f = entire.CoeffFunction(rng.normal(size=12) + 1j * rng.normal(size=12))
        signs = rng.choice((-1, 1), size=12)
        g = entire.rademacher_randomize(entire.rademacher_randomize(f, signs), signs)
        np.testing.assert_allclose(g.coeffs, f.coeffs, rtol=0, atol=0)

    def test_sign_vector_too_short(self):
        with pytest.raises(ValueError):
            entire.rademacher_randomize(entire.monomial(3), [1, 1])

    def test_non_unit_signs_rejected(self):
        with pytest.raises(ValueError):
            entire.rademacher_randomize(entire.monomial(1), [1, 2])


class TestGaussianPeak:
    def test_value_at_origin(self):
        f = entire.gaussian_peak(1, 1.0)
        assert f(0.0) == pytest.approx(math.exp(-0.5), rel=1e-12)

    def test_unit_weighted_sup(self):
        # sup_r exp(n r - n^2/(2 alpha) - alpha r^2/2) = 1, attained at r = n/alpha
        for n in range(1, 6):
            f = entire.gaussian_peak(n, 1.0)
            r = np.linspace(0.0, 2.0 * n + 4.0, 4001)
            vals = np.abs(f(r)) * np.exp(-(r**2) / 2.0)
            assert vals.max() <= 1.0 + 1e-10
            at_peak = abs(f(float(n))) * math.exp(-(n**2) / 2.0)
            assert at_peak == pytest.approx(1.0, rel=1e-10)

    def test_normalized_value_at_peak_radius(self):
        for alpha in (0.5, 1.0, 2.0):
            for n in (1, 3):
                f = entire.gaussian_peak(n, alpha)
                x = n / alpha
                val = abs(f(x)) * math.exp(-alpha * x * x / 2.0)
                assert val == pytest.approx(1.0, rel=1e-11)


class TestCoeffFunction:
    def test_trailing_zeros_trimmed(self):
        f = entire.CoeffFunction([1.0, 2.0, 0.0, 0.0])
        assert f.degree == 1

    def test_zero_function(self):
        f = entire.CoeffFunction([0.0, 0.0])
        assert f.degree == 0
        assert f(3.0) == 0.0

    def test_polynomial_evaluation_exact(self):
        f = entire.CoeffFunction([1.0, -1.0, 2.0])
        z = 0.5 + 0.25j
        assert f(z) == pytest.approx(1.0 - z + 2.0 * z * z, rel=1e-15)

    def test_json_round_trip(self):
        f = entire.CoeffFunction([1.0 + 2.0j, 0.5])
        g = entire.from_json(f.to_json())
        assert g == f
        assert f.to_json_dict() == {"coeffs": [[1.0, 2.0], [0.5, 0.0]]}
