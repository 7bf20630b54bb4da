import json
import math

import numpy as np
import pytest
from scipy import integrate

from fockhaus import measure as msr


def quad_moment_oracle(phi, lo, hi, n):
    """Independent moment oracle: direct adaptive quadrature in t."""
    val, _ = integrate.quad(
        lambda t: phi(t) * t ** -(n + 1.0), lo, hi, epsrel=1e-12, limit=400
    )
    return val


class TestMoments:
    def test_hardy_density_moment(self):
        m = msr.PowerTailDensity(1.0)
        assert msr.moment(m, 2) == pytest.approx(1.0 / 3.0, rel=1e-12)

    def test_point_mass_moment_zero(self):
        m = msr.PointMasses([(2.0, 2.0)])
        assert msr.moment(m, 0) == pytest.approx(1.0, rel=1e-14)

    def test_mellin_square_moment(self):
        m = msr.MellinConvolution(msr.hardy_measure(), msr.hardy_measure())
        assert msr.moment(m, 3) == pytest.approx(1.0 / 16.0, rel=1e-12)

    def test_power_tail_matches_quadrature_oracle(self):
        m = msr.PowerTailDensity(1.5)
        for n in (0, 1, 4, 9):
            ref = quad_moment_oracle(lambda t: t**-1.5, 1.0, np.inf, n)
            assert msr.moment(m, n) == pytest.approx(ref, rel=1e-10)

    def test_generic_density_moment_quadrature(self):
        m = msr.Density(lambda t: 1.0, (0.5, 1.0))
        for n in (0, 1, 5):
            ref = quad_moment_oracle(lambda t: 1.0, 0.5, 1.0, n)
            assert msr.moment(m, n) == pytest.approx(ref, rel=1e-9)

    def test_moment_methods_tagged(self):
        seq = msr.moments(msr.hardy_measure(), 3)
        assert all(tag == msr.CLOSED_FORM for tag in seq.methods)
        seq = msr.moments(msr.Density(lambda t: 1.0, (0.5, 1.0)), 2)
        assert all(tag.startswith("quadrature") for tag in seq.methods)

    def test_divergent_density_rejected(self):
        with pytest.raises(msr.DivergentMoment):
            msr.Density(lambda t: 1.0 / t, (0.0, 1.0))

    def test_scaled_moments(self):
        m = msr.Scaled(3.0, msr.hardy_measure())
        assert msr.moment(m, 1) == pytest.approx(1.5, rel=1e-14)


class TestBetaMoment:
    def test_unit_case(self):
        assert msr.beta_moment(1.0, 1.0, 0) == pytest.approx(1.0, rel=1e-14)

    def test_integer_case_with_quadrature_crosscheck(self):
        assert msr.beta_moment(2.0, 1.0, 3) == pytest.approx(0.2, rel=1e-13)
        ref = quad_moment_oracle(lambda t: t**-2.0, 1.0, np.inf, 3)
        assert msr.beta_moment(2.0, 1.0, 3) == pytest.approx(ref, rel=1e-10)

    def test_half_integer_case_against_defining_integral(self):
        val = msr.beta_moment(2.0, 0.5, 2)
        ref = quad_moment_oracle(
            lambda t: (t - 1.0) ** -0.5 * t**-2.0, 1.0, np.inf, 2
        )
        assert val == pytest.approx(ref, rel=1e-10)

    def test_domain_errors(self):
        with pytest.raises(msr.DomainError):
            msr.beta_moment(0.5, 2.0, 1)  # violates a+1 > b
        with pytest.raises(msr.DomainError):
            msr.beta_moment(1.0, -1.0, 1)

    def test_beta_tail_density_agrees(self):
        m = msr.BetaTailDensity(2.0, 0.5)
        for n in (0, 2, 7):
            assert msr.moment(m, n) == pytest.approx(
                msr.beta_moment(2.0, 0.5, n), rel=1e-14
            )


class TestSupportReport:
    def test_atoms_at_and_above_one(self):
        rep = msr.support_report(msr.PointMasses([(1.0, 1.0), (1.0, 2.0)]))
        assert rep.mass_at_1 == 1.0
        assert rep.mass_below_1 == 0.0
        assert rep.inf_support == 1.0

    def test_hardy_support(self):
        rep = msr.support_report(msr.hardy_measure())
        assert rep.mass_unit_interval == 0.0
        assert rep.inf_support == 1.0

    def test_bump_below_one(self):
        rep = msr.support_report(msr.Density(lambda t: 1.0, (0.5, 1.0)))
        assert rep.mass_below_1 == pytest.approx(0.5, rel=1e-10)
        assert rep.inf_support == 0.5

    def test_mellin_of_atoms(self):
        left = msr.PointMasses([(1.0, 1.0), (0.5, 0.5)])
        right = msr.PointMasses([(1.0, 1.0), (2.0, 2.0)])
        conv = msr.MellinConvolution(left, right)
        # atom pairs: (1*1)=1 w 1, (1*2)=2 w 2, (0.5*1)=0.5 w 0.5, (0.5*2)=1 w 1
        assert conv.mass_at(1.0) == pytest.approx(2.0)
        assert conv.mass_below(1.0) == pytest.approx(0.5)
        assert conv.inf_support == 0.5

    def test_duplicate_atoms_merged(self):
        m = msr.PointMasses([(1.0, 2.0), (2.0, 2.0), (1.0, 1.0)])
        assert m.atoms == ((1.0, 1.0), (3.0, 2.0))


class TestNormalize:
    def test_already_normalized(self):
        m = msr.PointMasses([(2.0, 2.0)])
        normed = msr.normalize(m)
        assert isinstance(normed, msr.Scaled)
        assert normed.c == pytest.approx(1.0, rel=1e-14)

    def test_scale_factor_half(self):
        normed = msr.normalize(msr.PointMasses([(4.0, 2.0)]))
        assert normed.c == pytest.approx(0.5, rel=1e-14)

    def test_hardy_is_probability_after_weighting(self):
        # mu_0 = 1 already, verified independently by quadrature
        ref = quad_moment_oracle(lambda t: t**-1.0, 1.0, np.inf, 0)
        assert ref == pytest.approx(1.0, rel=1e-10)
        normed = msr.normalize(msr.hardy_measure())
        assert normed.c == pytest.approx(1.0, rel=1e-12)


class TestInvariants:
    MEASURES = None

    def _measures(self):
        return [
            msr.hardy_measure(),
            msr.BetaTailDensity(2.0, 1.0),
            msr.BetaTailDensity(3.0, 2.5),
            msr.dirac(2.0),
            msr.MellinConvolution(msr.hardy_measure(), msr.hardy_measure()),
            msr.geometric_atoms(0.5, 2.0),
            msr.truncated_atom_family(
                lambda k: 2.0**-k, lambda k: 1.0 + 1.0 / k, 60, 2.0**-60, inf_support=1.0
            ),
        ]

    def test_moments_non_increasing_when_support_above_one(self):
        for m in self._measures():
            seq = msr.moments(m, 40)
            diffs = np.diff(seq.values)
            assert (diffs <= 1e-12).all(), repr(m)

    def test_moment_roots_non_decreasing_when_normalized(self):
        for m in self._measures():
            normed = msr.normalize(m)
            seq = msr.moments(normed, 40)
            roots = [seq[n] ** (1.0 / n) for n in range(1, 41)]
            assert (np.diff(roots) >= -1e-12).all(), repr(m)

    def test_root_bracket_from_support(self):
        for m in self._measures():
            rep = msr.support_report(m)
            bound = max(rep.total_weighted_mass, 1.0) / rep.inf_support
            seq = msr.moments(m, 40)
            for n in range(1, 41):
                assert seq[n] ** (1.0 / n) <= bound + 1e-12, repr(m)

    def test_mellin_moments_are_products(self):
        left = msr.BetaTailDensity(2.0, 1.0)
        right = msr.geometric_atoms(0.25, 1.5)
        conv = msr.MellinConvolution(left, right)
        for n in range(25):
            assert msr.moment(conv, n) == pytest.approx(
                msr.moment(left, n) * msr.moment(right, n), rel=1e-13
            )

    def test_geometric_atoms_match_finite_sum_formula(self):
        lam, ratio = 0.5, 2.0
        m = msr.geometric_atoms(lam, ratio)
        k = len(m.atoms)
        for n in (0, 1, 3, 8):
            y = lam / ratio ** (n + 1.0)
            ref = y * (1.0 - y**k) / (1.0 - y)
            assert msr.moment(m, n) == pytest.approx(ref, rel=1e-12)


class TestDecayBounds:
    def test_power_tail_envelope(self):
        for a in (0.5, 1.0, 3.0):
            m = msr.PowerTailDensity(a)
            up, lo = m.decay_upper(), m.decay_lower()
            for n in range(60):
                mu = msr.moment(m, n)
                assert mu <= up.pointwise(n) * (1 + 1e-12)
                assert mu >= lo.pointwise(n) * (1 - 1e-12)

    def test_beta_tail_envelope(self):
        for a, b in ((2.0, 1.5), (2.0, 0.5), (1.0, 1.8), (4.0, 3.0)):
            m = msr.BetaTailDensity(a, b)
            up, lo = m.decay_upper(), m.decay_lower()
            for n in range(80):
                mu = msr.moment(m, n)
                assert mu <= up.pointwise(n) * (1 + 1e-12), (a, b, n)
                assert mu >= lo.pointwise(n) * (1 - 1e-12), (a, b, n)

    def test_atom_envelope(self):
        m = msr.PointMasses([(0.5, 1.5), (0.25, 4.0)])
        up, lo = m.decay_upper(), m.decay_lower()
        for n in range(40):
            mu = msr.moment(m, n)
            assert lo.pointwise(n) * (1 - 1e-12) <= mu <= up.pointwise(n) * (1 + 1e-12)


class TestJson:
    CASES = [
        {"type": "point_masses", "atoms": [[1.0, 1.0], [0.5, 2.0]]},
        {"type": "density", "kind": "power_tail", "a": 1.0},
        {"type": "density", "kind": "beta_tail", "a": 2.0, "b": 1.0},
        {
            "type": "mellin",
            "left": {"type": "density", "kind": "power_tail", "a": 1.0},
            "right": {"type": "density", "kind": "power_tail", "a": 1.0},
        },
        {
            "type": "scaled",
            "c": 0.5,
            "inner": {"type": "point_masses", "atoms": [[1.0, 1.0]]},
        },
    ]

    def test_round_trip(self):
        for case in self.CASES:
            m = msr.from_json_dict(case)
            again = msr.from_json_dict(json.loads(m.to_json()))
            assert again == m
            assert m.to_json_dict() == case

    def test_unknown_type_rejected(self):
        with pytest.raises(ValueError):
            msr.from_json_dict({"type": "mystery"})

    def test_generic_density_has_no_json(self):
        with pytest.raises(ValueError):
            msr.Density(lambda t: 1.0, (0.5, 1.0)).to_json_dict()


class TestNamedMeasures:
    def test_named(self):
        assert isinstance(msr.named_measure("hardy"), msr.PowerTailDensity)
        assert isinstance(msr.named_measure("beta:2:1"), msr.BetaTailDensity)
        d = msr.named_measure("dirac:2")
        assert d.atoms == ((2.0, 2.0),)
        assert d.mu0 == pytest.approx(1.0)
        assert isinstance(msr.named_measure("geom:0.5:2"), msr.PointMasses)
        with pytest.raises(ValueError):
            msr.named_measure("nope")

    def test_atom_validation(self):
        with pytest.raises(ValueError):
            msr.PointMasses([(-1.0, 1.0)])
        with pytest.raises(ValueError):
            msr.PointMasses([(1.0, 0.0)])
        with pytest.raises(ValueError):
            msr.PointMasses([])
