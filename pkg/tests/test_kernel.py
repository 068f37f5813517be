"""Closed-form kernel, series oracle, monomial norms, domain predicates."""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import pytest
from scipy.integrate import dblquad

from hartogs import (
    BiPoly,
    CoprimePair,
    DegenerateInput,
    InternalMismatch,
    KernelFormula,
    OutsideDomain,
    ValidationError,
    eval_kernel,
    in_domain,
    interior_margin,
    k1_kernel,
    kernel_formula,
    monomial_norm_sq,
    numerator_effective,
    numerator_oracle,
    restrict_s0,
    restrict_s0_zero,
    series_kernel,
    series_tail_estimate,
)

PAIRS = [CoprimePair(2, 1), CoprimePair(3, 2), CoprimePair(3, 1), CoprimePair(5, 3)]


def interior_point(pair: CoprimePair, radial: float, phases: tuple[float, float]):
    """A point of the domain with |z2| = radial and |z1| well inside the cusp."""
    r1 = 0.6 * radial ** (pair.n / pair.m)
    return (
        r1 * cmath.exp(1j * phases[0]),
        radial * cmath.exp(1j * phases[1]),
    )


class TestNumerator:
    def test_frozen_p21(self):
        # P_{2,1} = t + t^2 + 4 s t + s^2 + s^2 t
        expected = BiPoly({(0, 1): 1, (0, 2): 1, (1, 1): 4, (2, 0): 1, (2, 1): 1})
        assert numerator_effective(CoprimePair(2, 1)) == expected

    def test_frozen_p32(self):
        # spike 9 s^2 t^2 plus four bands over j in {0, 1}
        expected = BiPoly(
            {
                (2, 2): 9,
                (0, 3): 2,
                (0, 4): 1,
                (3, 1): 4,
                (3, 2): 2,
                (1, 2): 2,
                (1, 3): 4,
                (4, 0): 1,
                (4, 1): 2,
            }
        )
        assert numerator_effective(CoprimePair(3, 2)) == expected

    def test_oracle_equality_small(self):
        for m in range(2, 13):
            for n in range(1, m):
                if math.gcd(m, n) == 1:
                    pair = CoprimePair(m, n)
                    assert numerator_effective(pair) == numerator_oracle(pair)

    def test_term_count_and_degrees(self):
        for pair in PAIRS:
            p = numerator_effective(pair)
            assert p.num_terms == 4 * pair.m - 3
            assert p.total_degree == 2 * pair.m - 1
            assert p.degree_s == 2 * pair.m - 2
            assert p.degree_t == 2 * pair.n

    def test_corner_coefficients(self):
        # the j = 0 band always contributes coefficient m-n at t^{2n}
        # and coefficient n at s^0 t^{2n-1}
        for pair in PAIRS:
            p = numerator_effective(pair)
            assert p.coeff(0, 2 * pair.n) == pair.m - pair.n
            assert p.coeff(0, 2 * pair.n - 1) == pair.n

    def test_value_at_one_is_m_cubed(self):
        for pair in PAIRS:
            assert numerator_effective(pair).eval_exact(1, 1) == pair.m**3


class TestKernelFormula:
    def test_verify_and_fields(self):
        f = kernel_formula(CoprimePair(2, 1), verify=True)
        assert isinstance(f, KernelFormula)
        assert f.verify()
        assert f.denominator_text == "2*pi^2*(1-t)^2*(t^1-s^2)^2"

    def test_json_shape(self):
        d = kernel_formula(CoprimePair(2, 1)).to_json_dict()
        assert d["m"] == 2 and d["n"] == 1
        assert "numerator" in d and "denominator" in d

    def test_eval_rejects_outside_points(self):
        pair = CoprimePair(2, 1)
        inside = interior_point(pair, 0.7, (0.0, 0.0))
        outside = (0.9 + 0j, 0.5 + 0j)  # |z1|^2 = 0.81 > 0.5 = |z2|^1
        with pytest.raises(OutsideDomain):
            eval_kernel(pair, outside, inside)
        with pytest.raises(OutsideDomain):
            eval_kernel(pair, inside, outside)

    def test_conjugate_symmetry(self):
        pair = CoprimePair(3, 2)
        z = interior_point(pair, 0.8, (0.3, -1.1))
        w = interior_point(pair, 0.6, (-0.8, 0.4))
        assert cmath.isclose(
            eval_kernel(pair, z, w),
            eval_kernel(pair, w, z).conjugate(),
            rel_tol=1e-12,
        )

    def test_diagonal_positive(self):
        for pair in PAIRS:
            z = interior_point(pair, 0.75, (0.9, 2.2))
            val = eval_kernel(pair, z, z)
            assert abs(val.imag) < 1e-12 * abs(val)
            assert val.real > 0


class TestSeriesAgreement:
    def test_frozen_regression_point(self):
        pair = CoprimePair(2, 1)
        z = w = (0.1 + 0j, 0.6 + 0j)
        closed = eval_kernel(pair, z, w)
        series = series_kernel(pair, z, w, cutoff=200)
        assert abs(closed - series) <= 1e-10 * abs(closed)
        assert closed.real == pytest.approx(0.4813869679004721, rel=1e-12)

    def test_agreement_across_pairs(self):
        for pair in PAIRS:
            z = interior_point(pair, 0.7, (0.5, -0.2))
            w = interior_point(pair, 0.65, (-0.4, 1.3))
            closed = eval_kernel(pair, z, w)
            series = series_kernel(pair, z, w, cutoff=300)
            assert abs(closed - series) <= 1e-9 * abs(closed)

    def test_tail_estimate_decreases(self):
        pair = CoprimePair(3, 2)
        z = interior_point(pair, 0.8, (0.0, 0.0))
        tails = [series_tail_estimate(pair, z, z, cutoff) for cutoff in (50, 100, 200)]
        assert tails[0] > tails[1] > tails[2] >= 0
        assert tails[2] < 1e-12


class TestMonomialNorms:
    def test_frozen_fractions(self):
        # pi^2 m / ((a+1)(m(b+1) + n(a+1))) with the pi^2 factor split off
        pair = CoprimePair(2, 1)
        assert monomial_norm_sq(pair, 0, 0) == Fraction(2, 3)
        assert monomial_norm_sq(pair, 1, 0) == Fraction(1, 4)
        pair53 = CoprimePair(5, 3)
        assert monomial_norm_sq(pair53, 2, -1) == Fraction(5, 27)

    def test_rejects_non_allowable(self):
        # m(b+1) + n(a+1) <= 0 means the monomial is not square-integrable
        with pytest.raises(ValidationError):
            monomial_norm_sq(CoprimePair(2, 1), 0, -2)
        with pytest.raises(ValidationError):
            monomial_norm_sq(CoprimePair(5, 3), 0, -2)

    @pytest.mark.parametrize(
        "pair,a,b",
        [
            (CoprimePair(2, 1), 0, 0),
            (CoprimePair(3, 2), 1, 0),
            (CoprimePair(5, 3), 2, -1),
        ],
    )
    def test_against_quadrature(self, pair, a, b):
        # integrate |z1|^{2a} |z2|^{2b} over the Hartogs domain in polar
        # coordinates: dV = (2 pi r1) (2 pi r2) dr1 dr2
        m, n = pair.m, pair.n
        value, err = dblquad(
            lambda r1, r2: 4 * math.pi**2 * r1 ** (2 * a + 1) * r2 ** (2 * b + 1),
            0.0,
            1.0,
            lambda r2: 0.0,
            lambda r2: r2 ** (n / m),
        )
        exact = float(monomial_norm_sq(pair, a, b)) * math.pi**2
        assert abs(value - exact) < 1e-6
        assert err < 1e-6


class TestSlices:
    def test_frozen_value(self):
        # gamma = 2 slice at t = 0.25 (z2 = w2 = 0.5 on the axis)
        assert restrict_s0(2, 0.25) == pytest.approx(0.45031637174372346, rel=1e-13)

    def test_matches_full_kernel_on_axis(self):
        pair = CoprimePair(2, 1)
        z = w = (0j, 0.5 + 0j)
        gamma = Fraction(pair.m, pair.n)
        t = (z[1] * w[1].conjugate()).real
        assert eval_kernel(pair, z, w).real == pytest.approx(
            restrict_s0(gamma, t).real, rel=1e-12
        )

    def test_zero_location(self):
        assert restrict_s0_zero(3) == Fraction(-1, 2)
        assert restrict_s0_zero(Fraction(5, 2)) == Fraction(-2, 3)
        assert restrict_s0_zero(2) is None
        assert restrict_s0_zero(Fraction(3, 2)) is None

    def test_zero_is_actually_a_zero(self):
        t0 = restrict_s0_zero(3)
        assert abs(restrict_s0(3, complex(t0))) < 1e-15

    def test_degenerate_input(self):
        with pytest.raises(DegenerateInput):
            restrict_s0(3, 0.0)
        with pytest.raises(DegenerateInput):
            restrict_s0(3, 1.0)

    def test_k1_kernel_positive_on_diagonal(self):
        z = (0.2 + 0j, 0.7 + 0j)
        val = k1_kernel(z, z)
        assert abs(val.imag) < 1e-15
        assert val.real > 0


class TestDomain:
    def test_membership(self):
        assert in_domain(2, (0.5, 0.6))
        assert not in_domain(2, (0.9, 0.5))
        assert not in_domain(2, (0.5, 1.0))
        assert in_domain(Fraction(5, 3), (0.5, 0.6)) == (0.5**5 < 0.6**3)

    def test_accepts_pair_and_tuple(self):
        z = (0.3 + 0.1j, 0.8j)
        assert in_domain(CoprimePair(3, 2), z) == in_domain((3, 2), z)
        assert in_domain(Fraction(3, 2), z) == in_domain((3, 2), z)

    def test_origin_axis(self):
        # z1 = 0 is inside whenever 0 < |z2| < 1
        assert in_domain(2, (0j, 0.5))
        assert not in_domain(2, (0j, 0.0))

    def test_interior_margin(self):
        assert interior_margin(2, (0.5, 0.6)) == pytest.approx(
            min(0.6 - 0.25, 1 - 0.6)
        )
        assert interior_margin(2, (0.9, 0.5)) < 0

    def test_margin_positive_iff_inside(self):
        pts = [(0.5, 0.6), (0.9, 0.5), (0.1, 0.99), (0.1, 1.01)]
        for pt in pts:
            z = (complex(pt[0]), complex(pt[1]))
            assert (interior_margin(2, z) > 0) == in_domain(2, z)


class TestVerifiedConstruction:
    def test_kernel_formula_verify_flag(self):
        for pair in PAIRS:
            f = kernel_formula(pair, verify=True)
            assert f.numerator == numerator_oracle(pair)

    def test_internal_mismatch_is_exported(self):
        assert issubclass(InternalMismatch, Exception)
