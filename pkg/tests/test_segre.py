import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from segrank import (
    OutOfRange,
    SegreInvariants,
    asymptotic_coefficient,
    conjugate_real_count,
    expected_intersections,
    expected_intersections_odd_product,
    segre_codim,
    segre_degree,
    segre_degree_is_odd,
    segre_dim,
)


def pascal_triangle(rows):
    """Independent binomial oracle built purely by addition."""
    triangle = [[1]]
    for _ in range(rows):
        prev = triangle[-1]
        triangle.append(
            [1] + [prev[i] + prev[i + 1] for i in range(len(prev) - 1)] + [1]
        )
    return triangle


PASCAL = pascal_triangle(30)


class TestDegree:
    def test_known_values(self):
        assert segre_degree(3, 3) == 6
        assert segre_degree(4, 4) == 20
        for n in range(2, 13):
            assert segre_degree(2, n) == n

    def test_against_pascal_oracle(self):
        for m in range(2, 13):
            for n in range(m, 13):
                assert segre_degree(m, n) == PASCAL[m + n - 2][m - 1]

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            segre_degree(30, 40)

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            segre_degree(1, 5)


class TestParity:
    def test_examples(self):
        assert segre_degree_is_odd(2, 3)  # degree 3
        assert not segre_degree_is_odd(3, 3)  # degree 6
        assert not segre_degree_is_odd(2, 2)  # degree 2

    def test_matches_exact_binomial(self):
        for m in range(2, 13):
            for n in range(m, 13):
                assert segre_degree_is_odd(m, n) == (segre_degree(m, n) % 2 == 1)

    @given(st.integers(2, 30), st.integers(2, 30))
    def test_digit_criterion_equals_comb_parity(self, m, n):
        want = math.comb(m + n - 2, m - 1) % 2 == 1
        assert segre_degree_is_odd(m, n) == want


class TestConjugateRealCount:
    @pytest.mark.parametrize(
        "m,n,expected",
        [(3, 3, 2), (2, 2, 0), (3, 4, 2), (2, 3, 1), (4, 4, 0), (5, 5, 6), (4, 5, 3)],
    )
    def test_values(self, m, n, expected):
        assert conjugate_real_count(m, n) == expected

    def test_vanishes_iff_both_even(self):
        for m in range(2, 11):
            for n in range(m, 11):
                zero = conjugate_real_count(m, n) == 0
                assert zero == (m % 2 == 0 and n % 2 == 0)

    def test_bounded_by_degree(self):
        for m in range(2, 13):
            for n in range(m, 13):
                assert conjugate_real_count(m, n) <= segre_degree(m, n)


class TestDimensions:
    def test_dim_plus_codim(self):
        for m in range(2, 10):
            for n in range(m, 10):
                assert segre_dim(m, n) + segre_codim(m, n) == m * n - 1

    def test_invariant_bundle(self):
        info = SegreInvariants.compute(3, 3)
        assert (info.dim, info.codim, info.degree) == (4, 4, 6)
        assert not info.degree_odd
        assert info.conjugate_real == 2


class TestExpectedIntersections:
    def test_three_by_n_is_n(self):
        for n in range(2, 51):
            value = expected_intersections(3, n)
            assert abs(value - n) <= 1e-12 * n

    def test_two_by_two_is_half_pi(self):
        assert abs(expected_intersections(2, 2) - math.pi / 2) < 1e-14

    def test_five_by_n_closed_form(self):
        for n in (2, 4, 10, 37, 100):
            want = n * (n + 2) / 3.0
            assert abs(expected_intersections(5, n) - want) <= 1e-12 * want

    def test_symmetry(self):
        for m, n in [(2, 9), (3, 14), (4, 4), (5, 30), (6, 7)]:
            a = expected_intersections(m, n)
            b = expected_intersections(n, m)
            assert abs(a - b) <= 1e-12 * a

    def test_markov_bound(self):
        # the expectation never reaches the boundary slice dimension 2n-1
        for n in range(2, 1001):
            assert expected_intersections(3, n) / (2 * n - 1) < 1.0


class TestOddProduct:
    def test_half_m_one_is_n(self):
        for n in range(2, 20):
            assert expected_intersections_odd_product(1, n) == pytest.approx(n)

    def test_known_value(self):
        assert expected_intersections_odd_product(2, 4) == pytest.approx(8.0)

    def test_agrees_with_gamma_form(self):
        for half_m in (1, 2, 3, 4):
            for n in (2, 3, 10, 51):
                product = expected_intersections_odd_product(half_m, n)
                gamma = expected_intersections(2 * half_m + 1, n)
                assert abs(product - gamma) <= 1e-10 * product

    def test_symmetric_cross_check(self):
        product = expected_intersections_odd_product(3, 2)
        assert product == pytest.approx(expected_intersections(7, 2))
        assert product == pytest.approx(expected_intersections(2, 7))


class TestAsymptotics:
    def test_coefficients(self):
        assert asymptotic_coefficient(3) == 1.0
        assert asymptotic_coefficient(5) == pytest.approx(1.0 / 3.0)
        assert asymptotic_coefficient(4) == pytest.approx(math.sqrt(math.pi / 2) / 2)
        assert asymptotic_coefficient(2) == pytest.approx(math.sqrt(math.pi / 2))

    @pytest.mark.parametrize("m", [4, 5])
    def test_ratio_convergence(self, m):
        coeff = asymptotic_coefficient(m)

        def ratio(n):
            return expected_intersections(m, n) / (coeff * n ** ((m - 1) / 2))

        assert abs(ratio(100) - 1.0) <= 0.05
        assert abs(ratio(500) - 1.0) <= 0.01

    @pytest.mark.parametrize("m", [4, 5])
    def test_deviation_decays_like_one_over_n(self, m):
        coeff = asymptotic_coefficient(m)
        grid = np.array([50, 100, 200, 500, 1000, 2000, 5000])
        deviations = np.array(
            [
                abs(
                    expected_intersections(m, n) / (coeff * n ** ((m - 1) / 2))
                    - 1.0
                )
                for n in grid
            ]
        )
        slope = np.polyfit(np.log(grid), np.log(deviations), 1)[0]
        assert abs(slope - (-1.0)) <= 0.2
