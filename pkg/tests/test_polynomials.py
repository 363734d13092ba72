import numpy as np
import pytest

from segrank import AmbiguousRoots, BinaryForm, real_roots_binary_form


def count_roots_on_grid(coeffs, grid_size=8192):
    """Sign-change oracle: evaluate the form on a half turn of the circle.

    Points (cos t, sin t), t in [0, pi), cover every real projective point
    exactly once; counting sign flips (with the antipodal wrap) counts real
    roots of odd local multiplicity.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    d = coeffs.size - 1
    theta = np.linspace(0.0, np.pi, grid_size, endpoint=False)
    x0, x1 = np.cos(theta), np.sin(theta)
    values = np.zeros_like(theta)
    for i, c in enumerate(coeffs):
        values += c * x0 ** (d - i) * x1**i
    signs = np.sign(values)
    wrapped = np.append(signs, signs[0] * (-1) ** d)
    flips = 0
    prev = 0.0
    for s in wrapped:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            flips += 1
        prev = s
    return flips


class TestWorkedForms:
    def test_sum_of_squares_has_no_real_roots(self):
        count, points = real_roots_binary_form(BinaryForm([1.0, 0.0, 1.0]))
        assert count == 0 and points == []

    def test_split_quadric(self):
        count, points = real_roots_binary_form(BinaryForm([0.0, -1.0, 0.0]))
        assert count == 2
        as_tuples = {tuple(np.round(p, 9)) for p in points}
        assert as_tuples == {(1.0, 0.0), (0.0, 1.0)}

    def test_pure_powers(self):
        count, points = real_roots_binary_form(BinaryForm([1.0, 0, 0, 0]))
        assert count == 1
        np.testing.assert_allclose(points[0], [0.0, 1.0])
        count, points = real_roots_binary_form(BinaryForm([0, 0, 0, 1.0]))
        assert count == 1
        np.testing.assert_allclose(points[0], [1.0, 0.0])

    def test_multiplicity_folds_to_distinct(self):
        # (x0 x1)^2: distinct projective roots [1:0] and [0:1]
        count, _ = real_roots_binary_form(BinaryForm([0.0, 0.0, 1.0, 0.0, 0.0]))
        assert count == 2

    def test_zero_form_rejected(self):
        with pytest.raises(ValueError):
            BinaryForm([0.0, 0.0, 0.0])


def test_points_are_canonical():
    rng = np.random.default_rng(1)
    for _ in range(50):
        form = BinaryForm(rng.standard_normal(7))
        _, points = real_roots_binary_form(form)
        for p in points:
            assert abs(np.linalg.norm(p) - 1.0) < 1e-12
            lead = p[np.argmax(np.abs(p) > 1e-12)]
            assert lead > 0
            # residual: the form vanishes at the root
            assert abs(form.evaluate(p[0], p[1])) < 1e-7


def test_parity_matches_degree():
    rng = np.random.default_rng(2)
    for _ in range(300):
        d = int(rng.integers(1, 9))
        form = BinaryForm(rng.standard_normal(d + 1))
        count, _ = real_roots_binary_form(form)
        assert (count - d) % 2 == 0


def test_mean_count_matches_grid_oracle():
    rng = np.random.default_rng(3)
    samples = 4000
    solver_counts = []
    oracle_counts = []
    disagreements = 0
    for _ in range(samples):
        coeffs = rng.standard_normal(7)
        count, _ = real_roots_binary_form(BinaryForm(coeffs))
        oracle = count_roots_on_grid(coeffs)
        solver_counts.append(count)
        oracle_counts.append(oracle)
        disagreements += count != oracle
    solver_mean = np.mean(solver_counts)
    oracle_mean = np.mean(oracle_counts)
    oracle_se = np.std(oracle_counts) / np.sqrt(samples)
    assert disagreements / samples < 0.01
    assert abs(solver_mean - oracle_mean) <= 3 * oracle_se + 0.02


def test_dead_zone_raises_ambiguous():
    # conjugate pair at distance ~1e-7 from the real axis: the imaginary
    # ratio lands inside (tau/10, 10*tau)
    eps = 1e-7
    near_real = np.array([1.0, -2.0, 1.0 + eps * eps])  # (t-1)^2 + eps^2
    coeffs_desc = np.polymul(near_real, [1.0, 0.0, 1.0])
    form = BinaryForm(coeffs_desc[::-1])
    with pytest.raises(AmbiguousRoots):
        real_roots_binary_form(form)


def test_evaluate_matches_monomial_sum():
    rng = np.random.default_rng(4)
    coeffs = rng.standard_normal(6)
    form = BinaryForm(coeffs)
    x0, x1 = 0.7, -1.3
    direct = sum(
        form.coeffs[i] * x0 ** (5 - i) * x1**i for i in range(6)
    )
    assert form.evaluate(x0, x1) == pytest.approx(direct)
