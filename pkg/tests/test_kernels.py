import numpy as np
import pytest

from segrank import _kernels
from segrank._kernels import _pykernels


def _battery(seed=0, count=400):
    rng = np.random.default_rng(seed)
    polys = []
    for _ in range(count):
        degree = int(rng.integers(1, 10))
        polys.append(rng.standard_normal(degree + 1))
    return polys


class TestSturm:
    @pytest.mark.parametrize(
        "coeffs,expected",
        [
            ([1.0, 0.0, 1.0], 0),  # t^2 + 1
            ([1.0, 0.0, -1.0], 2),  # t^2 - 1
            ([1.0, 0.0], 1),  # t
            ([1.0, -6.0, 11.0, -6.0], 3),  # (t-1)(t-2)(t-3)
            ([1.0, 0.0, 0.0], 1),  # t^2: one distinct root
            ([2.0], 0),  # constant
        ],
    )
    def test_known_counts(self, coeffs, expected):
        assert _pykernels.sturm_real_root_count(coeffs) == expected

    def test_distinct_linear_factor_products(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            roots = np.unique(rng.integers(-6, 7, size=5)).astype(float)
            coeffs = np.poly(roots)
            assert _pykernels.sturm_real_root_count(coeffs) == roots.size

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            _pykernels.sturm_real_root_count([0.0, 0.0])


class TestEvalAndPolish:
    def test_eval_matches_numpy(self):
        rng = np.random.default_rng(3)
        coeffs = rng.standard_normal(7)
        xs = rng.standard_normal(20)
        np.testing.assert_allclose(
            _pykernels.eval_poly(coeffs, xs), np.polyval(coeffs, xs), rtol=1e-12
        )

    def test_polish_reaches_machine_precision(self):
        coeffs = np.poly([1.0, 2.0, -3.0])
        rough = np.array([1.01, 1.97, -3.05], dtype=complex)
        polished = _pykernels.newton_polish(coeffs, rough, 10)
        np.testing.assert_allclose(
            np.sort(polished.real), [-3.0, 1.0, 2.0], atol=1e-12
        )


needs_compiled = pytest.mark.skipif(
    "c" not in _kernels.available_backends(),
    reason="compiled kernel extension not built",
)


@needs_compiled
class TestBackendAgreement:
    def test_sturm_counts_match(self):
        from segrank._kernels import _ckernels

        for coeffs in _battery(seed=5, count=800):
            assert _ckernels.sturm_real_root_count(
                coeffs
            ) == _pykernels.sturm_real_root_count(coeffs)

    def test_eval_matches(self):
        from segrank._kernels import _ckernels

        rng = np.random.default_rng(6)
        coeffs = rng.standard_normal(10)
        xs = rng.standard_normal(50)
        np.testing.assert_allclose(
            _ckernels.eval_poly(coeffs, xs),
            _pykernels.eval_poly(coeffs, xs),
            rtol=1e-13,
        )
        zs = xs + 1j * rng.standard_normal(50)
        np.testing.assert_allclose(
            _ckernels.eval_poly(coeffs, zs),
            _pykernels.eval_poly(coeffs, zs),
            rtol=1e-13,
        )

    def test_polish_matches(self):
        from segrank._kernels import _ckernels

        rng = np.random.default_rng(7)
        for _ in range(30):
            coeffs = rng.standard_normal(8)
            seeds = rng.standard_normal(7) + 1j * rng.standard_normal(7)
            np.testing.assert_allclose(
                _ckernels.newton_polish(coeffs, seeds, 8),
                _pykernels.newton_polish(coeffs, seeds, 8),
                rtol=1e-9,
                atol=1e-12,
            )


@needs_compiled
def test_backends_give_identical_monte_carlo_tallies():
    from segrank import Format, monte_carlo_rank

    original = _kernels.active_backend()
    try:
        _kernels.set_backend("c")
        compiled = monte_carlo_rank(Format(2, 2, 2), 400, seed=23)
        _kernels.set_backend("python")
        pure = monte_carlo_rank(Format(2, 2, 2), 400, seed=23)
    finally:
        _kernels.set_backend(original)
    assert compiled.rank_estimates == pure.rank_estimates
    assert compiled.counts == pure.counts
    assert compiled.rejected == pure.rejected


class TestBackendSwitch:
    def test_available_and_active(self):
        assert "python" in _kernels.available_backends()
        assert _kernels.active_backend() in _kernels.available_backends()

    def test_set_backend_roundtrip(self):
        original = _kernels.active_backend()
        try:
            _kernels.set_backend("python")
            assert _kernels.active_backend() == "python"
            assert _kernels.sturm_real_root_count([1.0, 0.0, -4.0]) == 2
        finally:
            _kernels.set_backend(original)

    def test_unknown_backend_rejected(self):
        with pytest.raises(ValueError):
            _kernels.set_backend("fortran")
