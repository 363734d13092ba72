import numpy as np
import pytest

from segrank import Format, Regime, SeededRng, Tensor3, sample_gaussian_tensor


def test_regime_is_a_partition():
    for m in range(2, 7):
        for n in range(m, 7):
            for ell in range(n, m * n + 4):
                fmt = Format(m, n, ell)
                boundary = (m - 1) * (n - 1) + 1
                expected = {
                    ell < boundary: Regime.SUB_BOUNDARY,
                    ell == boundary: Regime.BOUNDARY,
                    boundary < ell <= (m - 1) * n: Regime.MID,
                    (m - 1) * n < ell < m * n: Regime.TALL,
                    ell >= m * n: Regime.FULL,
                }
                assert fmt.regime == expected[True]


@pytest.mark.parametrize(
    "m,n,ell",
    [(2, 2, 2), (2, 3, 3), (3, 3, 5), (3, 4, 7), (3, 5, 9), (4, 4, 10)],
)
def test_known_boundary_formats(m, n, ell):
    assert Format(m, n, ell).regime == Regime.BOUNDARY


def test_mid_is_empty_for_m2():
    for n in range(2, 10):
        for ell in range(n, 2 * n + 2):
            assert Format(2, n, ell).regime != Regime.MID


@pytest.mark.parametrize("bad", [(1, 2, 3), (3, 2, 4), (2, 4, 3), (0, 0, 0)])
def test_invalid_shapes_rejected(bad):
    with pytest.raises(ValueError):
        Format(*bad)


def test_parse():
    assert Format.parse("3x3x5") == Format(3, 3, 5)
    assert Format.parse("2X4X7") == Format(2, 4, 7)
    with pytest.raises(ValueError):
        Format.parse("3x3")
    with pytest.raises(ValueError):
        Format.parse("axbxc")


def test_tensor_shape_contract():
    fmt = Format(3, 3, 5)
    tensor = sample_gaussian_tensor(fmt, SeededRng(0))
    assert tensor.entries.shape == (3, 3, 5)
    assert tensor.slices.shape == (5, 3, 3)
    assert tensor.entries.size == 45
    # frontal slices are exactly the layers of the entry array
    np.testing.assert_array_equal(tensor.slices[2], tensor.entries[:, :, 2])


def test_tensor_from_slices_roundtrip():
    slices = [np.eye(2), np.diag([1.0, 2.0])]
    tensor = Tensor3.from_slices(slices)
    assert tensor.format == Format(2, 2, 2)
    np.testing.assert_array_equal(tensor.slices[1], np.diag([1.0, 2.0]))


def test_tensor_entries_immutable():
    tensor = sample_gaussian_tensor(Format(2, 2, 2), SeededRng(1))
    with pytest.raises(ValueError):
        tensor.entries[0, 0, 0] = 99.0


def test_tensor_rejects_nonfinite():
    bad = np.full((2, 2, 2), np.nan)
    with pytest.raises(ValueError):
        Tensor3(Format(2, 2, 2), bad)


def test_sampling_deterministic():
    fmt = Format(3, 3, 5)
    a = sample_gaussian_tensor(fmt, SeededRng(42))
    b = sample_gaussian_tensor(fmt, SeededRng(42))
    np.testing.assert_array_equal(a.entries, b.entries)
    c = sample_gaussian_tensor(fmt, SeededRng(42, stream=1))
    assert not np.array_equal(a.entries, c.entries)


def test_sampling_law_of_large_numbers():
    # one million entries in a single draw
    tensor = sample_gaussian_tensor(Format(100, 100, 100), SeededRng(2))
    assert abs(float(tensor.entries.mean())) < 0.01
    assert abs(float(tensor.entries.std()) - 1.0) < 0.01


def test_rng_streams_are_independent_of_consumption():
    rng_a = SeededRng(7, stream=3)
    rng_a.normal(100)  # consume some draws
    first_after = rng_a.normal(5)
    rng_b = SeededRng(7, stream=3)
    rng_b.normal(100)
    np.testing.assert_array_equal(first_after, rng_b.normal(5))


def test_rng_rejects_negative_stream():
    with pytest.raises(ValueError):
        SeededRng(1, stream=-1)
