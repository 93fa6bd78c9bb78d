import numpy as np
import pytest

from fdregion import (FadingParams, InvalidParameterError, PathLossParams, Scenario, mw_to_dbm, path_loss_db,
                      rssi_pair, sample_rician)


def _dbm(power) -> float:
    return float(mw_to_dbm(power).value)


def test_free_space_constant():
    p = PathLossParams()
    assert p.wavelength_m == pytest.approx(0.1249, abs=1e-4)
    assert path_loss_db(p, 1.0).value == pytest.approx(40.05, abs=0.01)
    # Exponent 2.5 adds 25 dB per decade
    assert path_loss_db(p, 10.0).value - path_loss_db(p, 1.0).value == pytest.approx(25.0)
    assert path_loss_db(p, 50.0).value == pytest.approx(82.52, abs=0.01)


def test_path_loss_is_vectorized():
    loss = path_loss_db(PathLossParams(), np.array([1.0, 10.0, 100.0])).value
    np.testing.assert_allclose(np.diff(loss), [25.0, 25.0])


@pytest.mark.parametrize('d', [0.0, -3.0])
def test_path_loss_rejects_nonpositive_distance(d):
    with pytest.raises(InvalidParameterError):
        path_loss_db(PathLossParams(), d)
    with pytest.raises(InvalidParameterError):
        Scenario(distance_m=d)


def test_shadowing_moments():
    p = PathLossParams(shadow_sigma_db=3.5)
    loss = path_loss_db(p, 1.0, np.random.default_rng(7), size=200_000).value
    assert np.mean(loss) == pytest.approx(40.05, abs=0.05)
    assert np.std(loss) == pytest.approx(3.5, abs=0.05)


def test_no_shadowing_without_sigma():
    p = PathLossParams(shadow_sigma_db=0.0)
    loss = path_loss_db(p, 1.0, np.random.default_rng(7), size=10)
    assert np.all(loss.value == path_loss_db(p, 1.0).value)


def test_rician_line_of_sight_limit():
    h = sample_rician(FadingParams(200.0), np.random.default_rng(1), size=1000)
    np.testing.assert_allclose(np.abs(h), 1.0, atol=1e-9)


def test_rayleigh_unit_power():
    h = sample_rician(FadingParams(0.0), np.random.default_rng(2), size=200_000)
    assert np.mean(np.abs(h) ** 2) == pytest.approx(1.0, abs=0.02)


def test_strong_line_of_sight_concentrates():
    gain = np.abs(sample_rician(FadingParams(35.0), np.random.default_rng(3), size=100_000)) ** 2
    assert np.mean(gain) == pytest.approx(1.0, abs=0.01)
    assert np.std(gain) < 0.05


def test_sample_rician_scalar_and_source():
    assert isinstance(sample_rician(FadingParams(), np.random.default_rng(4)), complex)
    with pytest.raises(InvalidParameterError):
        sample_rician(FadingParams(), None)


def test_deterministic_rssi_pair():
    s = Scenario(tx_power_dbm=0.0, passive_suppression_db=40.0, distance_m=10.0)
    link = rssi_pair(s)
    assert _dbm(link.rssi_a) == pytest.approx(-40.0)
    assert _dbm(link.rssi_b) == pytest.approx(-65.05, abs=0.01)
    assert s.rssi_a_dbm.value == pytest.approx(-40.0)
    assert s.mean_rssi_b_dbm.value == pytest.approx(_dbm(link.rssi_b))

    # A random source with fading and shadowing off gives the same pair
    quiet = rssi_pair(s, np.random.default_rng(0), fading=False, shadowing=False)
    assert quiet.rssi_a.value == pytest.approx(link.rssi_a.value)
    assert quiet.rssi_b.value == pytest.approx(link.rssi_b.value)


@pytest.mark.parametrize('target', [-90.0, -65.05, -40.0])
def test_distance_for_rssi_b(target):
    s = Scenario()
    d = s.distance_for_rssi_b(target)
    assert s.replace(distance_m=d).mean_rssi_b_dbm.value == pytest.approx(target)
    assert Scenario(distance_m=10.0).distance_for_rssi_b(-65.05) == pytest.approx(10.0, rel=1e-3)


def test_random_rssi_pair_is_reproducible():
    s = Scenario()
    first = rssi_pair(s, np.random.default_rng(11), size=1000)
    second = rssi_pair(s, np.random.default_rng(11), size=1000)
    np.testing.assert_array_equal(first.rssi_a.value, second.rssi_a.value)
    np.testing.assert_array_equal(first.rssi_b.value, second.rssi_b.value)
    assert first.rssi_a.value.shape == first.rssi_b.value.shape == (1000,)


def test_fading_means():
    s = Scenario(distance_m=10.0)
    link = rssi_pair(s, np.random.default_rng(5), shadowing=False, size=200_000)
    mean = rssi_pair(s)
    assert np.mean(link.rssi_a.value) == pytest.approx(mean.rssi_a.value, rel=0.01)
    assert np.mean(link.rssi_b.value) == pytest.approx(mean.rssi_b.value, rel=0.02)
