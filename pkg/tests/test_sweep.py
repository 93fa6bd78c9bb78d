import numpy as np
import pandas as pd
import pytest

from fdregion import (InvalidParameterError, LinkState, Scenario, Scheme, SimConfig, dbm_to_mw, ergodic_rate_sweep,
                      power_sweep, rate_fd, rate_hd, sinr_fd, snr_hd)

AC = Scheme.ANALOG_CANCELLATION

COLUMNS = ['distance_m', 'tx_power_dbm', 'rssi_a_dbm', 'mean_rssi_b_dbm', 'rate_fd_bps_hz', 'rate_hd_bps_hz',
           'gain_ratio']


def test_deterministic_sweep_is_closed_form():
    s = Scenario()
    cfg = SimConfig(scheme=AC, fading_enabled=False)
    table = ergodic_rate_sweep(s, [-80.0, -70.0], cfg)

    assert list(table.columns) == ['rssi_b_dbm'] + COLUMNS
    np.testing.assert_allclose(table.mean_rssi_b_dbm, table.rssi_b_dbm)

    profile = s.noise_profile
    for row in table.itertuples():
        link = LinkState(rssi_a=dbm_to_mw(-40.0), rssi_b=dbm_to_mw(row.rssi_b_dbm))
        assert row.rate_fd_bps_hz == pytest.approx(float(rate_fd(sinr_fd(profile, link, AC))))
        assert row.rate_hd_bps_hz == pytest.approx(float(rate_hd(snr_hd(profile, link.rssi_b))))
        assert row.gain_ratio == pytest.approx(row.rate_fd_bps_hz / row.rate_hd_bps_hz)


def test_ergodic_gain_ratio_band():
    # Rayleigh signal of interest, 0 dBm transmit power, 40 dB passive suppression, -60 dB phase noise
    table = ergodic_rate_sweep(Scenario(), [-80.0, -70.0], SimConfig(n_samples=100_000, seed=1, scheme=AC))
    ratios = table.gain_ratio.to_numpy()
    assert np.all((ratios >= 1.1) & (ratios <= 1.5))
    assert ratios[1] > ratios[0]


def test_fading_lowers_rates():
    s = Scenario()
    faded = ergodic_rate_sweep(s, [-75.0], SimConfig(n_samples=100_000, seed=2, scheme=AC))
    fixed = ergodic_rate_sweep(s, [-75.0], SimConfig(scheme=AC, fading_enabled=False))
    # Jensen: the ergodic rate of a concave rate function sits below the rate at the mean
    assert faded.rate_fd_bps_hz[0] < fixed.rate_fd_bps_hz[0]
    assert faded.rate_hd_bps_hz[0] < fixed.rate_hd_bps_hz[0]


def test_sweep_is_reproducible():
    cfg = SimConfig(n_samples=20_000, seed=3)
    first = ergodic_rate_sweep(Scenario(), [20.0, 50.0], cfg, mode='distance')
    second = ergodic_rate_sweep(Scenario(), [20.0, 50.0], cfg, mode='distance')
    pd.testing.assert_frame_equal(first, second)
    assert list(first.columns) == ['distance_m'] + COLUMNS[1:]


def test_power_sweep_saturates():
    table = power_sweep(Scenario(distance_m=50.0), np.arange(0.0, 31.0, 1.0), SimConfig(fading_enabled=False))

    assert list(table.columns) == ['tx_power_dbm', 'distance_m'] + COLUMNS[2:]
    assert (table.distance_m == 50.0).all()
    assert table.mean_rssi_b_dbm[0] == pytest.approx(-82.52, abs=0.01)

    fd = table.rate_fd_bps_hz.to_numpy()
    hd = table.rate_hd_bps_hz.to_numpy()
    assert np.all(np.diff(fd) >= 0)
    assert fd[-1] - fd[-2] < 0.01
    assert np.all(np.diff(hd) > 0)
    assert np.all(np.diff(table.gain_ratio) <= 1e-12)


def test_sweep_validation():
    with pytest.raises(InvalidParameterError):
        ergodic_rate_sweep(Scenario(), [-80.0], SimConfig(), mode='angle')
    with pytest.raises(InvalidParameterError):
        ergodic_rate_sweep(Scenario(), [], SimConfig())
