import logging

import numpy as np
import pytest

from fdregion import (InvalidParameterError, LinkState, NoiseProfile, RadioImpairments, derive_noise_profile,
                      is_phase_noise_dominated, linear_to_db, lna_gain_ac, lna_gain_dc, mw_to_dbm,
                      quantization_noise_variance, rate_fd, rate_hd, set_temperature, sinr_fd_ac, sinr_fd_dc, snr_hd,
                      thermal_noise_power)


def test_thermal_noise_power():
    p_th = thermal_noise_power(1e6)
    assert p_th.value == pytest.approx(4.00388e-12, rel=1e-5)
    assert mw_to_dbm(p_th).value == pytest.approx(-113.975, abs=1e-3)


def test_thermal_noise_uses_configured_temperature():
    set_temperature(580.0)
    assert thermal_noise_power(1e6).value == pytest.approx(2 * 4.00388e-12, rel=1e-5)


def test_thermal_noise_rejects_zero_bandwidth():
    with pytest.raises(InvalidParameterError):
        thermal_noise_power(0.0)


def test_quantization_noise_variance():
    assert quantization_noise_variance(1).value == pytest.approx(1 / 12)
    assert quantization_noise_variance(12).value == pytest.approx(1.98682e-8, rel=1e-5)
    for bad in (0, True, 2.5):
        with pytest.raises(InvalidParameterError):
            quantization_noise_variance(bad)


def test_eta_of_reference_chipset(chipset):
    profile = derive_noise_profile(chipset)
    eta_db = linear_to_db(profile.eta).value
    assert -40.2 <= eta_db <= -39.7
    assert mw_to_dbm(profile.zeta).value == pytest.approx(-109.975, abs=1e-3)
    assert profile.mu.value == pytest.approx(1e-4)
    assert profile.mu_tx.value == pytest.approx(5e-5)
    assert profile.mixer_excess.value == pytest.approx(9 * 4.00388e-12, rel=1e-4)


def test_impairment_constructors(chipset):
    assert chipset.mu_tx.value == pytest.approx(chipset.mu_rx.value)
    assert chipset.adc_bits == 12
    assert chipset.temperature_k == 290.0

    skewed = RadioImpairments.from_db(-43.0, -46.0)
    share = skewed.mu_tx.value / skewed.mu_total.value
    moved = skewed.with_total_phase_noise_db(-50.0)
    assert moved.mu_total.value == pytest.approx(1e-5)
    assert moved.mu_tx.value / moved.mu_total.value == pytest.approx(share)
    assert moved.lna_nf == skewed.lna_nf


@pytest.mark.parametrize('kwargs', [
    {'adc_bits': 0},
    {'adc_bits': 25},
    {'adc_bits': 12.5},
    {'lna_nf_db': -1.0},
    {'mixer_nf_db': -0.5},
    {'bandwidth_hz': 0.0},
    {'temperature_k': -1.0},
])
def test_impairment_validation(kwargs):
    with pytest.raises(InvalidParameterError):
        RadioImpairments.from_total_phase_noise_db(-40.0, **kwargs)


def test_phase_noise_must_be_below_one():
    with pytest.raises(InvalidParameterError):
        RadioImpairments.from_db(0.0, -40.0)


def test_small_angle_warning(caplog):
    with caplog.at_level(logging.WARNING, logger='fdregion.model.model'):
        RadioImpairments.from_total_phase_noise_db(-40.0)
        assert not caplog.records
        RadioImpairments.from_total_phase_noise_db(-15.0)
    assert any('small-angle' in record.getMessage() for record in caplog.records)


def test_noise_profile_validation():
    with pytest.raises(InvalidParameterError):
        NoiseProfile.from_values(eta=1e-6, zeta=1e-11, mu=1e-4)
    with pytest.raises(InvalidParameterError):
        NoiseProfile.from_values(eta=1e-4, zeta=0.0)


def test_noise_profile_from_values(analog_profile):
    assert analog_profile.mu.value == 1e-6
    assert analog_profile.mu_tx.value == pytest.approx(5e-7)
    assert analog_profile.mu_rx.value == pytest.approx(5e-7)
    assert analog_profile.sigma_q2.value == pytest.approx(1e-4 - 1e-6)
    assert analog_profile.mixer_excess.value == 0.0


def test_lna_gains():
    link = LinkState.from_dbm(-40.0, -60.0)
    assert lna_gain_dc(link).value == pytest.approx(1 / 1.01e-4)
    assert lna_gain_ac(link).value == pytest.approx(1e6)
    with pytest.raises(InvalidParameterError):
        lna_gain_dc(LinkState(0.0, 0.0))
    with pytest.raises(InvalidParameterError):
        lna_gain_ac(LinkState(1e-4, 0.0))


def test_sinr_and_snr_closed_forms(profile_40):
    link = LinkState.from_dbm(-40.0, -60.0)
    assert sinr_fd_dc(profile_40, link).value == pytest.approx(98.91, rel=1e-3)
    assert snr_hd(profile_40, link.rssi_b).value == pytest.approx(9523.8, rel=1e-4)


def test_analog_equals_digital_when_mu_equals_eta(profile_40):
    link = LinkState.from_dbm(-50.0, -70.0)
    assert sinr_fd_ac(profile_40, link).value == pytest.approx(sinr_fd_dc(profile_40, link).value)


def test_analog_sinr_not_below_digital(analog_profile):
    link = LinkState(rssi_a=np.logspace(-12, 0, 25), rssi_b=1e-7)
    assert np.all(sinr_fd_ac(analog_profile, link).value >= sinr_fd_dc(analog_profile, link).value)


def test_half_duplex_snr_beats_full_duplex_sinr(profile_40):
    rssi_a = np.logspace(-12, -2, 11)
    link = LinkState(rssi_a=rssi_a, rssi_b=np.full_like(rssi_a, 1e-7))
    assert np.all(snr_hd(profile_40, link.rssi_b).value > sinr_fd_dc(profile_40, link).value)


def test_rates():
    assert rate_fd(3.0) == pytest.approx(2.0)
    assert rate_hd(3.0) == pytest.approx(1.0)
    np.testing.assert_allclose(rate_fd(np.array([0.0, 1.0])), [0.0, 1.0])


def test_vectorized_link_state(profile_40):
    link = LinkState(rssi_a=np.array([1e-4, 1e-8]), rssi_b=1e-6)
    sinr = sinr_fd_dc(profile_40, link).value
    assert sinr.shape == (2,)
    assert sinr[1] > sinr[0]


def test_phase_noise_dominance(profile_40):
    assert is_phase_noise_dominated(profile_40)
    assert is_phase_noise_dominated(derive_noise_profile(RadioImpairments.from_total_phase_noise_db(-40.0)))
    assert not is_phase_noise_dominated(derive_noise_profile(RadioImpairments.from_total_phase_noise_db(-85.0)))


def test_sinr_saturates_under_common_gain(profile_40):
    link = LinkState.from_dbm(-40.0, -60.0)
    sinr = [float(sinr_fd_dc(profile_40, link.scaled(gain)).value) for gain in (1.0, 10.0, 1e3, 1e12)]
    assert all(later > earlier for earlier, later in zip(sinr, sinr[1:]))

    a, b = link.rssi_a.value, link.rssi_b.value
    assert sinr[-1] == pytest.approx(b / (profile_40.eta.value * (a + b)), rel=1e-9)


def test_scaled_link_state():
    link = LinkState.from_dbm(-40.0, -60.0).scaled(100.0)
    assert link.rssi_a.value == pytest.approx(1e-2)
    assert link.rssi_b.value == pytest.approx(1e-4)


def test_sinr_and_snr_increase_with_signal(profile_40):
    rssi_b = np.logspace(-12, -2, 21)
    link = LinkState(rssi_a=1e-4, rssi_b=rssi_b)
    assert np.all(np.diff(sinr_fd_dc(profile_40, link).value) > 0)
    assert np.all(np.diff(snr_hd(profile_40, rssi_b).value) > 0)
