import logging

import numpy as np
import pytest

from fdregion import (BLUETOOTH_CLASSES, InfeasibleDesignError, InvalidParameterError, NoiseProfile, RadioImpairments,
                      RegimeKind, Scheme, analog_advantage_db, derive_noise_profile, design_constraint,
                      design_surface, max_tx_power_dbm, required_noise_db, required_suppression_db, solve_design)

DC = Scheme.DIGITAL_CANCELLATION
AC = Scheme.ANALOG_CANCELLATION

TARGET = -80.0


@pytest.mark.parametrize('scheme', [DC, AC])
def test_design_constraint_intermediate(chipset, scheme):
    profile = derive_noise_profile(chipset)
    solution = solve_design(profile, TARGET, scheme)
    assert solution.regime is RegimeKind.INTERMEDIATE
    assert solution.constraint_db.value == pytest.approx(-96.5, abs=0.5)
    assert design_constraint(profile, TARGET, scheme) == solution.constraint_db
    assert solution.rssi_a_dbm.value == pytest.approx(solution.constraint_db.value - solution.noise_db.value)


def test_bluetooth_suppression():
    profile = derive_noise_profile(RadioImpairments.from_total_phase_noise_db(-50.0))
    expected = {'class-1': 66.0, 'class-2': 50.0, 'class-3': 46.0}
    for name, tx_power in BLUETOOTH_CLASSES.items():
        suppression = required_suppression_db(profile, TARGET, tx_power, AC)
        assert suppression.value == pytest.approx(expected[name], abs=1.0)


def test_analog_advantage_at_low_phase_noise():
    imp = RadioImpairments.from_total_phase_noise_db(-85.0)
    advantage = analog_advantage_db(imp, TARGET, 10.0)
    assert advantage.value == pytest.approx(8.6, abs=0.5)
    # Same answer from the derived profile
    assert analog_advantage_db(derive_noise_profile(imp), TARGET, 10.0).value == pytest.approx(advantage.value)


def test_suppression_tracks_phase_noise(chipset):
    # One extra dB of phase noise costs one dB of suppression inside the Intermediate regime
    quiet = derive_noise_profile(chipset.with_total_phase_noise_db(-60.0))
    noisy = derive_noise_profile(chipset.with_total_phase_noise_db(-59.0))
    s_quiet = required_suppression_db(quiet, TARGET, 0.0, AC).value
    s_noisy = required_suppression_db(noisy, TARGET, 0.0, AC).value
    assert s_noisy - s_quiet == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize('scheme', [DC, AC])
@pytest.mark.parametrize('tx_power', [0.0, 4.0, 20.0])
def test_max_tx_power_inverts_suppression(chipset, scheme, tx_power):
    profile = derive_noise_profile(chipset)
    suppression = required_suppression_db(profile, TARGET, tx_power, scheme)
    assert max_tx_power_dbm(profile, TARGET, suppression, scheme).value == pytest.approx(tx_power)


def test_required_noise_inverts_suppression(chipset):
    quieter = derive_noise_profile(RadioImpairments.from_total_phase_noise_db(-50.0))
    suppression = required_suppression_db(quieter, TARGET, 4.0, AC)

    noise = required_noise_db(derive_noise_profile(chipset), TARGET, 4.0, suppression, AC)
    assert noise.value == pytest.approx(-50.0, abs=1e-6)


def test_required_noise_infeasible(chipset):
    # The budget asks for less noise than quantization alone produces
    with pytest.raises(InfeasibleDesignError):
        required_noise_db(derive_noise_profile(chipset), -100.0, 30.0, 0.0, DC)


def test_design_gap_is_infeasible():
    # Intermediate lands above the Strong threshold, Strong below it
    profile = NoiseProfile.from_values(eta=10.0 ** -3.8, zeta=1e-11)
    with pytest.raises(InfeasibleDesignError):
        solve_design(profile, TARGET, DC)


def test_design_needs_nonzero_noise():
    profile = NoiseProfile.from_values(eta=1e-4, zeta=1e-11, mu=0.0)
    with pytest.raises(InvalidParameterError):
        solve_design(profile, TARGET, AC)


def test_design_surface(chipset, caplog):
    with caplog.at_level(logging.WARNING):
        surface = design_surface(chipset, TARGET, [-60.0, -38.0], [0.0, 20.0])

    assert list(surface.columns) == ['phase_noise_db', 'tx_power_dbm', 'scheme', 'eta_db', 'regime', 'constraint_db',
                                     'required_suppression_db']
    assert len(surface) == 8

    feasible = surface[surface.phase_noise_db == -60.0]
    assert set(feasible.regime) == {'intermediate'}
    for scheme, rows in feasible.groupby('scheme'):
        by_power = rows.set_index('tx_power_dbm').required_suppression_db
        assert by_power[20.0] - by_power[0.0] == pytest.approx(20.0)

    gap = surface[surface.phase_noise_db == -38.0]
    assert set(gap.regime) == {'infeasible'}
    assert np.isnan(gap.required_suppression_db).all()
    assert 'Phase noise -38.0 dB' in caplog.text
