import pytest

from fdregion import NoiseProfile, RadioImpairments, reset_config


@pytest.fixture(autouse=True)
def restore_config():
    yield
    reset_config()


@pytest.fixture
def profile_40():
    # eta = -40 dB, zeta = -110 dBm, phase-noise dominated
    return NoiseProfile.from_values(eta=1e-4, zeta=1e-11)


@pytest.fixture
def analog_profile():
    # eta = -40 dB, mu = -60 dB, zeta = -110 dBm
    return NoiseProfile.from_values(eta=1e-4, zeta=1e-11, mu=1e-6)


@pytest.fixture
def chipset():
    # 2.4 GHz chipset defaults with -40 dB total phase noise
    return RadioImpairments.from_total_phase_noise_db(-40.0)
