"""
Transceiver impairments, derived noise quantities and the SINR/SNR/rate closed forms.

Unit convention: every absolute power is a milliwatt value, and the thermal noise
power enters the signal-dependent noise coefficient eta as its milliwatt number.
With this convention a -40 dB phase noise, 12-bit ADC and 10 dB mixer in 1 MHz give
eta ~ 1e-4, and the -80 dBm design target gives the -96.5 dB design constant.
"""
import logging
from dataclasses import dataclass

import numpy as np

from .._utils._checks import check_positive, check_range, require_positive
from .._utils._errors import InvalidParameterError
from .._utils._units import Decibel, LinearRatio, PowerDbm, PowerMw, as_quantity, db_to_linear, dbm_to_mw
from ..config import get_small_angle_limit, get_temperature

__all__ = [
    'BOLTZMANN_J_PER_K', 'MAX_ADC_BITS',
    'RadioImpairments', 'NoiseProfile', 'LinkState',
    'thermal_noise_power', 'quantization_noise_variance', 'derive_noise_profile',
    'lna_gain_dc', 'lna_gain_ac', 'sinr_fd_dc', 'sinr_fd_ac', 'snr_hd', 'rate_fd', 'rate_hd',
    'is_phase_noise_dominated',
]

logger = logging.getLogger(__name__)

BOLTZMANN_J_PER_K = 1.380649e-23
MAX_ADC_BITS = 24


@dataclass(frozen=True)
class RadioImpairments:
    """
    Hardware noise description of one node. Nodes are hardware symmetrical, so a single
    instance describes both ends of the link.

    :param mu_tx: LinearRatio: Total in-band transmitter phase noise power
    :param mu_rx: LinearRatio: Total in-band receiver phase noise power
    :param lna_nf: LinearRatio: LNA noise figure N_l (>= 1)
    :param mixer_nf: LinearRatio: Mixer noise figure N_m (>= 1)
    :param adc_bits: int: ADC resolution m in [1, 24]
    :param bandwidth_hz: float: Signal bandwidth
    :param temperature_k: float: Noise temperature. Defaults to the library temperature (290 K)
    """
    mu_tx: LinearRatio
    mu_rx: LinearRatio
    lna_nf: LinearRatio
    mixer_nf: LinearRatio
    adc_bits: int
    bandwidth_hz: float
    temperature_k: float = None

    def __post_init__(self):
        for name in ('mu_tx', 'mu_rx', 'lna_nf', 'mixer_nf'):
            object.__setattr__(self, name, as_quantity(LinearRatio, getattr(self, name)))
        if self.temperature_k is None:
            object.__setattr__(self, 'temperature_k', get_temperature())

        check_range('mu_tx', self.mu_tx.value, 0.0, 1.0, high_inclusive=False)
        check_range('mu_rx', self.mu_rx.value, 0.0, 1.0, high_inclusive=False)
        if self.lna_nf.value < 1.0:
            raise InvalidParameterError(self.lna_nf, 'LNA noise figure must be >= 1 (0 dB)')
        if self.mixer_nf.value < 1.0:
            raise InvalidParameterError(self.mixer_nf, 'Mixer noise figure must be >= 1 (0 dB)')
        if isinstance(self.adc_bits, bool) or int(self.adc_bits) != self.adc_bits:
            raise InvalidParameterError(self.adc_bits, 'ADC bits must be an integer')
        object.__setattr__(self, 'adc_bits', int(self.adc_bits))
        check_range('adc_bits', self.adc_bits, 1, MAX_ADC_BITS)
        check_positive('bandwidth_hz', self.bandwidth_hz)
        check_positive('temperature_k', self.temperature_k)

        total = self.mu_tx.value + self.mu_rx.value
        if total >= get_small_angle_limit():
            logger.warning(f'Total phase noise power {total:.3g} exceeds the small-angle limit '
                           f'{get_small_angle_limit():.3g}; the 1 + i*phi model loses accuracy')

    @property
    def mu_total(self) -> LinearRatio:
        return self.mu_tx + self.mu_rx

    @classmethod
    def from_db(cls, mu_tx_db: float, mu_rx_db: float, lna_nf_db: float = 4.0, mixer_nf_db: float = 10.0,
                adc_bits: int = 12, bandwidth_hz: float = 1e6, temperature_k: float = None) -> 'RadioImpairments':
        """
        Build impairments from dB values. Defaults are those of a 2.4 GHz ISM-band chipset.

        :param mu_tx_db: float: Transmitter phase noise power in dB
        :param mu_rx_db: float: Receiver phase noise power in dB
        :param lna_nf_db: float: LNA noise figure in dB
        :param mixer_nf_db: float: Mixer noise figure in dB
        :param adc_bits: int: ADC resolution
        :param bandwidth_hz: float: Bandwidth
        :param temperature_k: float: Noise temperature
        :return: RadioImpairments
        """
        return cls(mu_tx=db_to_linear(mu_tx_db), mu_rx=db_to_linear(mu_rx_db),
                   lna_nf=db_to_linear(lna_nf_db), mixer_nf=db_to_linear(mixer_nf_db),
                   adc_bits=adc_bits, bandwidth_hz=bandwidth_hz, temperature_k=temperature_k)

    @classmethod
    def from_total_phase_noise_db(cls, mu_total_db: float, lna_nf_db: float = 4.0, mixer_nf_db: float = 10.0,
                                  adc_bits: int = 12, bandwidth_hz: float = 1e6,
                                  temperature_k: float = None) -> 'RadioImpairments':
        """
        Build impairments from the total phase noise power, split equally between transmitter and receiver.

        :param mu_total_db: float: Total phase noise power mu = mu_tx + mu_rx in dB
        :return: RadioImpairments
        """
        half = as_quantity(Decibel, mu_total_db).to_linear().value / 2.0
        return cls(mu_tx=half, mu_rx=half, lna_nf=db_to_linear(lna_nf_db), mixer_nf=db_to_linear(mixer_nf_db),
                   adc_bits=adc_bits, bandwidth_hz=bandwidth_hz, temperature_k=temperature_k)

    def with_total_phase_noise_db(self, mu_total_db: float) -> 'RadioImpairments':
        """
        Return a copy with a new total phase noise power, keeping the transmitter/receiver split.

        :param mu_total_db: float: New total phase noise power in dB
        :return: RadioImpairments
        """
        total = self.mu_total.value
        share = self.mu_tx.value / total if total > 0 else 0.5
        mu_total = as_quantity(Decibel, mu_total_db).to_linear().value
        return RadioImpairments(mu_tx=share * mu_total, mu_rx=(1.0 - share) * mu_total, lna_nf=self.lna_nf,
                                mixer_nf=self.mixer_nf, adc_bits=self.adc_bits, bandwidth_hz=self.bandwidth_hz,
                                temperature_k=self.temperature_k)


@dataclass(frozen=True)
class NoiseProfile:
    """
    Derived noise scalars that parameterize every closed form.

    :param mu: LinearRatio: Total phase noise power mu = mu_tx + mu_rx
    :param sigma_q2: LinearRatio: ADC quantization noise variance
    :param p_th: PowerMw: Thermal noise power over the bandwidth
    :param eta: LinearRatio: Signal-power dependent noise coefficient
    :param zeta: PowerMw: System noise floor
    :param mu_tx: LinearRatio: Transmitter share of mu. Defaults to mu / 2
    """
    mu: LinearRatio
    sigma_q2: LinearRatio
    p_th: PowerMw
    eta: LinearRatio
    zeta: PowerMw
    mu_tx: LinearRatio = None

    def __post_init__(self):
        for name, kind in (('mu', LinearRatio), ('sigma_q2', LinearRatio), ('p_th', PowerMw),
                           ('eta', LinearRatio), ('zeta', PowerMw)):
            object.__setattr__(self, name, as_quantity(kind, getattr(self, name)))
        if self.mu_tx is None:
            object.__setattr__(self, 'mu_tx', self.mu / 2.0)
        object.__setattr__(self, 'mu_tx', as_quantity(LinearRatio, self.mu_tx))

        if self.eta.value < self.mu.value:
            raise InvalidParameterError(self.eta, f'eta ({self.eta.value}) must be >= mu ({self.mu.value})')
        check_positive('zeta', self.zeta)
        if self.mu_tx.value > self.mu.value:
            raise InvalidParameterError(self.mu_tx, 'mu_tx cannot exceed mu')

    @property
    def mu_rx(self) -> LinearRatio:
        return LinearRatio(self.mu.value - self.mu_tx.value)

    @property
    def mixer_excess(self) -> LinearRatio:
        # P_th * (N_m - 1), recovered from eta so that it also exists for profiles built from values
        return LinearRatio(max(self.eta.value - self.mu.value - self.sigma_q2.value, 0.0))

    @classmethod
    def from_values(cls, eta: LinearRatio | float, zeta: PowerMw | float,
                    mu: LinearRatio | float = None) -> 'NoiseProfile':
        """
        Build a profile directly from eta and zeta, without a hardware description.
        The part of eta that is not phase noise is booked as quantization noise.

        :param eta: LinearRatio | float: Signal-power dependent noise coefficient
        :param zeta: PowerMw | float: Noise floor in mW
        :param mu: LinearRatio | float: Total phase noise. Defaults to eta (phase-noise dominated)
        :return: NoiseProfile
        """
        eta = as_quantity(LinearRatio, eta)
        mu = eta if mu is None else as_quantity(LinearRatio, mu)
        if eta.value < mu.value:
            raise InvalidParameterError(eta, f'eta ({eta.value}) must be >= mu ({mu.value})')
        zeta = as_quantity(PowerMw, zeta)
        return cls(mu=mu, sigma_q2=LinearRatio(eta.value - mu.value), p_th=zeta, eta=eta, zeta=zeta)


@dataclass(frozen=True)
class LinkState:
    """
    Instantaneous received signal strengths at node A.

    :param rssi_a: PowerMw: Self-interference RSSI
    :param rssi_b: PowerMw: Signal-of-interest RSSI
    """
    rssi_a: PowerMw
    rssi_b: PowerMw

    def __post_init__(self):
        object.__setattr__(self, 'rssi_a', as_quantity(PowerMw, self.rssi_a))
        object.__setattr__(self, 'rssi_b', as_quantity(PowerMw, self.rssi_b))

    @classmethod
    def from_dbm(cls, rssi_a_dbm: PowerDbm | float, rssi_b_dbm: PowerDbm | float) -> 'LinkState':
        return cls(rssi_a=dbm_to_mw(rssi_a_dbm), rssi_b=dbm_to_mw(rssi_b_dbm))

    def scaled(self, gain: float) -> 'LinkState':
        """
        Scale both RSSI values by the same linear gain (e.g. a change of transmit power).
        """
        return LinkState(rssi_a=self.rssi_a * gain, rssi_b=self.rssi_b * gain)


@require_positive('bandwidth_hz', 'temperature_k')
def thermal_noise_power(bandwidth_hz: float, temperature_k: float = None) -> PowerMw:
    """
    Thermal noise power k_B * T * B.

    :param bandwidth_hz: float: Bandwidth
    :param temperature_k: float: Noise temperature. Defaults to the library temperature (290 K)
    :return: PowerMw: Noise power in mW
    """
    if temperature_k is None:
        temperature_k = get_temperature()
    return PowerMw(BOLTZMANN_J_PER_K * temperature_k * np.asarray(bandwidth_hz, dtype=float) * 1e3)


def quantization_noise_variance(adc_bits: int) -> LinearRatio:
    """
    ADC quantization noise variance 1 / (12 * 2^(2m - 2)), normalized to the full-scale input.

    :param adc_bits: int: ADC resolution m >= 1
    :raise: InvalidParameterError: If adc_bits is not an integer >= 1
    :return: LinearRatio: Quantization noise variance
    """
    if isinstance(adc_bits, bool) or int(adc_bits) != adc_bits or adc_bits < 1:
        raise InvalidParameterError(adc_bits, 'ADC bits must be an integer >= 1')
    return LinearRatio(1.0 / (12.0 * 2.0 ** (2 * int(adc_bits) - 2)))


def derive_noise_profile(imp: RadioImpairments) -> NoiseProfile:
    """
    Derive eta and zeta from the transceiver impairments.

    eta = mu + sigma_q^2 + P_th * N_m - P_th and zeta = P_th * N_l, with P_th in mW.

    :param imp: RadioImpairments: Transceiver impairments
    :return: NoiseProfile
    """
    mu = imp.mu_tx + imp.mu_rx
    sigma_q2 = quantization_noise_variance(imp.adc_bits)
    p_th = thermal_noise_power(imp.bandwidth_hz, imp.temperature_k)

    eta = LinearRatio(mu.value + sigma_q2.value + p_th.value * (imp.mixer_nf.value - 1.0))
    zeta = p_th * imp.lna_nf

    logger.debug(f'Noise profile: mu={mu.value:.4g}, sigma_q2={sigma_q2.value:.4g}, '
                 f'p_th={p_th.value:.4g} mW, eta={eta.value:.4g}, zeta={zeta.value:.4g} mW')

    return NoiseProfile(mu=mu, sigma_q2=sigma_q2, p_th=p_th, eta=eta, zeta=zeta, mu_tx=imp.mu_tx)


def lna_gain_dc(link: LinkState) -> LinearRatio:
    """
    LNA power gain under digital cancellation: the AGC normalizes the total input power.

    :param link: LinkState: Instantaneous RSSI pair
    :raise: InvalidParameterError: If the total input power is zero
    :return: LinearRatio: alpha^2 = 1 / (RSSI_A + RSSI_B)
    """
    total = link.rssi_a.value + link.rssi_b.value
    if np.any(np.asarray(total) <= 0):
        raise InvalidParameterError(total, 'LNA input power is zero; the AGC gain is undefined')
    return LinearRatio(1.0 / total)


def lna_gain_ac(link: LinkState) -> LinearRatio:
    """
    LNA power gain under analog cancellation: self-interference is removed before the LNA.

    :param link: LinkState: Instantaneous RSSI pair
    :raise: InvalidParameterError: If the signal-of-interest power is zero
    :return: LinearRatio: alpha^2 = 1 / RSSI_B
    """
    if np.any(np.asarray(link.rssi_b.value) <= 0):
        raise InvalidParameterError(link.rssi_b, 'LNA input power is zero; the AGC gain is undefined')
    return LinearRatio(1.0 / link.rssi_b.value)


def sinr_fd_dc(profile: NoiseProfile, link: LinkState) -> LinearRatio:
    """
    Full-duplex SINR with digital cancellation: RSSI_B / (eta RSSI_A + eta RSSI_B + zeta).

    :param profile: NoiseProfile: Derived noise quantities
    :param link: LinkState: Instantaneous RSSI pair
    :return: LinearRatio: SINR
    """
    a, b = link.rssi_a.value, link.rssi_b.value
    eta = profile.eta.value
    return LinearRatio(b / (eta * a + eta * b + profile.zeta.value))


def sinr_fd_ac(profile: NoiseProfile, link: LinkState) -> LinearRatio:
    """
    Full-duplex SINR with analog cancellation: RSSI_B / (mu RSSI_A + eta RSSI_B + zeta).

    :param profile: NoiseProfile: Derived noise quantities
    :param link: LinkState: Instantaneous RSSI pair
    :return: LinearRatio: SINR
    """
    a, b = link.rssi_a.value, link.rssi_b.value
    return LinearRatio(b / (profile.mu.value * a + profile.eta.value * b + profile.zeta.value))


def snr_hd(profile: NoiseProfile, rssi_b: PowerMw | float) -> LinearRatio:
    """
    Half-duplex SNR, with the transmit power doubled and no self-interference: 2 RSSI_B / (2 eta RSSI_B + zeta).

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_b: PowerMw | float: Signal-of-interest RSSI at the full-duplex transmit power
    :return: LinearRatio: SNR
    """
    b = as_quantity(PowerMw, rssi_b).value
    return LinearRatio(2.0 * b / (2.0 * profile.eta.value * b + profile.zeta.value))


def rate_fd(sinr: LinearRatio | float) -> float | np.ndarray:
    """
    Full-duplex achievable rate log2(1 + SINR) in bits/s/Hz.
    """
    return np.log2(1.0 + as_quantity(LinearRatio, sinr).value)


def rate_hd(snr: LinearRatio | float) -> float | np.ndarray:
    """
    Half-duplex achievable rate 1/2 log2(1 + SNR) in bits/s/Hz; the two directions share time.
    """
    return 0.5 * np.log2(1.0 + as_quantity(LinearRatio, snr).value)


def is_phase_noise_dominated(profile: NoiseProfile, margin_db: float = 10.0) -> bool:
    """
    Check whether phase noise dominates quantization and mixer noise, in which case analog
    and digital cancellation give the same rate gain region.

    :param profile: NoiseProfile: Derived noise quantities
    :param margin_db: float: Required excess of mu over the remaining eta components
    :return: bool
    """
    rest = profile.eta.value - profile.mu.value
    if rest <= 0:
        return True
    return bool(profile.mu.value >= rest * 10.0 ** (margin_db / 10.0))
