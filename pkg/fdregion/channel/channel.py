"""
Link states from physical scenarios: log-distance path loss with log-normal shadowing on the
signal-of-interest path, a fixed passive suppression on the self-interference path, and single-tap
Rician fading on both.
"""
import logging
from dataclasses import dataclass, field, replace

import numpy as np

from .._utils._checks import check_positive, require_positive
from .._utils._errors import InvalidParameterError
from .._utils._units import Decibel, PowerDbm, as_quantity
from ..model.model import LinkState, NoiseProfile, RadioImpairments, derive_noise_profile

__all__ = [
    'SPEED_OF_LIGHT_M_S', 'PathLossParams', 'FadingParams', 'Scenario',
    'path_loss_db', 'sample_rician', 'rssi_pair',
]

logger = logging.getLogger(__name__)

SPEED_OF_LIGHT_M_S = 299_792_458.0


@dataclass(frozen=True)
class PathLossParams:
    """
    Log-distance path loss L = -K + 10 r log10(d) + X, X ~ N(0, sigma^2) in dB.

    :param carrier_freq_hz: float: Carrier frequency
    :param exponent: float: Path loss exponent r
    :param shadow_sigma_db: float: Shadowing standard deviation
    """
    carrier_freq_hz: float = 2.4e9
    exponent: float = 2.5
    shadow_sigma_db: float = 3.5

    def __post_init__(self):
        check_positive('carrier_freq_hz', self.carrier_freq_hz)
        check_positive('exponent', self.exponent)
        check_positive('shadow_sigma_db', self.shadow_sigma_db, allow_zero=True)

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT_M_S / self.carrier_freq_hz

    @property
    def k_db(self) -> float:
        """
        Free-space constant K = 20 log10(lambda / 4 pi), negative at radio frequencies.
        """
        return float(20.0 * np.log10(self.wavelength_m / (4.0 * np.pi)))


@dataclass(frozen=True)
class FadingParams:
    """
    Rician fading with K-factor in dB, normalized to unit mean-square gain.
    """
    rician_k_db: float = 0.0

    @property
    def k_linear(self) -> float:
        return float(10.0 ** (self.rician_k_db / 10.0))


def _default_impairments() -> RadioImpairments:
    return RadioImpairments.from_total_phase_noise_db(-60.0)


@dataclass(frozen=True)
class Scenario:
    """
    Physical setup of a symmetric full-duplex link between nodes A and B.

    :param tx_power_dbm: float: Transmit power P_x of each node
    :param passive_suppression_db: float: Passive self-interference suppression (positive dB)
    :param distance_m: float: Node separation D
    :param path_loss: PathLossParams: Signal-of-interest path loss
    :param soi_fading: FadingParams: Signal-of-interest fading (0 dB K-factor by default)
    :param si_fading: FadingParams: Self-interference fading (35 dB K-factor by default)
    :param impairments: RadioImpairments: Hardware description of both nodes
    """
    tx_power_dbm: float = 0.0
    passive_suppression_db: float = 40.0
    distance_m: float = 50.0
    path_loss: PathLossParams = field(default_factory=PathLossParams)
    soi_fading: FadingParams = field(default_factory=lambda: FadingParams(0.0))
    si_fading: FadingParams = field(default_factory=lambda: FadingParams(35.0))
    impairments: RadioImpairments = field(default_factory=_default_impairments)

    def __post_init__(self):
        check_positive('distance_m', self.distance_m)
        check_positive('passive_suppression_db', self.passive_suppression_db, allow_zero=True)

    @property
    def noise_profile(self) -> NoiseProfile:
        return derive_noise_profile(self.impairments)

    @property
    def rssi_a_dbm(self) -> PowerDbm:
        """
        Mean self-interference RSSI P_x - C.
        """
        return PowerDbm(self.tx_power_dbm) - Decibel(self.passive_suppression_db)

    @property
    def mean_rssi_b_dbm(self) -> PowerDbm:
        """
        Signal-of-interest RSSI without fading and shadowing, P_x - L(D).
        """
        return PowerDbm(self.tx_power_dbm) - path_loss_db(self.path_loss, self.distance_m)

    def distance_for_rssi_b(self, target_dbm: PowerDbm | float) -> float:
        """
        Distance at which the mean signal-of-interest RSSI equals the target, inverting the path loss.

        :param target_dbm: PowerDbm | float: Target mean RSSI_B in dBm
        :return: float: Distance in meters
        """
        target = as_quantity(PowerDbm, target_dbm).value
        loss = self.tx_power_dbm - target
        return float(10.0 ** ((loss + self.path_loss.k_db) / (10.0 * self.path_loss.exponent)))

    def replace(self, **changes) -> 'Scenario':
        return replace(self, **changes)


@require_positive('d')
def path_loss_db(p: PathLossParams, d, rng: np.random.Generator = None, size=None) -> Decibel:
    """
    Path loss at distance d, with a log-normal shadowing draw when a random source is given.

    :param p: PathLossParams: Path loss model
    :param d: float | np.ndarray: Distance in meters (> 0)
    :param rng: np.random.Generator: Shadowing source. None disables shadowing
    :param size: int | tuple: Number of shadowing draws
    :raise: InvalidParameterError: If d <= 0
    :return: Decibel: Path loss
    """
    loss = -p.k_db + 10.0 * p.exponent * np.log10(np.asarray(d, dtype=float))
    if rng is not None and p.shadow_sigma_db > 0:
        loss = loss + rng.normal(0.0, p.shadow_sigma_db, size=size)
    return Decibel(loss)


def sample_rician(f: FadingParams, rng: np.random.Generator, size=None) -> complex | np.ndarray:
    """
    Draw Rician gains h = sqrt(K/(K+1)) + sqrt(1/(K+1)) g, g ~ CN(0, 1), so that E|h|^2 = 1.
    The line-of-sight phase is 0.

    :param f: FadingParams: Fading model
    :param rng: np.random.Generator: Random source
    :param size: int | tuple: Number of draws. None draws a single complex value
    :return: complex | np.ndarray: Complex gains
    """
    if rng is None:
        raise InvalidParameterError(rng, 'sample_rician needs a random source')
    k = f.k_linear
    los = np.sqrt(k / (k + 1.0))
    scatter = np.sqrt(1.0 / (k + 1.0))
    g = (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2.0)
    h = los + scatter * g
    return complex(h) if size is None else h


def rssi_pair(s: Scenario, rng: np.random.Generator = None, *, fading: bool = True, shadowing: bool = True,
              size=None) -> LinkState:
    """
    Instantaneous RSSI pair at node A.

    RSSI_A = P_x 10^(-C/10) |h_AA|^2 and RSSI_B = P_x 10^(-L(D)/10) |h_BA|^2. Draws are taken in the
    order h_AA, h_BA, shadowing. Without a random source the pair is deterministic.

    :param s: Scenario: Physical setup
    :param rng: np.random.Generator: Random source. None gives the deterministic pair
    :param fading: bool: Draw Rician gains on both paths
    :param shadowing: bool: Draw shadowing on the signal-of-interest path
    :param size: int | tuple: Number of realizations
    :return: LinkState: RSSI pair (array-valued when size is given)
    """
    p_x = as_quantity(PowerDbm, s.tx_power_dbm).to_mw().value
    shape = () if size is None else size

    if rng is not None and fading:
        g_aa = np.abs(sample_rician(s.si_fading, rng, size)) ** 2
        g_ba = np.abs(sample_rician(s.soi_fading, rng, size)) ** 2
    else:
        g_aa = g_ba = np.ones(shape)

    loss = path_loss_db(s.path_loss, s.distance_m, rng if shadowing else None, size).value

    rssi_a = p_x * 10.0 ** (-s.passive_suppression_db / 10.0) * g_aa
    rssi_b = p_x * 10.0 ** (-np.asarray(loss) / 10.0) * g_ba
    if size is None:
        rssi_a, rssi_b = float(rssi_a), float(rssi_b)
    else:
        rssi_b = np.broadcast_to(rssi_b, np.shape(rssi_a)).copy()
    return LinkState(rssi_a=rssi_a, rssi_b=rssi_b)
