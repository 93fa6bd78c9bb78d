"""
Ergodic rate sweeps over fading realizations of a scenario.
"""
import logging

import numpy as np
import pandas as pd

from .._utils._errors import InvalidParameterError
from ..channel.channel import Scenario, rssi_pair
from ..model.model import rate_fd, rate_hd, snr_hd
from ..region.region import sinr_fd
from .sim import SimConfig

__all__ = ['SWEEP_MODES', 'ergodic_rate_sweep', 'power_sweep']

logger = logging.getLogger(__name__)

SWEEP_MODES = {
    'rssi_b': 'rssi_b_dbm',
    'distance': 'distance_m',
    'tx_power': 'tx_power_dbm',
}


def _point_scenario(s: Scenario, value: float, mode: str) -> Scenario:
    match mode:
        case 'rssi_b':
            return s.replace(distance_m=s.distance_for_rssi_b(value))
        case 'distance':
            return s.replace(distance_m=value)
        case 'tx_power':
            return s.replace(tx_power_dbm=value)


def ergodic_rate_sweep(s: Scenario, sweep, cfg: SimConfig, mode: str = 'rssi_b') -> pd.DataFrame:
    """
    Mean full-duplex and half-duplex rates over a sweep.

    Modes:
    - rssi_b: the sweep values are mean signal-of-interest RSSI targets in dBm; the distance is set
      to meet each target and only fading is drawn.
    - distance: the sweep values are distances in meters; fading and shadowing are drawn.
    - tx_power: the sweep values are transmit powers in dBm at the scenario distance; fading and
      shadowing are drawn.

    With cfg.fading_enabled False every point is the deterministic closed form. Otherwise every point
    averages cfg.n_samples realizations drawn from the same seed.

    :param s: Scenario: Base scenario
    :param sweep: Iterable of sweep values
    :param cfg: SimConfig: Sample count, seed and cancellation scheme
    :param mode: str: 'rssi_b', 'distance' or 'tx_power'
    :raise: InvalidParameterError: If the sweep is empty or the mode unknown
    :return: pd.DataFrame: Columns <sweep column>, distance_m, tx_power_dbm, rssi_a_dbm, mean_rssi_b_dbm,
        rate_fd_bps_hz, rate_hd_bps_hz, gain_ratio. The sweep column comes first and is not repeated.
    """
    if mode not in SWEEP_MODES:
        raise InvalidParameterError(mode, f"{mode} is not a valid sweep mode. Use one of {', '.join(SWEEP_MODES)}")
    values = [float(x) for x in np.atleast_1d(np.asarray(sweep, dtype=float))]
    if not values:
        raise InvalidParameterError(sweep, 'Sweep must not be empty')

    profile = s.noise_profile
    column = SWEEP_MODES[mode]
    logger.info(f'Sweeping {len(values)} {column} points ({cfg.scheme.value}, '
                f'{"fading, " + str(cfg.n_samples) + " draws" if cfg.fading_enabled else "deterministic"})')

    rows = []
    for value in values:
        point = _point_scenario(s, value, mode)
        if cfg.fading_enabled:
            rng = np.random.default_rng(cfg.seed)
            link = rssi_pair(point, rng, fading=True, shadowing=mode != 'rssi_b', size=cfg.n_samples)
        else:
            link = rssi_pair(point)

        r_fd = float(np.mean(rate_fd(sinr_fd(profile, link, cfg.scheme))))
        r_hd = float(np.mean(rate_hd(snr_hd(profile, link.rssi_b))))
        rows.append({
            column: value,
            'distance_m': point.distance_m,
            'tx_power_dbm': point.tx_power_dbm,
            'rssi_a_dbm': float(point.rssi_a_dbm.value),
            'mean_rssi_b_dbm': float(point.mean_rssi_b_dbm.value),
            'rate_fd_bps_hz': r_fd,
            'rate_hd_bps_hz': r_hd,
            'gain_ratio': r_fd / r_hd if r_hd > 0 else float('nan'),
        })
        logger.debug(f'{column}={value:g}: R_FD={r_fd:.4f}, R_HD={r_hd:.4f} bits/s/Hz')

    return pd.DataFrame(rows)


def power_sweep(s: Scenario, tx_powers_dbm, cfg: SimConfig) -> pd.DataFrame:
    """
    Rates over transmit power at the scenario distance.
    """
    return ergodic_rate_sweep(s, tx_powers_dbm, cfg, mode='tx_power')
