"""
Inverse use of the region approximation: which transmit power, passive suppression and noise
level put a target RSSI_B,min on the region boundary.

All quantities here are in dB. With RSSI_A = P_x + C (C <= 0 is the passive isolation gain, so the
suppression is -C) and n the scheme's self-interference noise, each regime branch fixes the sum
S = P_x + C + n:

- Intermediate: S = (T - 10 log10(2) + zeta) / 2
- Weak: S = T - 10 log10(2)
- Strong: S = T + eta / 2
"""
import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd
from scipy.optimize import brentq

from .._utils._errors import FullDuplexError, InfeasibleDesignError, InvalidParameterError
from .._utils._units import Decibel, PowerDbm, as_quantity, mw_to_dbm
from ..model.model import NoiseProfile, RadioImpairments, derive_noise_profile
from .region import MAX_NOISE_COEFFICIENT, RegimeKind, Scheme, regime_thresholds

__all__ = [
    'BLUETOOTH_CLASSES', 'DesignSolution', 'solve_design', 'design_constraint', 'required_suppression_db',
    'max_tx_power_dbm', 'required_noise_db', 'analog_advantage_db', 'design_surface',
]

logger = logging.getLogger(__name__)

BLUETOOTH_CLASSES = {
    'class-1': 20.0,
    'class-2': 4.0,
    'class-3': 0.0,
}

_TWO_DB = 10.0 * np.log10(2.0)


@dataclass(frozen=True)
class DesignSolution:
    """
    :param constraint_db: Decibel: Required value of P_x + C + n
    :param regime: RegimeKind: Regime branch that produced the constraint
    :param noise_db: Decibel: Scheme noise n (eta for digital, mu for analog cancellation)
    :param rssi_a_dbm: PowerDbm: Self-interference RSSI at the solution, S - n
    :param target_dbm: PowerDbm: Target RSSI_B,min
    :param scheme: Scheme
    """
    constraint_db: Decibel
    regime: RegimeKind
    noise_db: Decibel
    rssi_a_dbm: PowerDbm
    target_dbm: PowerDbm
    scheme: Scheme


def solve_design(profile: NoiseProfile, target_rssi_b_min: PowerDbm | float, scheme: Scheme) -> DesignSolution:
    """
    Solve the design constraint for a target region boundary.

    Every regime branch is inverted and kept only if its RSSI_A satisfies that branch's own regime
    condition. When several branches hold, the one needing the least suppression (largest sum) wins.

    :param profile: NoiseProfile: Derived noise quantities
    :param target_rssi_b_min: PowerDbm | float: Target RSSI_B,min in dBm
    :param scheme: Scheme: Cancellation scheme
    :raise: InvalidParameterError: If the scheme noise is zero
    :raise: InfeasibleDesignError: If no branch is self-consistent
    :return: DesignSolution
    """
    scheme = Scheme.parse(scheme)
    target = as_quantity(PowerDbm, target_rssi_b_min)
    n = scheme.self_interference_noise(profile)
    if n.value <= 0:
        raise InvalidParameterError(n.value, 'Design needs a nonzero self-interference noise term')

    n_db = n.to_db().value
    eta_db = profile.eta.to_db().value
    zeta_dbm = mw_to_dbm(profile.zeta).value
    weak, strong = (mw_to_dbm(t).value for t in regime_thresholds(profile, scheme))
    t = target.value

    candidates = {
        RegimeKind.STRONG: t + eta_db / 2.0,
        RegimeKind.INTERMEDIATE: (t - _TWO_DB + zeta_dbm) / 2.0,
        RegimeKind.WEAK: t - _TWO_DB,
    }

    feasible = []
    for kind, total in candidates.items():
        rssi_a = total - n_db
        match kind:
            case RegimeKind.STRONG:
                holds = rssi_a >= strong
            case RegimeKind.INTERMEDIATE:
                holds = weak <= rssi_a < strong
            case RegimeKind.WEAK:
                holds = rssi_a < weak
        logger.debug(f'{scheme.value} {kind.value} branch: P_x + C + n = {total:.3f} dB, '
                     f'RSSI_A = {rssi_a:.3f} dBm, self-consistent: {holds}')
        if holds:
            feasible.append((total, kind))

    if not feasible:
        raise InfeasibleDesignError(t, f'Target RSSI_B,min {t} dBm is not self-consistent in any regime')

    total, kind = max(feasible, key=lambda item: item[0])
    return DesignSolution(constraint_db=Decibel(total), regime=kind, noise_db=Decibel(n_db),
                          rssi_a_dbm=PowerDbm(total - n_db), target_dbm=target, scheme=scheme)


def design_constraint(profile: NoiseProfile, target_rssi_b_min: PowerDbm | float, scheme: Scheme) -> Decibel:
    """
    Required value of P_x + C + n in dB for the target region boundary.
    """
    return solve_design(profile, target_rssi_b_min, scheme).constraint_db


def required_suppression_db(profile: NoiseProfile, target_rssi_b_min: PowerDbm | float,
                            tx_power_dbm: PowerDbm | float, scheme: Scheme) -> Decibel:
    """
    Passive self-interference suppression (-C, positive dB) needed at a given transmit power.

    :param profile: NoiseProfile: Derived noise quantities
    :param target_rssi_b_min: PowerDbm | float: Target RSSI_B,min in dBm
    :param tx_power_dbm: PowerDbm | float: Transmit power in dBm
    :param scheme: Scheme: Cancellation scheme
    :return: Decibel: Required suppression
    """
    solution = solve_design(profile, target_rssi_b_min, scheme)
    tx_power = as_quantity(PowerDbm, tx_power_dbm).value
    return Decibel(tx_power + solution.noise_db.value - solution.constraint_db.value)


def max_tx_power_dbm(profile: NoiseProfile, target_rssi_b_min: PowerDbm | float,
                     suppression_db: Decibel | float, scheme: Scheme) -> PowerDbm:
    """
    Highest transmit power that keeps the target region boundary for a given passive suppression.
    """
    solution = solve_design(profile, target_rssi_b_min, scheme)
    suppression = as_quantity(Decibel, suppression_db).value
    return PowerDbm(solution.constraint_db.value + suppression - solution.noise_db.value)


def _with_phase_noise(profile: NoiseProfile, mu: float) -> NoiseProfile:
    # Keep quantization, mixer excess and zeta; move only the phase noise
    rest = profile.eta.value - profile.mu.value
    share = profile.mu_tx.value / profile.mu.value if profile.mu.value > 0 else 0.5
    return NoiseProfile(mu=mu, sigma_q2=profile.sigma_q2, p_th=profile.p_th, eta=rest + mu, zeta=profile.zeta,
                        mu_tx=share * mu)


def _strong_phase_noise_db(rest: float, offset: float) -> float | None:
    """
    Analog Strong branch: solve mu_db - 10 log10(rest + mu) / 2 = offset, which is increasing in mu.
    """
    limit = MAX_NOISE_COEFFICIENT - rest
    if limit <= 0:
        return None

    def g(mu_db: float) -> float:
        return mu_db - 5.0 * np.log10(rest + 10.0 ** (mu_db / 10.0)) - offset

    low, high = -300.0, 10.0 * np.log10(limit)
    if g(low) > 0 or g(high) < 0:
        return None
    return brentq(g, low, high, xtol=1e-9)


def required_noise_db(profile: NoiseProfile, target_rssi_b_min: PowerDbm | float, tx_power_dbm: PowerDbm | float,
                      suppression_db: Decibel | float, scheme: Scheme) -> Decibel:
    """
    Scheme noise level (eta for digital, mu for analog cancellation) at which the given transmit power
    and suppression exactly meet the target. Only the phase noise moves; quantization noise, mixer noise
    and zeta stay those of the profile.

    Each regime branch is inverted separately and kept if the design solver picks that same branch
    at the resulting noise level. The largest such noise level is returned.

    :param profile: NoiseProfile: Derived noise quantities
    :param target_rssi_b_min: PowerDbm | float: Target RSSI_B,min in dBm
    :param tx_power_dbm: PowerDbm | float: Transmit power in dBm
    :param suppression_db: Decibel | float: Available passive suppression
    :param scheme: Scheme: Cancellation scheme
    :raise: InfeasibleDesignError: If no noise level meets the target
    :return: Decibel: Required scheme noise
    """
    scheme = Scheme.parse(scheme)
    t = as_quantity(PowerDbm, target_rssi_b_min).value
    budget = as_quantity(PowerDbm, tx_power_dbm).value - as_quantity(Decibel, suppression_db).value
    zeta_dbm = mw_to_dbm(profile.zeta).value
    rest = profile.eta.value - profile.mu.value
    digital = scheme is Scheme.DIGITAL_CANCELLATION

    # Noise level n_db from S = P_x + C + n, per branch
    noise_db = {
        RegimeKind.INTERMEDIATE: (t - _TWO_DB + zeta_dbm) / 2.0 - budget,
        RegimeKind.WEAK: t - _TWO_DB - budget,
    }
    if digital:
        noise_db[RegimeKind.STRONG] = 2.0 * (t - budget)
    else:
        mu_db = _strong_phase_noise_db(rest, t - budget)
        if mu_db is not None:
            noise_db[RegimeKind.STRONG] = mu_db

    solutions = []
    for kind, n_db in noise_db.items():
        n = 10.0 ** (n_db / 10.0)
        mu = n - rest if digital else n
        if mu <= 0 or rest + mu >= MAX_NOISE_COEFFICIENT:
            continue
        candidate = _with_phase_noise(profile, mu)
        try:
            solution = solve_design(candidate, t, scheme)
        except FullDuplexError:
            continue
        logger.debug(f'{scheme.value} {kind.value} branch: noise {n_db:.3f} dB, solver regime {solution.regime.value}')
        if solution.regime is kind:
            solutions.append(solution.noise_db.value)

    if not solutions:
        raise InfeasibleDesignError(budget, f'No noise level reaches {t} dBm with P_x + C = {budget} dBm')
    return Decibel(max(solutions))


def analog_advantage_db(imp: RadioImpairments | NoiseProfile, target_rssi_b_min: PowerDbm | float,
                        tx_power_dbm: PowerDbm | float) -> Decibel:
    """
    How much less passive suppression analog cancellation needs than digital cancellation.
    """
    profile = derive_noise_profile(imp) if isinstance(imp, RadioImpairments) else imp
    dc = required_suppression_db(profile, target_rssi_b_min, tx_power_dbm, Scheme.DIGITAL_CANCELLATION)
    ac = required_suppression_db(profile, target_rssi_b_min, tx_power_dbm, Scheme.ANALOG_CANCELLATION)
    return dc - ac


def design_surface(imp: RadioImpairments, target_rssi_b_min: PowerDbm | float, phase_noise_db, tx_power_dbm,
                   schemes=(Scheme.DIGITAL_CANCELLATION, Scheme.ANALOG_CANCELLATION)) -> pd.DataFrame:
    """
    Required passive suppression over a grid of total phase noise and transmit power.

    :param imp: RadioImpairments: Hardware description; its phase noise is replaced at every grid point
    :param target_rssi_b_min: PowerDbm | float: Target RSSI_B,min in dBm
    :param phase_noise_db: Iterable of total phase noise values in dB
    :param tx_power_dbm: Iterable of transmit powers in dBm
    :param schemes: Iterable of Scheme (or scheme names)
    :return: pd.DataFrame: Columns phase_noise_db, tx_power_dbm, scheme, eta_db, regime,
        constraint_db, required_suppression_db. Infeasible points carry regime 'infeasible' and NaN values.
    """
    schemes = [Scheme.parse(s) for s in schemes]
    phase_noise_db = [float(x) for x in np.atleast_1d(phase_noise_db)]
    tx_power_dbm = [float(x) for x in np.atleast_1d(tx_power_dbm)]

    logger.info(f'Computing design surface over {len(phase_noise_db)} phase noise x {len(tx_power_dbm)} '
                f'transmit power points')

    rows = []
    for mu_db in phase_noise_db:
        profile = derive_noise_profile(imp.with_total_phase_noise_db(mu_db))
        eta_db = float(profile.eta.to_db().value)
        for scheme in schemes:
            try:
                solution = solve_design(profile, target_rssi_b_min, scheme)
            except InfeasibleDesignError as e:
                logger.warning(f'Phase noise {mu_db} dB, {scheme.value}: {e.message}')
                solution = None
            for p_x in tx_power_dbm:
                row = {'phase_noise_db': mu_db, 'tx_power_dbm': p_x, 'scheme': scheme.value, 'eta_db': eta_db}
                if solution is None:
                    row.update(regime='infeasible', constraint_db=float('nan'), required_suppression_db=float('nan'))
                else:
                    row.update(regime=solution.regime.value,
                               constraint_db=solution.constraint_db.value,
                               required_suppression_db=p_x + solution.noise_db.value - solution.constraint_db.value)
                rows.append(row)

    return pd.DataFrame(rows)
