"""
Rate gain region of a full-duplex link.

Full-duplex beats half-duplex exactly when SINR_FD^2 + 2 SINR_FD > SNR_HD. Substituting the
closed forms turns this into a quadratic inequality in RSSI_B whose positive root is the
region boundary RSSI_B,min. The piecewise log-linear approximation and the regime
thresholds follow from the asymptotes of that root.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd
from scipy.optimize import bisect

from .._utils._checks import require_positive
from .._utils._errors import DegenerateModelError, InvalidParameterError, ModelAssumptionError
from .._utils._units import LinearRatio, PowerDbm, PowerMw, as_quantity, dbm_to_mw, mw_to_dbm
from ..model.model import LinkState, NoiseProfile, sinr_fd_ac, sinr_fd_dc, snr_hd

__all__ = [
    'Scheme', 'RegimeKind', 'Regime', 'QuadraticCoeffs', 'RegionResult',
    'MAX_NOISE_COEFFICIENT', 'ORACLE_BRACKET_DBM',
    'sinr_fd', 'quadratic_coeffs', 'exact_rssi_b_min', 'regime_thresholds', 'classify_regime',
    'approx_rssi_b_min', 'oracle_rssi_b_min', 'solve_region', 'region_table',
]

logger = logging.getLogger(__name__)

# Above 1/16 the Weak threshold zeta/eta no longer lies below the Strong one
MAX_NOISE_COEFFICIENT = 1.0 / 16.0
ORACLE_BRACKET_DBM = (-200.0, 50.0)


class Scheme(Enum):
    DIGITAL_CANCELLATION = 'dc'
    ANALOG_CANCELLATION = 'ac'

    @classmethod
    def parse(cls, text: 'str | Scheme') -> 'Scheme':
        """
        Parse a scheme name ('dc', 'ac', 'digital', 'analog', case insensitive).

        :param text: str | Scheme: Scheme name or Scheme
        :raise: InvalidParameterError: If the name is unknown
        :return: Scheme
        """
        if isinstance(text, cls):
            return text
        match str(text).strip().lower():
            case 'dc' | 'digital' | 'digital_cancellation':
                return cls.DIGITAL_CANCELLATION
            case 'ac' | 'analog' | 'analog_cancellation':
                return cls.ANALOG_CANCELLATION
            case _:
                raise InvalidParameterError(text, f"{text} is not a valid scheme. Use 'dc' or 'ac'")

    def self_interference_noise(self, profile: NoiseProfile) -> LinearRatio:
        """
        Coefficient of RSSI_A in the SINR denominator: eta under digital cancellation, where the
        self-interference passes the whole receive chain, and mu under analog cancellation.
        """
        if self is Scheme.DIGITAL_CANCELLATION:
            return profile.eta
        return profile.mu


class RegimeKind(Enum):
    STRONG = 'strong'
    INTERMEDIATE = 'intermediate'
    WEAK = 'weak'


@dataclass(frozen=True)
class Regime:
    """
    Self-interference regime of an operating point, with the two RSSI_A thresholds that bound the
    Intermediate regime. Both thresholds are infinite when the self-interference noise is zero.
    """
    kind: RegimeKind
    weak_threshold: PowerMw
    strong_threshold: PowerMw


@dataclass(frozen=True)
class QuadraticCoeffs:
    """
    Coefficients of a RSSI_B^2 + b RSSI_B + c > 0.

    :param a: LinearRatio: eta (eta + 1)
    :param b: PowerMw: zeta (eta + 1/2)
    :param c: float | np.ndarray: -n RSSI_A (n RSSI_A + zeta) in mW^2, n being the scheme's self-interference noise
    """
    a: LinearRatio
    b: PowerMw
    c: float | np.ndarray


@dataclass(frozen=True)
class RegionResult:
    rssi_a: PowerMw
    rssi_b_min_exact: PowerMw
    rssi_b_min_approx: PowerMw
    regime: Regime
    scheme: Scheme

    @property
    def gap_db(self) -> float:
        """
        Approximation error |approx - exact| in dB. NaN when the boundary is zero.
        """
        exact, approx = self.rssi_b_min_exact.value, self.rssi_b_min_approx.value
        if exact <= 0 or approx <= 0:
            return float('nan')
        return float(abs(10.0 * np.log10(approx / exact)))


def sinr_fd(profile: NoiseProfile, link: LinkState, scheme: Scheme) -> LinearRatio:
    """
    Full-duplex SINR for the given cancellation scheme.
    """
    match Scheme.parse(scheme):
        case Scheme.DIGITAL_CANCELLATION:
            return sinr_fd_dc(profile, link)
        case Scheme.ANALOG_CANCELLATION:
            return sinr_fd_ac(profile, link)


def quadratic_coeffs(profile: NoiseProfile, rssi_a: PowerMw | float, scheme: Scheme) -> QuadraticCoeffs:
    """
    Coefficients of the quadratic inequality in RSSI_B that characterizes the region.
    Analog cancellation keeps a and b and replaces eta by mu in c only.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a: PowerMw | float: Self-interference RSSI (scalar or array)
    :param scheme: Scheme: Cancellation scheme
    :return: QuadraticCoeffs
    """
    rssi_a = as_quantity(PowerMw, rssi_a).value
    eta, zeta = profile.eta.value, profile.zeta.value
    n = Scheme.parse(scheme).self_interference_noise(profile).value

    return QuadraticCoeffs(
        a=LinearRatio(eta * (eta + 1.0)),
        b=PowerMw(zeta * (eta + 0.5)),
        c=-n * rssi_a * (n * rssi_a + zeta),
    )


def exact_rssi_b_min(coeffs: QuadraticCoeffs) -> PowerMw:
    """
    Positive root of the region quadratic; the region is RSSI_B above it.

    The textbook root subtracts two nearly equal numbers when b^2 >> |4ac| (Weak regime),
    so the root is evaluated as (b/a) * 2k / (1 + sqrt(1 + 4k)) with k = -ac/b^2.

    :param coeffs: QuadraticCoeffs: Region coefficients (c <= 0)
    :return: PowerMw: RSSI_B,min
    """
    a, b, c = coeffs.a.value, coeffs.b.value, np.asarray(coeffs.c, dtype=float)
    if np.any(c > 0):
        raise InvalidParameterError(coeffs.c, 'Region quadratic requires c <= 0')

    if a == 0:
        # eta = 0: the quadratic degenerates to b x + c = 0
        return PowerMw(-c / b + 0.0)

    k = -c * a / b ** 2
    root = (b / a) * 2.0 * k / (1.0 + np.sqrt(1.0 + 4.0 * k))
    return PowerMw(root)


def regime_thresholds(profile: NoiseProfile, scheme: Scheme) -> tuple[PowerMw, PowerMw]:
    """
    RSSI_A thresholds zeta/n (Weak to Intermediate) and zeta/(4 n sqrt(n)) (Intermediate to Strong).

    :param profile: NoiseProfile: Derived noise quantities
    :param scheme: Scheme: Cancellation scheme
    :raise: ModelAssumptionError: If eta >= 1/16, where the thresholds are no longer ordered
    :return: tuple[PowerMw, PowerMw]: (weak_threshold, strong_threshold)
    """
    if profile.eta.value >= MAX_NOISE_COEFFICIENT:
        raise ModelAssumptionError(profile.eta.value,
                                   f'eta << 1 violated: eta = {profile.eta.value:.4g} >= 1/16, '
                                   f'the regime thresholds are not ordered')

    n = Scheme.parse(scheme).self_interference_noise(profile).value
    zeta = profile.zeta.value
    if n == 0:
        return PowerMw(np.inf), PowerMw(np.inf)
    return PowerMw(zeta / n), PowerMw(zeta / (4.0 * n * np.sqrt(n)))


def classify_regime(profile: NoiseProfile, rssi_a: PowerMw | float, scheme: Scheme) -> Regime:
    """
    Select the regime of a scalar RSSI_A. Boundaries are half-open and ties go to the higher regime.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a: PowerMw | float: Self-interference RSSI
    :param scheme: Scheme: Cancellation scheme
    :raise: ModelAssumptionError: If eta >= 1/16
    :return: Regime
    """
    rssi_a = float(as_quantity(PowerMw, rssi_a))
    weak, strong = regime_thresholds(profile, scheme)

    if rssi_a >= strong.value:
        kind = RegimeKind.STRONG
    elif rssi_a >= weak.value:
        kind = RegimeKind.INTERMEDIATE
    else:
        kind = RegimeKind.WEAK

    return Regime(kind=kind, weak_threshold=weak, strong_threshold=strong)


def approx_rssi_b_min(profile: NoiseProfile, rssi_a: PowerMw | float, scheme: Scheme) -> tuple[PowerMw, Regime]:
    """
    Piecewise log-linear approximation of RSSI_B,min.

    Strong: n RSSI_A / sqrt(eta); Intermediate: 2 n^2 RSSI_A^2 / zeta; Weak: 2 n RSSI_A,
    with n = eta for digital and n = mu for analog cancellation.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a: PowerMw | float: Self-interference RSSI
    :param scheme: Scheme: Cancellation scheme
    :raise: ModelAssumptionError: If eta >= 1/16
    :return: tuple[PowerMw, Regime]: Approximate RSSI_B,min and the regime used
    """
    regime = classify_regime(profile, rssi_a, scheme)
    a = float(as_quantity(PowerMw, rssi_a))
    n = Scheme.parse(scheme).self_interference_noise(profile).value
    eta, zeta = profile.eta.value, profile.zeta.value

    match regime.kind:
        case RegimeKind.STRONG:
            value = n * a / np.sqrt(eta)
        case RegimeKind.INTERMEDIATE:
            value = 2.0 * n ** 2 * a ** 2 / zeta
        case RegimeKind.WEAK:
            value = 2.0 * n * a

    return PowerMw(value), regime


def _region_margin(profile: NoiseProfile, rssi_a: float, scheme: Scheme, rssi_b_dbm: float) -> float:
    # ln(SINR (SINR + 2)) - ln(SNR): positive inside the region
    link = LinkState(rssi_a=rssi_a, rssi_b=dbm_to_mw(rssi_b_dbm))
    sinr = sinr_fd(profile, link, scheme).value
    snr = snr_hd(profile, link.rssi_b).value
    return float(np.log(sinr) + np.log(2.0) + np.log1p(sinr / 2.0) - np.log(snr))


@require_positive('tol_db')
def oracle_rssi_b_min(profile: NoiseProfile, rssi_a: PowerMw | float, scheme: Scheme,
                      tol_db: float = 0.01) -> PowerMw:
    """
    Find RSSI_B,min by bisection on the defining inequality, without the closed-form root.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a: PowerMw | float: Self-interference RSSI
    :param scheme: Scheme: Cancellation scheme
    :param tol_db: float: Accuracy of the result in dB
    :raise: DegenerateModelError: If the margin does not change sign over [-200, 50] dBm
    :return: PowerMw: RSSI_B,min
    """
    a = float(as_quantity(PowerMw, rssi_a))
    scheme = Scheme.parse(scheme)
    if a == 0:
        return PowerMw(0.0)

    low, high = ORACLE_BRACKET_DBM
    f_low = _region_margin(profile, a, scheme, low)
    f_high = _region_margin(profile, a, scheme, high)
    if np.sign(f_low) == np.sign(f_high):
        raise DegenerateModelError((low, high), f'Region margin has no sign change in [{low}, {high}] dBm '
                                                f'(margins {f_low:.3g}, {f_high:.3g})')

    root_dbm = bisect(lambda x: _region_margin(profile, a, scheme, x), low, high, xtol=tol_db / 2.0)
    return dbm_to_mw(root_dbm)


def solve_region(profile: NoiseProfile, rssi_a: PowerMw | float, scheme: Scheme) -> RegionResult:
    """
    Exact boundary, approximate boundary and regime of one operating point.
    """
    scheme = Scheme.parse(scheme)
    rssi_a = as_quantity(PowerMw, rssi_a)
    exact = exact_rssi_b_min(quadratic_coeffs(profile, rssi_a, scheme))
    approx, regime = approx_rssi_b_min(profile, rssi_a, scheme)
    return RegionResult(rssi_a=rssi_a, rssi_b_min_exact=exact, rssi_b_min_approx=approx, regime=regime,
                        scheme=scheme)


def _dbm_or_nan(power: PowerMw) -> float:
    value = float(power)
    return float(mw_to_dbm(value).value) if value > 0 else float('nan')


def region_table(profile: NoiseProfile, rssi_a_dbm, schemes=(Scheme.DIGITAL_CANCELLATION, Scheme.ANALOG_CANCELLATION),
                 oracle: bool = False, tol_db: float = 0.01) -> pd.DataFrame:
    """
    Tabulate the region boundary over a RSSI_A sweep.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a_dbm: Iterable of self-interference RSSI values in dBm
    :param schemes: Iterable of Scheme (or scheme names)
    :param oracle: bool: Add the bisection oracle column oracle_dbm
    :param tol_db: float: Oracle accuracy
    :return: pd.DataFrame: Columns rssi_a_dbm, scheme, exact_dbm, approx_dbm, regime,
        weak_threshold_dbm, strong_threshold_dbm and optionally oracle_dbm
    """
    schemes = [Scheme.parse(s) for s in schemes]
    rssi_a_dbm = [float(x) for x in np.atleast_1d(np.asarray(getattr(rssi_a_dbm, 'value', rssi_a_dbm), dtype=float))]

    if Scheme.ANALOG_CANCELLATION in schemes and profile.eta.value > 4.0 * profile.mu.value:
        logger.warning(f'eta exceeds mu by {10 * np.log10(profile.eta.value / max(profile.mu.value, 1e-300)):.1f} dB; '
                       f'the analog cancellation approximation is discontinuous at its Strong threshold '
                       f'and its error can exceed 4 dB there')

    logger.info(f'Computing region over {len(rssi_a_dbm)} RSSI_A points for {len(schemes)} scheme(s)')

    rows = []
    for scheme in schemes:
        for a_dbm in rssi_a_dbm:
            result = solve_region(profile, dbm_to_mw(a_dbm), scheme)
            row = {
                'rssi_a_dbm': a_dbm,
                'scheme': scheme.value,
                'exact_dbm': _dbm_or_nan(result.rssi_b_min_exact),
                'approx_dbm': _dbm_or_nan(result.rssi_b_min_approx),
                'regime': result.regime.kind.value,
                'weak_threshold_dbm': _dbm_or_nan(result.regime.weak_threshold),
                'strong_threshold_dbm': _dbm_or_nan(result.regime.strong_threshold),
            }
            if oracle:
                row['oracle_dbm'] = _dbm_or_nan(oracle_rssi_b_min(profile, result.rssi_a, scheme, tol_db))
            rows.append(row)
            logger.debug(f"{scheme.value} RSSI_A={a_dbm:.2f} dBm: exact={row['exact_dbm']:.3f} dBm, "
                         f"approx={row['approx_dbm']:.3f} dBm ({row['regime']})")

    return pd.DataFrame(rows)
