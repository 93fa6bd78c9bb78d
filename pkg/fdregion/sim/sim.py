"""
Sample-level Monte Carlo check of the SINR and SNR closed forms.

Every term is injected at the LNA input. The receive chain noise after the LNA (mixer excess and
quantization) is referred back to the input by dividing by the AGC gain alpha^2, which is the
total LNA input power under digital cancellation and RSSI_B under analog cancellation.

The sample index space is cut into chunks. Chunk k draws from SeedSequence(seed, spawn_key=(k,))
and the chunk sums are combined in chunk order, so a result depends on (seed, n_samples, chunk_size)
and never on the number of worker threads.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .._utils._checks import check_range
from .._utils._errors import DegenerateModelError, InvalidParameterError
from .._utils._units import LinearRatio, PowerDbm, PowerMw, as_quantity, dbm_to_mw, mw_to_dbm
from ..config import get_chunk_size, get_small_angle_limit, get_threads
from ..model.model import LinkState, NoiseProfile, rate_fd, rate_hd, snr_hd
from ..region.region import Scheme, exact_rssi_b_min, quadratic_coeffs, sinr_fd

__all__ = [
    'SimConfig', 'NoiseBreakdown', 'SimResult',
    'simulate_fd', 'simulate_hd', 'simulated_rssi_b_min',
]

logger = logging.getLogger(__name__)

_MAX_SEED = 2 ** 64


@dataclass(frozen=True)
class SimConfig:
    """
    Monte Carlo settings.

    :param n_samples: int: Samples per simulation
    :param seed: int: Unsigned 64-bit seed
    :param scheme: Scheme: Cancellation scheme of the full-duplex receiver
    :param exact_exponential: bool: Use e^(i phi) instead of the small-angle form 1 + i phi
    :param fading_enabled: bool: Average over fading realizations in rate sweeps. A single
        simulation always treats its link state as one instantaneous realization
    :param threads: int: Worker threads. None uses the library default
    :param chunk_size: int: Samples per random stream. None uses the library default
    """
    n_samples: int = 100_000
    seed: int = 0
    scheme: Scheme = Scheme.DIGITAL_CANCELLATION
    exact_exponential: bool = False
    fading_enabled: bool = True
    threads: int = None
    chunk_size: int = None

    def __post_init__(self):
        object.__setattr__(self, 'scheme', Scheme.parse(self.scheme))
        for name in ('n_samples', 'seed'):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise InvalidParameterError(value, f'{name} must be an integer')
            object.__setattr__(self, name, int(value))
        if self.n_samples < 1:
            raise InvalidParameterError(self.n_samples, 'n_samples must be >= 1')
        check_range('seed', self.seed, 0, _MAX_SEED, high_inclusive=False)
        for name in ('threads', 'chunk_size'):
            value = getattr(self, name)
            if value is not None and (int(value) != value or value < 1):
                raise InvalidParameterError(value, f'{name} must be an integer >= 1')

    @property
    def resolved_threads(self) -> int:
        return int(self.threads) if self.threads is not None else get_threads()

    @property
    def resolved_chunk_size(self) -> int:
        return int(self.chunk_size) if self.chunk_size is not None else get_chunk_size()


@dataclass(frozen=True)
class NoiseBreakdown:
    """
    Empirical input-referred power of every impairment term.
    """
    phase_si: PowerMw
    phase_soi: PowerMw
    receiver: PowerMw
    quantization: PowerMw

    @property
    def total(self) -> PowerMw:
        return self.phase_si + self.phase_soi + self.receiver + self.quantization


@dataclass(frozen=True)
class SimResult:
    """
    :param empirical_sinr: LinearRatio: Signal power over impairment power, both accumulated from samples
    :param analytic_sinr: LinearRatio: Closed-form SINR (SNR for half-duplex)
    :param empirical_rate: float: Rate from the empirical SINR, with the 1/2 factor for half-duplex
    :param rel_error: float: |empirical - analytic| / analytic
    :param noise_breakdown: NoiseBreakdown: Per-term powers
    :param signal_power: PowerMw: Empirical signal-of-interest power
    :param n_samples: int: Samples used
    """
    empirical_sinr: LinearRatio
    analytic_sinr: LinearRatio
    empirical_rate: float
    rel_error: float
    noise_breakdown: NoiseBreakdown
    signal_power: PowerMw
    n_samples: int = field(default=0)


@dataclass(frozen=True)
class _SamplePlan:
    seed: int
    rssi_a: float
    rssi_b: float
    mu_tx: float
    mu_rx: float
    receiver_power: float
    quantization_power: float
    scheme: Scheme
    exact_exponential: bool


def _complex_normal(rng: np.random.Generator, count: int) -> np.ndarray:
    return (rng.standard_normal(count) + 1j * rng.standard_normal(count)) / np.sqrt(2.0)


def _chunk_sums(plan: _SamplePlan, index: int, count: int) -> np.ndarray:
    """
    Sums of |signal|^2, |impairments|^2, and of each impairment term over one chunk.
    """
    rng = np.random.default_rng(np.random.SeedSequence(plan.seed, spawn_key=(index,)))

    # Fixed draw order: every term is drawn even when its power is zero, so streams stay aligned
    x_a = _complex_normal(rng, count)
    x_b = _complex_normal(rng, count)
    phi_a_t = rng.normal(0.0, np.sqrt(plan.mu_tx), count)
    phi_a_r = rng.normal(0.0, np.sqrt(plan.mu_rx), count)
    phi_b_t = rng.normal(0.0, np.sqrt(plan.mu_tx), count)
    receiver = _complex_normal(rng, count) * np.sqrt(plan.receiver_power)
    half_width = np.sqrt(1.5 * plan.quantization_power)
    quantization = rng.uniform(-half_width, half_width, count) + 1j * rng.uniform(-half_width, half_width, count)

    if plan.exact_exponential:
        if plan.scheme is Scheme.DIGITAL_CANCELLATION:
            residual = np.exp(1j * (phi_a_t + phi_a_r)) - 1.0
        else:
            residual = np.exp(1j * phi_a_t) - np.exp(1j * phi_a_r)
        soi_error = np.exp(1j * (phi_b_t + phi_a_r)) - 1.0
    else:
        if plan.scheme is Scheme.DIGITAL_CANCELLATION:
            residual = 1j * (phi_a_t + phi_a_r)
        else:
            residual = 1j * (phi_a_t - phi_a_r)
        soi_error = 1j * (phi_b_t + phi_a_r)

    signal = np.sqrt(plan.rssi_b) * x_b
    phase_soi = signal * soi_error
    phase_si = np.sqrt(plan.rssi_a) * x_a * residual
    impairments = phase_si + phase_soi + receiver + quantization

    return np.array([
        np.sum(np.abs(signal) ** 2),
        np.sum(np.abs(impairments) ** 2),
        np.sum(np.abs(phase_si) ** 2),
        np.sum(np.abs(phase_soi) ** 2),
        np.sum(np.abs(receiver) ** 2),
        np.sum(np.abs(quantization) ** 2),
    ])


def _run(plan: _SamplePlan, cfg: SimConfig) -> np.ndarray:
    """
    Mean powers over cfg.n_samples samples, accumulated chunk by chunk in chunk order.
    """
    chunk_size = cfg.resolved_chunk_size
    n_chunks = -(-cfg.n_samples // chunk_size)
    counts = [min(chunk_size, cfg.n_samples - k * chunk_size) for k in range(n_chunks)]
    threads = min(cfg.resolved_threads, n_chunks)

    logger.debug(f'Simulating {cfg.n_samples} samples in {n_chunks} chunk(s) on {threads} thread(s)')

    if threads == 1:
        partials = [_chunk_sums(plan, k, count) for k, count in enumerate(counts)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            partials = list(executor.map(lambda job: _chunk_sums(plan, *job), enumerate(counts)))

    totals = np.zeros(6)
    for partial in partials:
        totals = totals + partial
    return totals / cfg.n_samples


def _warn_small_angle(profile: NoiseProfile, cfg: SimConfig) -> None:
    if not cfg.exact_exponential and profile.mu.value >= get_small_angle_limit():
        logger.warning(f'Phase noise power {profile.mu.value:.3g} is beyond the small-angle limit '
                       f'{get_small_angle_limit():.3g}; consider exact_exponential=True')


def _result(powers: np.ndarray, analytic: LinearRatio, rate_fn, n_samples: int) -> SimResult:
    signal, impairments, phase_si, phase_soi, receiver, quantization = (float(x) for x in powers)
    empirical = signal / impairments if impairments > 0 else float('inf')
    if analytic.value > 0:
        rel_error = abs(empirical - analytic.value) / analytic.value
    else:
        rel_error = 0.0 if empirical == 0 else float('inf')

    return SimResult(
        empirical_sinr=LinearRatio(empirical),
        analytic_sinr=analytic,
        empirical_rate=float(rate_fn(empirical)),
        rel_error=float(rel_error),
        noise_breakdown=NoiseBreakdown(phase_si=PowerMw(phase_si), phase_soi=PowerMw(phase_soi),
                                       receiver=PowerMw(receiver), quantization=PowerMw(quantization)),
        signal_power=PowerMw(signal),
        n_samples=n_samples,
    )


def simulate_fd(profile: NoiseProfile, link: LinkState, cfg: SimConfig) -> SimResult:
    """
    Simulate the full-duplex receiver of node A at one instantaneous link state.

    :param profile: NoiseProfile: Derived noise quantities
    :param link: LinkState: Scalar RSSI pair
    :param cfg: SimConfig: Monte Carlo settings
    :raise: InvalidParameterError: If the LNA input power is zero
    :return: SimResult
    """
    rssi_a, rssi_b = float(link.rssi_a), float(link.rssi_b)
    scheme = cfg.scheme
    # 1 / alpha^2, the LNA input power the AGC normalizes
    agc_power = rssi_a + rssi_b if scheme is Scheme.DIGITAL_CANCELLATION else rssi_b
    if agc_power <= 0:
        raise InvalidParameterError(agc_power, 'LNA input power is zero; the AGC gain is undefined')
    _warn_small_angle(profile, cfg)

    plan = _SamplePlan(
        seed=cfg.seed, rssi_a=rssi_a, rssi_b=rssi_b,
        mu_tx=profile.mu_tx.value, mu_rx=profile.mu_rx.value,
        receiver_power=profile.zeta.value + profile.mixer_excess.value * agc_power,
        quantization_power=profile.sigma_q2.value * agc_power,
        scheme=scheme, exact_exponential=cfg.exact_exponential,
    )
    result = _result(_run(plan, cfg), sinr_fd(profile, link, scheme), rate_fd, cfg.n_samples)

    logger.debug(f'FD {scheme.value}: empirical SINR {result.empirical_sinr.value:.5g}, '
                 f'analytic {result.analytic_sinr.value:.5g}, rel. error {result.rel_error:.3%}')
    return result


def simulate_hd(profile: NoiseProfile, rssi_b: PowerMw | float, cfg: SimConfig) -> SimResult:
    """
    Simulate the half-duplex receiver: no self-interference and the transmit power doubled,
    so the AGC normalizes 2 RSSI_B.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_b: PowerMw | float: Signal-of-interest RSSI at the full-duplex transmit power
    :param cfg: SimConfig: Monte Carlo settings
    :return: SimResult: SNR results; the rate carries the 1/2 time-sharing factor
    """
    rssi_b = as_quantity(PowerMw, rssi_b)
    received = 2.0 * float(rssi_b)
    _warn_small_angle(profile, cfg)

    plan = _SamplePlan(
        seed=cfg.seed, rssi_a=0.0, rssi_b=received,
        mu_tx=profile.mu_tx.value, mu_rx=profile.mu_rx.value,
        receiver_power=profile.zeta.value + profile.mixer_excess.value * received,
        quantization_power=profile.sigma_q2.value * received,
        scheme=Scheme.DIGITAL_CANCELLATION, exact_exponential=cfg.exact_exponential,
    )
    result = _result(_run(plan, cfg), snr_hd(profile, rssi_b), rate_hd, cfg.n_samples)

    logger.debug(f'HD: empirical SNR {result.empirical_sinr.value:.5g}, analytic {result.analytic_sinr.value:.5g}')
    return result


def simulated_rssi_b_min(profile: NoiseProfile, rssi_a: PowerMw | float, cfg: SimConfig,
                         span_db: float = 20.0, xtol_db: float = 1e-3) -> PowerMw:
    """
    Empirical region boundary: the RSSI_B at which the simulated full-duplex and half-duplex rates are equal.

    Every evaluation reuses cfg.seed, so the empirical rate margin is a smooth function of RSSI_B and
    brentq converges. The search spans span_db around the closed-form boundary.

    :param profile: NoiseProfile: Derived noise quantities
    :param rssi_a: PowerMw | float: Self-interference RSSI (> 0)
    :param cfg: SimConfig: Monte Carlo settings
    :param span_db: float: Half-width of the search bracket in dB
    :param xtol_db: float: Root accuracy in dB
    :raise: DegenerateModelError: If the rate margin does not change sign over the bracket
    :return: PowerMw: Simulated RSSI_B,min
    """
    rssi_a = as_quantity(PowerMw, rssi_a)
    if float(rssi_a) <= 0:
        return PowerMw(0.0)

    def margin(rssi_b_dbm: float) -> float:
        link = LinkState(rssi_a=rssi_a, rssi_b=dbm_to_mw(rssi_b_dbm))
        fd = simulate_fd(profile, link, cfg)
        hd = simulate_hd(profile, link.rssi_b, cfg)
        return fd.empirical_rate - hd.empirical_rate

    center = float(mw_to_dbm(exact_rssi_b_min(quadratic_coeffs(profile, rssi_a, cfg.scheme))).value)
    low, high = center - span_db, center + span_db
    f_low, f_high = margin(low), margin(high)
    if np.sign(f_low) == np.sign(f_high):
        raise DegenerateModelError((low, high), f'Simulated rate margin has no sign change in [{low:.2f}, {high:.2f}] dBm')

    root = brentq(margin, low, high, xtol=xtol_db)
    logger.info(f'Simulated boundary at RSSI_A={float(rssi_a.to_dbm()):.2f} dBm: {root:.3f} dBm '
                f'(closed form {center:.3f} dBm)')
    return PowerDbm(root).to_mw()
