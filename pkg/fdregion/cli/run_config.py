"""
Run configuration of the command-line front end.

A run configuration is an INI file with the sections [scenario], [impairments], [sweep],
[simulation] and [output]. Every key is optional; missing keys take the defaults below, which
mirror a 2.4 GHz ISM-band chipset. Unknown sections or keys are errors. Command-line flags
override file values.
"""
import configparser
import dataclasses
import logging
from dataclasses import dataclass, field, fields

import numpy as np

from .._utils._errors import ConfigError, FullDuplexError
from .._utils._output import FORMATS
from ..channel.channel import FadingParams, PathLossParams, Scenario
from ..model.model import MAX_ADC_BITS, NoiseProfile, RadioImpairments, derive_noise_profile
from ..region.region import Scheme
from ..sim.sim import SimConfig

__all__ = [
    'ScenarioSettings', 'ImpairmentSettings', 'SweepSettings', 'SimulationSettings', 'OutputSettings',
    'RunConfig', 'SCHEME_CHOICES', 'load_run_config', 'value_grid',
]

logger = logging.getLogger(__name__)

SCHEME_CHOICES = ('dc', 'ac', 'both')


@dataclass(frozen=True)
class ScenarioSettings:
    tx_power_dbm: float = 0.0
    passive_suppression_db: float = 40.0
    distance_m: float = 50.0
    carrier_freq_hz: float = 2.4e9
    path_loss_exponent: float = 2.5
    shadow_sigma_db: float = 3.5
    soi_k_factor_db: float = 0.0
    si_k_factor_db: float = 35.0
    target_rssi_b_min_dbm: float = -80.0


@dataclass(frozen=True)
class ImpairmentSettings:
    phase_noise_db: float = -60.0
    lna_nf_db: float = 4.0
    mixer_nf_db: float = 10.0
    adc_bits: int = 12
    bandwidth_hz: float = 1e6
    temperature_k: float = 290.0
    # Direct overrides of the derived eta and zeta
    eta_db: float | None = None
    zeta_dbm: float | None = None


@dataclass(frozen=True)
class SweepSettings:
    rssi_a_min_dbm: float = -100.0
    rssi_a_max_dbm: float = 0.0
    rssi_a_step_db: float = 1.0
    rssi_b_min_dbm: float = -90.0
    rssi_b_max_dbm: float = -60.0
    rssi_b_step_db: float = 5.0
    tx_power_min_dbm: float = 0.0
    tx_power_max_dbm: float = 30.0
    tx_power_step_db: float = 1.0
    phase_noise_min_db: float = -100.0
    phase_noise_max_db: float = -40.0
    phase_noise_step_db: float = 5.0
    design_tx_powers_dbm: tuple = (20.0, 4.0, 0.0)


@dataclass(frozen=True)
class SimulationSettings:
    samples: int = 100_000
    seed: int = 0
    threads: int = 1
    chunk_size: int = 65536
    scheme: str = 'both'
    exact_exponential: bool = False
    fading: bool = True


@dataclass(frozen=True)
class OutputSettings:
    path: str | None = None
    format: str = 'csv'


_SECTIONS = {
    'scenario': ScenarioSettings,
    'impairments': ImpairmentSettings,
    'sweep': SweepSettings,
    'simulation': SimulationSettings,
    'output': OutputSettings,
}


def _parse_value(section: str, key: str, text: str, default):
    """
    Convert a raw INI value to the type of the key's default.
    """
    text = text.strip()
    try:
        match default:
            case bool():
                lowered = text.lower()
                if lowered not in configparser.ConfigParser.BOOLEAN_STATES:
                    raise ValueError(text)
                return configparser.ConfigParser.BOOLEAN_STATES[lowered]
            case int():
                return int(text)
            case float():
                return float(text)
            case tuple():
                return tuple(float(x) for x in text.replace(';', ',').split(',') if x.strip())
            case None:
                if not text:
                    return None
                return text if section == 'output' else float(text)
            case _:
                return text
    except ValueError as e:
        raise ConfigError(text, f'[{section}] {key}: cannot parse {text!r} ({e})') from e


def value_grid(low: float, high: float, step: float) -> np.ndarray:
    """
    Inclusive grid low, low + step, ..., high.

    :raise: ConfigError: If step <= 0 or low > high
    """
    if step <= 0:
        raise ConfigError(step, f'Sweep step must be > 0, got {step}')
    if low > high:
        raise ConfigError((low, high), f'Sweep minimum {low} exceeds maximum {high}')
    count = int(np.floor((high - low) / step + 1e-9)) + 1
    return np.round(low + step * np.arange(count), 10)


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioSettings = field(default_factory=ScenarioSettings)
    impairments: ImpairmentSettings = field(default_factory=ImpairmentSettings)
    sweep: SweepSettings = field(default_factory=SweepSettings)
    simulation: SimulationSettings = field(default_factory=SimulationSettings)
    output: OutputSettings = field(default_factory=OutputSettings)

    @classmethod
    def section_of(cls, key: str) -> str | None:
        for name, settings in _SECTIONS.items():
            if key in {f.name for f in fields(settings)}:
                return name
        return None

    def with_overrides(self, **overrides) -> 'RunConfig':
        """
        Return a copy with the given keys replaced. None values are ignored.

        :raise: ConfigError: If a key is unknown
        """
        changes = {}
        for key, value in overrides.items():
            if value is None:
                continue
            section = self.section_of(key)
            if section is None:
                raise ConfigError(key, f'Unknown configuration key {key}')
            if isinstance(getattr(self, section).__dataclass_fields__[key].default, tuple):
                value = tuple(float(x) for x in value)
            changes.setdefault(section, {})[key] = value
        replaced = {section: dataclasses.replace(getattr(self, section), **values)
                    for section, values in changes.items()}
        return dataclasses.replace(self, **replaced)

    def validate(self) -> 'RunConfig':
        """
        Check ranges and build every model object once, so that errors surface before any computation.

        :raise: ConfigError: On the first invalid value
        :return: RunConfig: self
        """
        sim, out, imp, sweep = self.simulation, self.output, self.impairments, self.sweep
        if sim.scheme not in SCHEME_CHOICES:
            raise ConfigError(sim.scheme, f"scheme must be one of {', '.join(SCHEME_CHOICES)}")
        if out.format not in FORMATS:
            raise ConfigError(out.format, f"format must be one of {', '.join(FORMATS)}")
        if sim.samples < 1 or sim.threads < 1 or sim.chunk_size < 1:
            raise ConfigError((sim.samples, sim.threads, sim.chunk_size), 'samples, threads and chunk_size must be >= 1')
        if not 0 <= sim.seed < 2 ** 64:
            raise ConfigError(sim.seed, 'seed must be an unsigned 64-bit integer')
        if not 1 <= imp.adc_bits <= MAX_ADC_BITS:
            raise ConfigError(imp.adc_bits, f'adc_bits must lie in [1, {MAX_ADC_BITS}]')
        for prefix in ('rssi_a', 'rssi_b', 'tx_power', 'phase_noise'):
            unit = 'db' if prefix == 'phase_noise' else 'dbm'
            value_grid(getattr(sweep, f'{prefix}_min_{unit}'), getattr(sweep, f'{prefix}_max_{unit}'),
                       getattr(sweep, f'{prefix}_step_db'))
        if not sweep.design_tx_powers_dbm:
            raise ConfigError(sweep.design_tx_powers_dbm, 'design_tx_powers_dbm must not be empty')

        try:
            self.scenario_model()
            self.noise_profile()
        except FullDuplexError as e:
            raise ConfigError(e.value, f'Invalid model parameters: {e.message}') from e
        return self

    def impairments_model(self) -> RadioImpairments:
        imp = self.impairments
        return RadioImpairments.from_total_phase_noise_db(imp.phase_noise_db, lna_nf_db=imp.lna_nf_db,
                                                          mixer_nf_db=imp.mixer_nf_db, adc_bits=imp.adc_bits,
                                                          bandwidth_hz=imp.bandwidth_hz,
                                                          temperature_k=imp.temperature_k)

    def noise_profile(self) -> NoiseProfile:
        """
        Noise profile of the impairments, with eta and zeta replaced when the overrides are set.
        """
        derived = derive_noise_profile(self.impairments_model())
        imp = self.impairments
        if imp.eta_db is None and imp.zeta_dbm is None:
            return derived

        eta = 10.0 ** (imp.eta_db / 10.0) if imp.eta_db is not None else derived.eta.value
        zeta = 10.0 ** (imp.zeta_dbm / 10.0) if imp.zeta_dbm is not None else derived.zeta.value
        mu = derived.mu.value
        if mu > eta:
            raise ConfigError(imp.eta_db, f'eta_db ({imp.eta_db}) is below phase_noise_db ({imp.phase_noise_db})')
        return NoiseProfile.from_values(eta, zeta, mu=mu)

    def scenario_model(self) -> Scenario:
        s = self.scenario
        return Scenario(
            tx_power_dbm=s.tx_power_dbm,
            passive_suppression_db=s.passive_suppression_db,
            distance_m=s.distance_m,
            path_loss=PathLossParams(carrier_freq_hz=s.carrier_freq_hz, exponent=s.path_loss_exponent,
                                     shadow_sigma_db=s.shadow_sigma_db),
            soi_fading=FadingParams(s.soi_k_factor_db),
            si_fading=FadingParams(s.si_k_factor_db),
            impairments=self.impairments_model(),
        )

    def schemes(self) -> list[Scheme]:
        if self.simulation.scheme == 'both':
            return [Scheme.DIGITAL_CANCELLATION, Scheme.ANALOG_CANCELLATION]
        return [Scheme.parse(self.simulation.scheme)]

    def sim_config(self, scheme: Scheme) -> SimConfig:
        sim = self.simulation
        return SimConfig(n_samples=sim.samples, seed=sim.seed, scheme=scheme, exact_exponential=sim.exact_exponential,
                         fading_enabled=sim.fading, threads=sim.threads, chunk_size=sim.chunk_size)

    def to_meta(self) -> dict:
        """
        Fully resolved configuration for the JSON "meta" object.
        """
        meta = dataclasses.asdict(self)
        meta['sweep']['design_tx_powers_dbm'] = list(self.sweep.design_tx_powers_dbm)
        return meta


def load_run_config(path: str = None) -> RunConfig:
    """
    Read a run configuration file. No path gives the defaults.

    :param path: str: INI file path
    :raise: ConfigError: On unknown sections or keys and unparsable values
    :raise: OSError: If the file cannot be read
    :return: RunConfig: Unvalidated configuration
    """
    if path is None:
        return RunConfig()

    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    with open(path, encoding='utf-8') as f:
        try:
            parser.read_file(f)
        except configparser.Error as e:
            raise ConfigError(path, f'Cannot parse {path}: {e}') from e

    logger.info(f'Reading run configuration from {path}')

    sections = {}
    for section in parser.sections():
        if section not in _SECTIONS:
            raise ConfigError(section, f"Unknown section [{section}]. Known sections are {', '.join(_SECTIONS)}")
        settings = _SECTIONS[section]
        known = {f.name: f.default for f in fields(settings)}
        values = {}
        for key, text in parser.items(section):
            if key not in known:
                raise ConfigError(key, f'Unknown key {key} in section [{section}]')
            values[key] = _parse_value(section, key, text, known[key])
        sections[section] = settings(**values)

    return RunConfig(**sections)
