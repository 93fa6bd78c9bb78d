from .config import (
    get_temperature, set_temperature, get_threads, set_threads,
    get_chunk_size, set_chunk_size, get_small_angle_limit, set_small_angle_limit, reset_config
)
from ._utils._errors import (
    FullDuplexError, InvalidParameterError, UnitError, ModelAssumptionError,
    InfeasibleDesignError, DegenerateModelError, ConfigError
)
from ._utils._units import (
    Decibel, LinearRatio, PowerDbm, PowerMw,
    db_to_linear, linear_to_db, dbm_to_mw, mw_to_dbm
)
from .model import (
    RadioImpairments, NoiseProfile, LinkState,
    thermal_noise_power, quantization_noise_variance, derive_noise_profile,
    lna_gain_dc, lna_gain_ac, sinr_fd_dc, sinr_fd_ac, snr_hd, rate_fd, rate_hd, is_phase_noise_dominated
)
from .region import (
    Scheme, RegimeKind, Regime, QuadraticCoeffs, RegionResult, DesignSolution, BLUETOOTH_CLASSES,
    sinr_fd, quadratic_coeffs, exact_rssi_b_min, classify_regime, approx_rssi_b_min, oracle_rssi_b_min,
    solve_region, region_table, solve_design, design_constraint, required_suppression_db,
    max_tx_power_dbm, required_noise_db, analog_advantage_db, design_surface
)
from .channel import (
    PathLossParams, FadingParams, Scenario, path_loss_db, sample_rician, rssi_pair
)
from .sim import (
    SimConfig, NoiseBreakdown, SimResult, simulate_fd, simulate_hd, simulated_rssi_b_min,
    ergodic_rate_sweep, power_sweep
)
