"""
Command-line front end: ``python -m fdregion <command> [options]``.

Commands emit plot data as CSV or JSON. Exit codes: 0 success, 2 configuration error,
3 infeasible or degenerate model or any other library error, 4 I/O error.
"""
import argparse
import logging
import sys
from typing import Callable

import pandas as pd

from .._utils._errors import (ConfigError, DegenerateModelError, FullDuplexError, InfeasibleDesignError,
                              InvalidParameterError, ModelAssumptionError)
from .._utils._output import FORMATS, write_table
from .._utils._units import mw_to_dbm
from ..model.model import LinkState
from ..region.design import BLUETOOTH_CLASSES, design_surface
from ..region.region import region_table, Scheme
from ..sim.sim import simulate_fd, simulate_hd, simulated_rssi_b_min
from ..sim.sweep import ergodic_rate_sweep, power_sweep
from .run_config import SCHEME_CHOICES, RunConfig, load_run_config, value_grid

__all__ = ['EXIT_OK', 'EXIT_CONFIG', 'EXIT_MODEL', 'EXIT_IO', 'build_parser', 'main',
           'cmd_region', 'cmd_design', 'cmd_rates', 'cmd_simulate', 'cmd_sweep_power',
           'region_rows', 'design_rows', 'rates_rows', 'simulate_rows', 'sweep_power_rows']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MODEL = 3
EXIT_IO = 4


def _dbm_or_nan(value: float) -> float:
    return float(mw_to_dbm(value).value) if value > 0 else float('nan')


def region_rows(config: RunConfig, oracle: bool = False, simulate: bool = False) -> pd.DataFrame:
    """
    Region boundary over the RSSI_A sweep, with optional oracle and simulated boundary columns.
    """
    sweep = config.sweep
    profile = config.noise_profile()
    grid = value_grid(sweep.rssi_a_min_dbm, sweep.rssi_a_max_dbm, sweep.rssi_a_step_db)
    table = region_table(profile, grid, config.schemes(), oracle=oracle)

    if simulate:
        simulated = []
        for a_dbm, scheme in zip(table['rssi_a_dbm'], table['scheme']):
            cfg = config.sim_config(Scheme.parse(scheme))
            simulated.append(_dbm_or_nan(float(simulated_rssi_b_min(profile, 10.0 ** (a_dbm / 10.0), cfg))))
        table['simulated_dbm'] = simulated
    return table


def design_rows(config: RunConfig) -> pd.DataFrame:
    """
    Required passive suppression over phase noise and transmit power, tagged with the Bluetooth class
    whose transmit power matches.
    """
    sweep = config.sweep
    phase_noise = value_grid(sweep.phase_noise_min_db, sweep.phase_noise_max_db, sweep.phase_noise_step_db)
    table = design_surface(config.impairments_model(), config.scenario.target_rssi_b_min_dbm, phase_noise,
                           sweep.design_tx_powers_dbm, config.schemes())

    classes = {power: name for name, power in BLUETOOTH_CLASSES.items()}
    table.insert(2, 'bluetooth_class', [classes.get(p, '') for p in table['tx_power_dbm']])
    return table


def rates_rows(config: RunConfig) -> pd.DataFrame:
    """
    Mean full-duplex and half-duplex rates over the signal-of-interest RSSI sweep.
    """
    sweep = config.sweep
    grid = value_grid(sweep.rssi_b_min_dbm, sweep.rssi_b_max_dbm, sweep.rssi_b_step_db)
    scenario = config.scenario_model()
    tables = []
    for scheme in config.schemes():
        table = ergodic_rate_sweep(scenario, grid, config.sim_config(scheme), mode='rssi_b')
        table.insert(1, 'scheme', scheme.value)
        tables.append(table)
    return pd.concat(tables, ignore_index=True)


def simulate_rows(config: RunConfig) -> pd.DataFrame:
    """
    Empirical against closed-form SINR and SNR over the (RSSI_A, RSSI_B) grid.
    """
    sweep = config.sweep
    profile = config.noise_profile()
    rssi_a_grid = value_grid(sweep.rssi_a_min_dbm, sweep.rssi_a_max_dbm, sweep.rssi_a_step_db)
    rssi_b_grid = value_grid(sweep.rssi_b_min_dbm, sweep.rssi_b_max_dbm, sweep.rssi_b_step_db)

    logger.info(f'Simulating {len(rssi_a_grid) * len(rssi_b_grid)} link states, '
                f'{config.simulation.samples} samples each')

    rows = []
    for scheme in config.schemes():
        cfg = config.sim_config(scheme)
        for a_dbm in rssi_a_grid:
            for b_dbm in rssi_b_grid:
                link = LinkState.from_dbm(a_dbm, b_dbm)
                fd = simulate_fd(profile, link, cfg)
                hd = simulate_hd(profile, link.rssi_b, cfg)
                breakdown = fd.noise_breakdown
                rows.append({
                    'rssi_a_dbm': float(a_dbm),
                    'rssi_b_dbm': float(b_dbm),
                    'scheme': scheme.value,
                    'sinr_empirical': fd.empirical_sinr.value,
                    'sinr_analytic': fd.analytic_sinr.value,
                    'sinr_rel_error': fd.rel_error,
                    'snr_hd_empirical': hd.empirical_sinr.value,
                    'snr_hd_analytic': hd.analytic_sinr.value,
                    'snr_hd_rel_error': hd.rel_error,
                    'rate_fd_bps_hz': fd.empirical_rate,
                    'rate_hd_bps_hz': hd.empirical_rate,
                    'phase_si_mw': breakdown.phase_si.value,
                    'phase_soi_mw': breakdown.phase_soi.value,
                    'receiver_mw': breakdown.receiver.value,
                    'quantization_mw': breakdown.quantization.value,
                })
    return pd.DataFrame(rows)


def sweep_power_rows(config: RunConfig) -> pd.DataFrame:
    """
    Rates over transmit power at the scenario distance (50 m by default).
    """
    sweep = config.sweep
    grid = value_grid(sweep.tx_power_min_dbm, sweep.tx_power_max_dbm, sweep.tx_power_step_db)
    scenario = config.scenario_model()
    tables = []
    for scheme in config.schemes():
        table = power_sweep(scenario, grid, config.sim_config(scheme))
        table.insert(1, 'scheme', scheme.value)
        tables.append(table)
    return pd.concat(tables, ignore_index=True)


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='Run configuration file (INI)')
    common.add_argument('--out', dest='path', help='Output file. Default: stdout')
    common.add_argument('--format', choices=FORMATS, help='Output format')
    common.add_argument('--seed', type=int, help='Unsigned 64-bit random seed')
    common.add_argument('--scheme', choices=SCHEME_CHOICES, help='Cancellation scheme(s)')
    common.add_argument('--threads', type=int, help='Monte Carlo worker threads (1 is the bitwise reference path)')
    common.add_argument('--samples', type=int, help='Monte Carlo samples per point')
    common.add_argument('--phase-noise-db', type=float, dest='phase_noise_db', help='Total phase noise power')
    common.add_argument('--eta-db', type=float, dest='eta_db', help='Override the derived eta')
    common.add_argument('--zeta-dbm', type=float, dest='zeta_dbm', help='Override the derived zeta')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG')
    return common


def _range_options(parser: argparse.ArgumentParser, prefix: str, unit: str) -> None:
    flag = prefix.replace('_', '-')
    parser.add_argument(f'--{flag}-min-{unit}', type=float, dest=f'{prefix}_min_{unit}')
    parser.add_argument(f'--{flag}-max-{unit}', type=float, dest=f'{prefix}_max_{unit}')
    parser.add_argument(f'--{flag}-step-db', type=float, dest=f'{prefix}_step_db')


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog='fdregion', description='Full-duplex rate gain region toolkit')
    commands = parser.add_subparsers(dest='command', required=True)

    region = commands.add_parser('region', parents=[common], help='Rate gain region over RSSI_A')
    _range_options(region, 'rssi_a', 'dbm')
    region.add_argument('--oracle', action='store_true', help='Add the bisection oracle column')
    region.add_argument('--simulate', action='store_true', help='Add the simulated boundary column')
    region.add_argument('--exact-exponential', action=argparse.BooleanOptionalAction, dest='exact_exponential')

    design = commands.add_parser('design', parents=[common], help='Passive suppression requirements')
    design.add_argument('--target-dbm', type=float, dest='target_rssi_b_min_dbm', help='Target RSSI_B,min')
    _range_options(design, 'phase_noise', 'db')
    design.add_argument('--tx-power-dbm', type=float, action='append', dest='design_tx_powers_dbm',
                        help='Transmit power (repeatable). Default: the Bluetooth class powers')

    rates = commands.add_parser('rates', parents=[common], help='Rates over RSSI_B')
    _range_options(rates, 'rssi_b', 'dbm')
    rates.add_argument('--tx-power-dbm', type=float, dest='tx_power_dbm')
    rates.add_argument('--suppression-db', type=float, dest='passive_suppression_db')
    rates.add_argument('--fading', action=argparse.BooleanOptionalAction, dest='fading')

    simulate = commands.add_parser('simulate', parents=[common], help='Monte Carlo SINR validation')
    _range_options(simulate, 'rssi_a', 'dbm')
    _range_options(simulate, 'rssi_b', 'dbm')
    simulate.add_argument('--exact-exponential', action=argparse.BooleanOptionalAction, dest='exact_exponential')

    sweep_power = commands.add_parser('sweep-power', parents=[common], help='Rates over transmit power')
    _range_options(sweep_power, 'tx_power', 'dbm')
    sweep_power.add_argument('--distance-m', type=float, dest='distance_m')
    sweep_power.add_argument('--suppression-db', type=float, dest='passive_suppression_db')
    sweep_power.add_argument('--fading', action=argparse.BooleanOptionalAction, dest='fading')

    return parser


def _emit(command: str, config: RunConfig, build: Callable[[], pd.DataFrame]) -> int:
    """
    Build a result table, write it, and map failures to exit codes.
    """
    try:
        table = build()
        meta = config.to_meta()
        meta['command'] = command
        write_table(table, config.output.path, config.output.format, meta)
    except (ConfigError, InvalidParameterError) as e:
        logger.error(e.message)
        return EXIT_CONFIG
    except (ModelAssumptionError, InfeasibleDesignError, DegenerateModelError) as e:
        logger.error(e.message)
        return EXIT_MODEL
    except FullDuplexError as e:
        logger.error(f'{type(e).__name__}: {e.message}')
        return EXIT_MODEL
    except OSError as e:
        logger.error(f'I/O error: {e}')
        return EXIT_IO
    return EXIT_OK


def cmd_region(config: RunConfig, oracle: bool = False, simulate: bool = False) -> int:
    return _emit('region', config, lambda: region_rows(config, oracle=oracle, simulate=simulate))


def cmd_design(config: RunConfig) -> int:
    return _emit('design', config, lambda: design_rows(config))


def cmd_rates(config: RunConfig) -> int:
    return _emit('rates', config, lambda: rates_rows(config))


def cmd_simulate(config: RunConfig) -> int:
    return _emit('simulate', config, lambda: simulate_rows(config))


def cmd_sweep_power(config: RunConfig) -> int:
    return _emit('sweep-power', config, lambda: sweep_power_rows(config))


_NOT_CONFIG_KEYS = {'command', 'config', 'verbose', 'oracle', 'simulate'}


def main(argv: list[str] = None) -> int:
    args = build_parser().parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format='%(asctime)s %(levelname)s %(name)s: %(message)s', stream=sys.stderr)

    overrides = {k: v for k, v in vars(args).items() if k not in _NOT_CONFIG_KEYS}
    try:
        config = load_run_config(args.config).with_overrides(**overrides).validate()
    except ConfigError as e:
        logger.error(e.message)
        return EXIT_CONFIG
    except OSError as e:
        logger.error(f'Cannot read configuration: {e}')
        return EXIT_IO

    match args.command:
        case 'region':
            return cmd_region(config, oracle=args.oracle, simulate=args.simulate)
        case 'design':
            return cmd_design(config)
        case 'rates':
            return cmd_rates(config)
        case 'simulate':
            return cmd_simulate(config)
        case 'sweep-power':
            return cmd_sweep_power(config)
