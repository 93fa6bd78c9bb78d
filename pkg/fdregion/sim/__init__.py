"""
''fdregion.sim''

This module validates the closed forms by simulation.
It includes the sample-level full-duplex and half-duplex receivers and the ergodic rate sweeps.
The following functions are present in the main ''fdregion'' namespace:
- simulate_fd, simulate_hd: Empirical SINR and SNR with a per-term noise breakdown.
- simulated_rssi_b_min: Empirical region boundary.
- ergodic_rate_sweep, power_sweep: Mean rates over fading realizations.
"""

from . import sim, sweep
from .sim import *
from .sweep import *
