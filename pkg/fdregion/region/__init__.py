"""
''fdregion.region''

This module provides the rate gain region of a full-duplex link.
It includes the exact boundary from the region quadratic, the piecewise approximation with its
regime classification, a bisection oracle, and the inverse design solver.
The following functions are present in the main ''fdregion'' namespace:
- solve_region: Exact and approximate boundary of one operating point.
- region_table: Region boundary over a RSSI_A sweep.
- solve_design: Required P_x + C + n for a target boundary.
- design_surface: Required passive suppression over phase noise and transmit power.
"""

from . import region, design
from .region import *
from .design import *
