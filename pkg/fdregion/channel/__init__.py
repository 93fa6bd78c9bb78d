"""
''fdregion.channel''

This module turns physical scenarios into instantaneous link states.
The following functions are present in the main ''fdregion'' namespace:
- path_loss_db: Log-distance path loss with optional shadowing.
- sample_rician: Unit mean-square Rician gains.
- rssi_pair: Self-interference and signal-of-interest RSSI of a scenario.
"""

from . import channel
from .channel import *
