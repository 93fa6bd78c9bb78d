"""
''fdregion.model''

This module provides the transceiver signal model.
It includes the impairment description, the derived noise profile, the instantaneous link
state, and the SINR, SNR and rate closed forms for both cancellation schemes and half-duplex.
The following functions are present in the main ''fdregion'' namespace:
- derive_noise_profile: Derive eta and zeta from the hardware impairments.
- sinr_fd_dc, sinr_fd_ac, snr_hd: Link quality closed forms.
- rate_fd, rate_hd: Achievable rates.
"""

from . import model
from .model import *
