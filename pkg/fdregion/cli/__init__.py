"""
''fdregion.cli''

This module provides the command-line front end.
It includes the INI run configuration and the region, design, rates, simulate and
sweep-power commands.
"""

from . import cli, run_config
from .cli import *
from .run_config import *
