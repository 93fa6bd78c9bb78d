"""
''fdregion._utils''

This module provides the plumbing shared by every other module.
It includes the exception hierarchy, numeric validation decorators, the unit-safe
quantity types, and the CSV/JSON table writer.
The following names are present in the main ''fdregion'' namespace:
- the exception classes
- Decibel, LinearRatio, PowerDbm, PowerMw and the conversion functions
"""

from . import _checks
from . import _errors
from . import _output
from . import _units
from ._checks import *
from ._errors import *
from ._output import *
from ._units import *
