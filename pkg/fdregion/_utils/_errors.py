__all__ = [
    'FullDuplexError', 'InvalidParameterError', 'UnitError', 'ModelAssumptionError',
    'InfeasibleDesignError', 'DegenerateModelError', 'ConfigError',
]


class FullDuplexError(Exception):
    """
    Base exception for the library.
    Stores the offending value and builds a default message when none is given.
    """

    default_message = "Full-duplex model error"

    def __init__(self, value=None, message: str = None):
        self.value = value
        if message:  # If a custom message is provided, use it
            self.message = message
        else:  # Otherwise, generate a default message
            if value is None:
                self.message = self.default_message
            else:
                self.message = f"{self.default_message}: {value!r}"
        super().__init__(self.message)


class InvalidParameterError(FullDuplexError, ValueError):
    """
    Raised when a numeric precondition of an operation is violated.
    """
    default_message = "Invalid parameter value"


class UnitError(FullDuplexError, TypeError):
    """
    Raised when log-domain and linear-domain quantities are mixed, or a quantity
    of the wrong unit is passed.
    """
    default_message = "Incompatible units"


class ModelAssumptionError(FullDuplexError):
    """
    Raised when the piecewise approximation is asked to work outside the
    eta << 1 assumption that orders its regime thresholds.
    """
    default_message = "Model assumption eta << 1 violated"


class InfeasibleDesignError(FullDuplexError):
    """
    Raised when no regime branch yields a self-consistent design solution.
    """
    default_message = "Design target is infeasible in every regime"


class DegenerateModelError(FullDuplexError):
    """
    Raised when a root bracket shows no sign change.
    """
    default_message = "No sign change in bracket"


class ConfigError(FullDuplexError):
    """
    Raised for run configuration problems (unknown keys, bad values, bad ranges).
    """
    default_message = "Invalid run configuration"
