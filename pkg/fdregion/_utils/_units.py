"""
Unit-safe scalar types.

Log-domain quantities (Decibel, PowerDbm) and linear-domain quantities
(LinearRatio, PowerMw) are distinct types. Absolute powers are referenced to one
milliwatt. Each quantity wraps a float or a numpy array, so every closed form in
the library works on a single operating point or a whole grid at once.
"""
import numbers

import numpy as np

from ._errors import InvalidParameterError, UnitError

__all__ = [
    'Decibel', 'LinearRatio', 'PowerDbm', 'PowerMw',
    'as_quantity', 'db_to_linear', 'linear_to_db', 'dbm_to_mw', 'mw_to_dbm',
]


def _is_number(other) -> bool:
    return isinstance(other, (numbers.Real, np.ndarray)) and not isinstance(other, bool)


class _Quantity:
    """
    Immutable wrapper around a float or numpy array.
    """
    __slots__ = ('_value',)

    # Numpy must defer to the reflected operators below instead of unwrapping the quantity
    __array_ufunc__ = None

    def __init__(self, value):
        if isinstance(value, _Quantity):
            if type(value) is not type(self):
                raise UnitError(value, f"Cannot build {type(self).__name__} from {type(value).__name__} "
                                       f"without an explicit conversion")
            value = value.value
        raw = np.asarray(value, dtype=float)
        object.__setattr__(self, '_value', float(raw) if raw.ndim == 0 else raw)
        self._validate()

    def _validate(self) -> None:
        pass

    @property
    def value(self) -> float | np.ndarray:
        return self._value

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __reduce__(self):
        return type(self), (self._value,)

    def __float__(self) -> float:
        return float(self._value)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._value!r})"

    def __getitem__(self, item):
        return type(self)(np.asarray(self._value)[item])

    def __len__(self) -> int:
        return len(np.atleast_1d(self._value))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return bool(np.array_equal(self._value, other.value))

    def __hash__(self):
        if isinstance(self._value, np.ndarray):
            raise TypeError(f"Array-valued {type(self).__name__} is not hashable")
        return hash((type(self).__name__, self._value))

    def _same(self, other, op: str):
        if type(other) is not type(self):
            self._mismatch(op, other)
        return other.value

    def _mismatch(self, op: str, other):
        raise UnitError(other, f"Unsupported operation: {type(self).__name__} {op} {type(other).__name__}. "
                               f"Convert explicitly between log and linear domains first.")

    def __lt__(self, other):
        return self._value < self._same(other, '<')

    def __le__(self, other):
        return self._value <= self._same(other, '<=')

    def __gt__(self, other):
        return self._value > self._same(other, '>')

    def __ge__(self, other):
        return self._value >= self._same(other, '>=')

    # Additive operations with bare numbers are ambiguous in every domain
    def __radd__(self, other):
        self._mismatch('+', other)

    def __rsub__(self, other):
        self._mismatch('-', other)


class Decibel(_Quantity):
    """
    Dimensionless ratio in decibels.
    """
    __slots__ = ()

    def __add__(self, other):
        if isinstance(other, Decibel):
            return Decibel(self._value + other.value)
        if isinstance(other, PowerDbm):
            return PowerDbm(self._value + other.value)
        self._mismatch('+', other)

    def __sub__(self, other):
        if isinstance(other, Decibel):
            return Decibel(self._value - other.value)
        self._mismatch('-', other)

    def __mul__(self, other):
        if _is_number(other):
            return Decibel(self._value * other)
        self._mismatch('*', other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_number(other):
            return Decibel(self._value / other)
        self._mismatch('/', other)

    def __neg__(self):
        return Decibel(-self._value)

    def to_linear(self) -> 'LinearRatio':
        return db_to_linear(self)


class PowerDbm(_Quantity):
    """
    Absolute power in dBm.
    """
    __slots__ = ()

    def __add__(self, other):
        if isinstance(other, Decibel):
            return PowerDbm(self._value + other.value)
        self._mismatch('+', other)

    def __sub__(self, other):
        if isinstance(other, Decibel):
            return PowerDbm(self._value - other.value)
        if isinstance(other, PowerDbm):
            return Decibel(self._value - other.value)
        self._mismatch('-', other)

    def to_mw(self) -> 'PowerMw':
        return dbm_to_mw(self)


class LinearRatio(_Quantity):
    """
    Dimensionless non-negative linear ratio.
    """
    __slots__ = ()

    def _validate(self) -> None:
        if np.any(np.isnan(self._value)) or np.any(np.asarray(self._value) < 0):
            raise InvalidParameterError(self._value, f"LinearRatio must be >= 0, got {self._value}")

    def __add__(self, other):
        return LinearRatio(self._value + self._same(other, '+'))

    def __sub__(self, other):
        return LinearRatio(self._value - self._same(other, '-'))

    def __mul__(self, other):
        if isinstance(other, LinearRatio):
            return LinearRatio(self._value * other.value)
        if isinstance(other, PowerMw):
            return PowerMw(self._value * other.value)
        if _is_number(other):
            return LinearRatio(self._value * other)
        self._mismatch('*', other)

    def __rmul__(self, other):
        if _is_number(other):
            return LinearRatio(self._value * other)
        self._mismatch('*', other)

    def __truediv__(self, other):
        if isinstance(other, LinearRatio):
            return LinearRatio(self._value / other.value)
        if _is_number(other):
            return LinearRatio(self._value / other)
        self._mismatch('/', other)

    def __rtruediv__(self, other):
        if _is_number(other):
            return LinearRatio(other / self._value)
        self._mismatch('/', other)

    def __pow__(self, exponent):
        if _is_number(exponent):
            return LinearRatio(self._value ** exponent)
        self._mismatch('**', exponent)

    def to_db(self) -> Decibel:
        return linear_to_db(self)


class PowerMw(_Quantity):
    """
    Non-negative absolute power in milliwatts.
    """
    __slots__ = ()

    def _validate(self) -> None:
        if np.any(np.isnan(self._value)) or np.any(np.asarray(self._value) < 0):
            raise InvalidParameterError(self._value, f"PowerMw must be >= 0, got {self._value}")

    def __add__(self, other):
        return PowerMw(self._value + self._same(other, '+'))

    def __sub__(self, other):
        return PowerMw(self._value - self._same(other, '-'))

    def __mul__(self, other):
        if isinstance(other, LinearRatio):
            return PowerMw(self._value * other.value)
        if _is_number(other):
            return PowerMw(self._value * other)
        self._mismatch('*', other)

    def __rmul__(self, other):
        if _is_number(other):
            return PowerMw(self._value * other)
        self._mismatch('*', other)

    def __truediv__(self, other):
        if isinstance(other, PowerMw):
            return LinearRatio(self._value / other.value)
        if isinstance(other, LinearRatio):
            return PowerMw(self._value / other.value)
        if _is_number(other):
            return PowerMw(self._value / other)
        self._mismatch('/', other)

    def to_dbm(self) -> PowerDbm:
        return mw_to_dbm(self)


def as_quantity(cls: type, value) -> _Quantity:
    """
    Coerce a bare number (or array) into ``cls``; pass through an instance of ``cls``.

    :param cls: type: Target quantity type
    :param value: Bare number, array, or quantity
    :raise: UnitError: If value is a quantity of a different type
    :return: Quantity of type ``cls``
    """
    if isinstance(value, cls):
        return value
    if isinstance(value, _Quantity):
        raise UnitError(value, f"Expected {cls.__name__}, got {type(value).__name__}")
    return cls(value)


def db_to_linear(x: Decibel | float) -> LinearRatio:
    """
    Convert decibels to a linear ratio, 10^(x/10).

    :param x: Decibel | float: Value in dB
    :return: LinearRatio: Linear ratio
    """
    x = as_quantity(Decibel, x)
    return LinearRatio(10.0 ** (x.value / 10.0))


def linear_to_db(x: LinearRatio | float) -> Decibel:
    """
    Convert a linear ratio to decibels, 10 log10(x).

    :param x: LinearRatio | float: Linear ratio
    :raise: InvalidParameterError: If any element is zero (no finite dB value exists)
    :return: Decibel: Value in dB
    """
    x = as_quantity(LinearRatio, x)
    if np.any(np.asarray(x.value) <= 0):
        raise InvalidParameterError(x.value, "linear_to_db is undefined for zero")
    return Decibel(10.0 * np.log10(x.value))


def dbm_to_mw(x: PowerDbm | float) -> PowerMw:
    """
    Convert dBm to milliwatts.

    :param x: PowerDbm | float: Power in dBm
    :return: PowerMw: Power in mW
    """
    x = as_quantity(PowerDbm, x)
    return PowerMw(10.0 ** (x.value / 10.0))


def mw_to_dbm(x: PowerMw | float) -> PowerDbm:
    """
    Convert milliwatts to dBm.

    :param x: PowerMw | float: Power in mW
    :raise: InvalidParameterError: If any element is zero
    :return: PowerDbm: Power in dBm
    """
    x = as_quantity(PowerMw, x)
    if np.any(np.asarray(x.value) <= 0):
        raise InvalidParameterError(x.value, "mw_to_dbm is undefined for zero power")
    return PowerDbm(10.0 * np.log10(x.value))
