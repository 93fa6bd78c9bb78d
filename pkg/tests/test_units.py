import pickle

import numpy as np
import pytest

from fdregion import (Decibel, InvalidParameterError, LinearRatio, PowerDbm, PowerMw, UnitError, db_to_linear,
                      dbm_to_mw, linear_to_db, mw_to_dbm)
from fdregion._utils._units import as_quantity


def test_conversions():
    assert db_to_linear(3.0).value == pytest.approx(1.99526, rel=1e-5)
    assert linear_to_db(100.0).value == pytest.approx(20.0)
    assert dbm_to_mw(-30.0).value == pytest.approx(1e-3)
    assert mw_to_dbm(1e-11).value == pytest.approx(-110.0)


def test_conversion_methods():
    assert isinstance(Decibel(20.0).to_linear(), LinearRatio)
    assert Decibel(20.0).to_linear().value == pytest.approx(100.0)
    assert isinstance(PowerDbm(-30.0).to_mw(), PowerMw)
    assert PowerDbm(-30.0).to_mw().value == pytest.approx(1e-3)
    assert isinstance(LinearRatio(1e-4).to_db(), Decibel)
    assert LinearRatio(1e-4).to_db().value == pytest.approx(-40.0)
    assert PowerMw(1e-11).to_dbm().value == pytest.approx(-110.0)


def test_conversions_reject_zero():
    with pytest.raises(InvalidParameterError):
        linear_to_db(0.0)
    with pytest.raises(InvalidParameterError):
        mw_to_dbm(PowerMw(0.0))


def test_log_domain_arithmetic():
    assert Decibel(3.0) + Decibel(4.0) == Decibel(7.0)
    assert PowerDbm(10.0) + Decibel(-40.0) == PowerDbm(-30.0)
    assert PowerDbm(10.0) - Decibel(40.0) == PowerDbm(-30.0)
    assert PowerDbm(-60.0) - PowerDbm(-80.0) == Decibel(20.0)
    assert Decibel(10.0) * 2 == Decibel(20.0)


def test_linear_domain_arithmetic():
    assert LinearRatio(2.0) * LinearRatio(3.0) == LinearRatio(6.0)
    assert LinearRatio(2.0) * PowerMw(3.0) == PowerMw(6.0)
    assert PowerMw(1.0) + PowerMw(2.0) == PowerMw(3.0)
    assert PowerMw(6.0) / PowerMw(3.0) == LinearRatio(2.0)
    assert PowerMw(6.0) / LinearRatio(3.0) == PowerMw(2.0)
    assert 2 * PowerMw(3.0) == PowerMw(6.0)


@pytest.mark.parametrize('operation', [
    lambda: PowerDbm(0.0) + PowerDbm(0.0),
    lambda: Decibel(3.0) + 1.0,
    lambda: 1.0 + Decibel(3.0),
    lambda: PowerMw(1.0) + LinearRatio(1.0),
    lambda: PowerMw(1.0) * PowerMw(1.0),
    lambda: Decibel(1.0) * LinearRatio(2.0),
    lambda: PowerDbm(0.0) < Decibel(0.0),
])
def test_mixed_domains_raise(operation):
    with pytest.raises(UnitError):
        operation()


def test_as_quantity():
    assert as_quantity(PowerMw, 2.0) == PowerMw(2.0)
    with pytest.raises(UnitError):
        as_quantity(PowerMw, PowerDbm(0.0))
    with pytest.raises(UnitError):
        LinearRatio(Decibel(3.0))


def test_linear_quantities_are_non_negative():
    with pytest.raises(InvalidParameterError):
        LinearRatio(-1.0)
    with pytest.raises(InvalidParameterError):
        PowerMw(np.array([1.0, -1e-3]))
    with pytest.raises(InvalidParameterError):
        PowerMw(float('nan'))


def test_quantities_are_immutable_and_picklable():
    power = PowerMw(1.5)
    with pytest.raises(AttributeError):
        power.x = 1.0
    assert pickle.loads(pickle.dumps(power)) == power
    assert hash(power) == hash(PowerMw(1.5))


def test_array_valued_quantities():
    powers = dbm_to_mw(np.array([-30.0, -20.0, -10.0]))
    assert isinstance(powers.value, np.ndarray)
    assert len(powers) == 3
    np.testing.assert_allclose(powers.value, [1e-3, 1e-2, 1e-1])
    assert isinstance(powers[1], PowerMw)
    assert float(powers[1]) == pytest.approx(1e-2)
    np.testing.assert_allclose(mw_to_dbm(powers).value, [-30.0, -20.0, -10.0])
