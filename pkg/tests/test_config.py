import pytest

from fdregion import (InvalidParameterError, get_chunk_size, get_small_angle_limit, get_temperature, get_threads,
                      reset_config, set_chunk_size, set_small_angle_limit, set_temperature, set_threads)
from fdregion.config import Config


def test_defaults():
    assert get_temperature() == 290.0
    assert get_threads() == 1
    assert get_chunk_size() == 65536
    assert get_small_angle_limit() == 0.01


def test_singleton():
    assert Config() is Config()


def test_setters_and_reset():
    set_temperature(300.0)
    set_threads(4)
    set_chunk_size(1000)
    set_small_angle_limit(0.05)
    assert (get_temperature(), get_threads(), get_chunk_size(), get_small_angle_limit()) == (300.0, 4, 1000, 0.05)

    reset_config()
    assert get_temperature() == 290.0
    assert get_threads() == 1


@pytest.mark.parametrize('setter, value', [
    (set_temperature, 0.0),
    (set_threads, 0),
    (set_threads, 1.5),
    (set_chunk_size, -1),
    (set_small_angle_limit, 0.0),
    (set_small_angle_limit, 1.5),
])
def test_setters_validate(setter, value):
    with pytest.raises(InvalidParameterError):
        setter(value)
