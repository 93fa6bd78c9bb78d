from ._utils._errors import InvalidParameterError


class Config:
    """
    Configuration class for the library.
    This class is a singleton and should be accessed through the provided functions.
    """
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Config, cls).__new__(cls)
            cls._instance.reset()
        return cls._instance

    def reset(self) -> None:
        self.temperature_k = 290.0
        self.threads = 1
        self.chunk_size = 65536
        self.small_angle_limit = 0.01

    def __repr__(self):
        return (f"Config(temperature_k={self.temperature_k}, threads={self.threads}, "
                f"chunk_size={self.chunk_size}, small_angle_limit={self.small_angle_limit})")


# Create a singleton instance
config = Config()


def get_temperature() -> float:
    """
    Get the default noise temperature used by thermal_noise_power.
    :return: float: Temperature in kelvin
    """
    return config.temperature_k


def set_temperature(temperature_k: float) -> None:
    """
    Set the default noise temperature.
    :param temperature_k: float: Temperature in kelvin
    :raises: InvalidParameterError if the temperature is not positive
    """
    if temperature_k <= 0:
        raise InvalidParameterError(temperature_k, 'Temperature must be > 0 K')
    config.temperature_k = float(temperature_k)


def get_threads() -> int:
    """
    Get the default number of Monte Carlo worker threads.
    :return: int: Worker count
    """
    return config.threads


def set_threads(threads: int) -> None:
    """
    Set the default number of Monte Carlo worker threads. 1 selects the single-threaded reference path.
    :param threads: int: Worker count
    :raises: InvalidParameterError if threads < 1
    """
    if int(threads) != threads or threads < 1:
        raise InvalidParameterError(threads, 'Thread count must be an integer >= 1')
    config.threads = int(threads)


def get_chunk_size() -> int:
    """
    Get the number of samples drawn per Monte Carlo chunk.
    :return: int: Samples per chunk
    """
    return config.chunk_size


def set_chunk_size(chunk_size: int) -> None:
    """
    Set the number of samples drawn per Monte Carlo chunk.
    Results depend on the chunk size (it selects the random streams) but never on the thread count.
    :param chunk_size: int: Samples per chunk
    :raises: InvalidParameterError if chunk_size < 1
    """
    if int(chunk_size) != chunk_size or chunk_size < 1:
        raise InvalidParameterError(chunk_size, 'Chunk size must be an integer >= 1')
    config.chunk_size = int(chunk_size)


def get_small_angle_limit() -> float:
    """
    Get the total phase noise power above which the small-angle model emits a warning.
    :return: float: Linear phase noise power
    """
    return config.small_angle_limit


def set_small_angle_limit(limit: float) -> None:
    """
    Set the total phase noise power above which the small-angle model emits a warning.
    :param limit: float: Linear phase noise power in (0, 1]
    :raises: InvalidParameterError if the limit is outside (0, 1]
    """
    if not 0 < limit <= 1:
        raise InvalidParameterError(limit, 'Small-angle limit must lie in (0, 1]')
    config.small_angle_limit = float(limit)


def reset_config() -> None:
    """
    Restore every library default.
    """
    config.reset()
