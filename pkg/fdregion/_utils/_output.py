import json
import logging
import math
import sys

import numpy as np
import pandas as pd

from ._errors import ConfigError

__all__ = ['FORMATS', 'render_table', 'write_table']

logger = logging.getLogger(__name__)

FORMATS = ('csv', 'json')


def _jsonable(value):
    """
    Convert numpy scalars and arrays to plain Python objects for json.dumps.
    NaN and infinities become None, so the output is strict JSON.
    """
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def render_table(table: pd.DataFrame, fmt: str = 'csv', meta: dict = None) -> str:
    """
    Render a result table as CSV or JSON text.

    :param table: pd.DataFrame: Result rows. Column names carry their unit suffix.
    :param fmt: str: 'csv' or 'json'
    :param meta: dict: Resolved configuration and seed, written to the JSON "meta" object
    :raise: ConfigError: If the format is not supported
    :return: str: Rendered text
    """
    match fmt:
        case 'csv':
            # Fixed float format: identical runs give identical bytes
            return table.to_csv(index=False, lineterminator='\n', float_format='%.12g')
        case 'json':
            rows = [_jsonable(row) for row in table.to_dict(orient='records')]
            document = {'meta': _jsonable(meta or {}), 'rows': rows}
            return json.dumps(document, indent=2, allow_nan=False) + '\n'
        case _:
            raise ConfigError(fmt, f"{fmt} is not a valid output format. Supported formats are {', '.join(FORMATS)}")


def write_table(table: pd.DataFrame, path: str = None, fmt: str = 'csv', meta: dict = None) -> None:
    """
    Write a result table to a file, or to stdout when no path is given.

    :param table: pd.DataFrame: Result rows
    :param path: str: Output file path. None writes to stdout
    :param fmt: str: 'csv' or 'json'
    :param meta: dict: Metadata for the JSON format
    :raise: OSError: If the file cannot be written
    """
    text = render_table(table, fmt, meta)

    if path is None:
        sys.stdout.write(text)
        return

    logger.info(f'Saving {len(table)} rows to {path}...')

    with open(path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)

    logger.info('Rows saved')
