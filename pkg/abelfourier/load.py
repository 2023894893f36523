"""
This module contains the methods used to load and parse the fixture
files given to the suites.

Three JSON layouts are recognized:

- function on a group: ``{"orders": [4, 2, 3], "values": [[re, im], ...]}``
  or the bare list of ``[re, im]`` values in canonical index order
- linear map: list of rows of ``[re, im]`` pairs
- point mass measure: ``{"dim": d, "atoms": [{"w": [re, im], "x": [...]}, ...]}``
"""

import json
import logging

import numpy as np

from abelfourier import groups
from abelfourier.config import file_exists_or_die
from abelfourier.errors import AbelFourierError
from abelfourier.functions import GroupFunction
from abelfourier.interpolation import LinearMap
from abelfourier.measures import PointMassMeasure


logger = logging.getLogger(__name__)


class Fixture:
    """
    Parsed fixture.

    Args:
        kind (str): ``function``, ``matrix`` or ``measure``
        value: :class:`~abelfourier.interpolation.LinearMap`,
            :class:`~abelfourier.measures.PointMassMeasure` or, for functions,
            the array of values
        orders (tuple): group of a function fixture, None when not given

    """

    def __init__(self, kind, value, orders=None):
        self.kind = kind
        self.value = value
        self.orders = orders

    def function_on(self, g):
        """
        The function fixture as a function on ``g``.

        Returns:
            :class:`~abelfourier.functions.GroupFunction`: None when this is not
            a function fixture or it does not fit ``g``

        """
        if self.kind != 'function':
            return None
        if self.orders is not None and self.orders != g.orders:
            return None
        if len(self.value) != g.n:
            return None
        return GroupFunction(g, self.value)

    def __repr__(self):
        return 'Fixture({})'.format(self.kind)


def _values(data):
    try:
        return np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    except (TypeError, ValueError) as e:
        raise AbelFourierError('Function values must be [re, im] pairs: {}'.format(e))


def _is_matrix(data):
    return len(data) > 0 and isinstance(data[0], list) and len(data[0]) > 0 and isinstance(data[0][0], list)


def parse_fixture(data):
    """
    Build a :class:`Fixture` from decoded JSON.

    Raises:
        AbelFourierError: unknown layout or malformed content

    """
    if isinstance(data, dict) and 'atoms' in data:
        return Fixture('measure', PointMassMeasure.from_json(data))
    if isinstance(data, dict) and 'values' in data:
        values = _values(data['values'])
        orders = None
        if 'orders' in data:
            g = groups.GroupSpec(data['orders'])
            # validates length and finiteness
            GroupFunction(g, values)
            orders = g.orders
        return Fixture('function', values, orders)
    if isinstance(data, list) and _is_matrix(data):
        return Fixture('matrix', LinearMap.from_json(data))
    if isinstance(data, list):
        values = _values(data)
        if len(values) == 0:
            raise AbelFourierError('Empty function fixture')
        return Fixture('function', values)
    raise AbelFourierError('Unknown fixture layout')


def load_fixture(file):
    """
    Read and parse a fixture file.

    Args:
        file: JSON file path

    Returns:
        :class:`Fixture`

    """
    file = file_exists_or_die(file)
    with open(file, 'rt') as fd:
        try:
            data = json.load(fd)
        except ValueError as e:
            raise AbelFourierError('{} is not valid JSON: {}'.format(file, e))
    fixture = parse_fixture(data)
    logger.info('Loaded %s fixture from %s', fixture.kind, file)
    return fixture
