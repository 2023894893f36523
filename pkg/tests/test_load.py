import json

import numpy as np
import pytest

from abelfourier import groups
from abelfourier.errors import AbelFourierError
from abelfourier.load import load_fixture, parse_fixture


def test_function_fixture():
    fixture = parse_fixture({'orders': [2, 2], 'values': [[1, 0], [0, 1], [2, 0], [0, 0]]})
    assert fixture.kind == 'function'
    assert fixture.orders == (2, 2)
    np.testing.assert_array_equal(fixture.function_on(groups.GroupSpec((2, 2))).values, [1, 1j, 2, 0])
    assert fixture.function_on(groups.GroupSpec((4,))) is None

    bare = parse_fixture([[1, 0], [0, 1], [2, 0], [0, 0]])
    assert bare.orders is None
    assert bare.function_on(groups.GroupSpec((4,))) is not None
    assert bare.function_on(groups.GroupSpec((3,))) is None


def test_matrix_and_measure_fixtures():
    matrix = parse_fixture([[[1, 0], [0, 0]], [[0, 0], [1, 0]]])
    assert matrix.kind == 'matrix'
    assert matrix.value.m == 2
    assert matrix.function_on(groups.GroupSpec((2,))) is None

    measure = parse_fixture({'dim': 1, 'atoms': [{'w': [1, 0], 'x': [0.5]}]})
    assert measure.kind == 'measure'
    assert len(measure.value) == 1


@pytest.mark.parametrize('data', [{}, [], 'text', {'orders': [3], 'values': [[1, 0]]},
                                  {'values': [[1, 0, 0]]}, [[[1, 0]], [[1, 0], [0, 0]]]])
def test_malformed_fixture(data):
    with pytest.raises(AbelFourierError):
        parse_fixture(data)


def test_load_fixture(tmp_path):
    path = tmp_path / 'fixture.json'
    path.write_text(json.dumps([[1, 0], [1, 0]]))
    assert load_fixture(str(path)).kind == 'function'
    path.write_text('{not json')
    with pytest.raises(AbelFourierError):
        load_fixture(str(path))
