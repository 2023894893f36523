import numpy as np
import pytest
from hypothesis import given, strategies as st

from abelfourier import groups
from abelfourier.errors import GroupError, OwnerMismatchError


def test_both_spellings():
    g = groups.parse_group_spec('4,2,3')
    assert g == groups.parse_group_spec('Z4xZ2xZ3')
    assert g.orders == (4, 2, 3)
    assert g.n == 24
    assert g.k == 3
    assert str(g) == 'Z4xZ2xZ3'


def test_trivial_factor_kept():
    g = groups.parse_group_spec('1')
    assert g.n == 1
    assert list(g.elements()) == [g.zero()]


@pytest.mark.parametrize('text', ['', '4,,2', 'Z4*Z2', '0,2', 'Z0', '4, -2', None])
def test_malformed_spec(text):
    with pytest.raises(GroupError):
        groups.parse_group_spec(text)


def test_overflow():
    with pytest.raises(GroupError):
        groups.parse_group_spec('9223372036854775807,2')


def test_canonical_order_is_little_endian():
    g = groups.GroupSpec((4, 2, 3))
    assert groups.element_at(g, 1).residues == (1, 0, 0)
    assert groups.element_at(g, 4).residues == (0, 1, 0)
    assert groups.element_at(g, 8).residues == (0, 0, 1)
    assert groups.index_of(g, groups.GroupElement(g, (3, 1, 2))) == 23
    with pytest.raises(GroupError):
        groups.element_at(g, 24)


def test_residues_are_reduced():
    g = groups.GroupSpec((4, 3))
    assert groups.GroupElement(g, (5, -1)).residues == (1, 2)


def test_arithmetic():
    g = groups.GroupSpec((4, 3))
    a = groups.GroupElement(g, (3, 2))
    b = groups.GroupElement(g, (2, 2))
    assert groups.add(g, a, b).residues == (1, 1)
    assert groups.neg(g, a).residues == (1, 1)
    assert groups.sub(g, a, b).residues == (1, 0)
    assert groups.add(g, a, groups.neg(g, a)) == g.zero()


def test_owner_mismatch():
    g = groups.GroupSpec((4, 3))
    h = groups.GroupSpec((4, 2))
    with pytest.raises(OwnerMismatchError):
        groups.GroupElement(g, (1, 2, 3))
    with pytest.raises(OwnerMismatchError):
        groups.add(g, g.zero(), h.zero())


def test_tables():
    g = groups.GroupSpec((4, 2, 3))
    table = groups.residue_table(g)
    assert table.shape == (24, 3)
    for i, x in enumerate(g.elements()):
        assert tuple(table[i]) == x.residues
        assert groups.element_at(g, groups.negation_indices(g)[i]) == groups.neg(g, x)
    with pytest.raises(ValueError):
        table[0, 0] = 1


def test_difference_indices():
    g = groups.GroupSpec((3, 2))
    differences = groups.difference_indices(g)
    for x in g.elements():
        for y in g.elements():
            expected = groups.index_of(g, groups.sub(g, x, y))
            assert differences[groups.index_of(g, x), groups.index_of(g, y)] == expected


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.data())
def test_index_matches_ravel(orders, data):
    g = groups.GroupSpec(orders)
    i = data.draw(st.integers(0, g.n - 1))
    x = groups.element_at(g, i)
    assert groups.index_of(g, x) == i
    assert np.ravel_multi_index(x.residues, g.orders, order='F') == i
