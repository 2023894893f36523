import logging

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelfourier import characters, groups, spectral, suites
from abelfourier.errors import OwnerMismatchError
from abelfourier.functions import DualFunction, GroupFunction


def _numpy_transform(f):
    g = f.owner
    return np.fft.fftn(f.tensor()).reshape(-1, order='F') / g.n


def test_delta_transform():
    g = groups.GroupSpec((4,))
    f = GroupFunction(g, [1, 0, 0, 0])
    np.testing.assert_allclose(spectral.fourier_naive(f).values, np.full(4, 0.25), atol=1e-15)


def test_character_transform_is_indicator():
    g = groups.GroupSpec((4, 3))
    a = characters.dual_element(g, (1, 2))
    transform = spectral.fourier(characters.character_table(g, a))
    expected = np.zeros(g.n)
    expected[groups.index_of(g, a)] = 1
    np.testing.assert_allclose(transform.values, expected, atol=1e-14)


@pytest.mark.parametrize('orders', [(2,), (16,), (4, 2, 3), (8, 9, 5), (4096,), (6, 1, 4)])
def test_fast_matches_numpy(orders):
    g = groups.GroupSpec(orders)
    f = GroupFunction.random(g, np.random.default_rng(1))
    np.testing.assert_allclose(spectral.fourier_fast(f).values, _numpy_transform(f), atol=1e-12)


@pytest.mark.parametrize('orders', [(4, 2, 3), (8, 9, 5)])
def test_fast_matches_naive(orders):
    g = groups.GroupSpec(orders)
    f = GroupFunction.random(g, np.random.default_rng(2))
    np.testing.assert_allclose(spectral.fourier_fast(f).values, spectral.fourier_naive(f).values, atol=1e-12)


def test_fast_matches_naive_at_4096(caplog):
    g = groups.GroupSpec((4096,))
    f = GroupFunction.random(g, np.random.default_rng(5))
    np.testing.assert_allclose(spectral.fourier_fast(f).values, spectral.fourier_naive(f).values, atol=1e-12)
    with caplog.at_level(logging.INFO, logger='abelfourier.suites'):
        ratio = suites._benchmark(f)
    assert ratio > 1
    assert 'faster than the naive one' in caplog.text


@pytest.mark.parametrize('method', ['fast', 'naive'])
def test_inversion(method):
    g = groups.GroupSpec((4, 2, 3))
    f = GroupFunction.random(g, np.random.default_rng(3))
    np.testing.assert_allclose(spectral.inverse_fourier(spectral.fourier(f), method=method).values,
                               f.values, atol=1e-12)
    with pytest.raises(ValueError):
        spectral.inverse_fourier(spectral.fourier(f), method='other')


def test_inner_products():
    g = groups.GroupSpec((3,))
    f1 = GroupFunction(g, [1, 1j, 0])
    f2 = GroupFunction(g, [1, 1, 1])
    assert spectral.inner_product(f1, f2) == pytest.approx((1 + 1j) / 3)
    h = DualFunction(g, [1, 1j, 0])
    assert spectral.dual_inner_product(h, h) == pytest.approx(2)
    with pytest.raises(OwnerMismatchError):
        spectral.inner_product(f1, h)
    with pytest.raises(OwnerMismatchError):
        spectral.inner_product(f1, GroupFunction.zeros(groups.GroupSpec((4,))))


@given(st.lists(st.integers(1, 7), min_size=1, max_size=3), st.integers(0, 2**32 - 1))
@settings(max_examples=30, deadline=None)
def test_plancherel(orders, seed):
    g = groups.GroupSpec(orders)
    rng = np.random.default_rng(seed)
    f1 = GroupFunction.random(g, rng)
    f2 = GroupFunction.random(g, rng)
    lhs = spectral.inner_product(f1, f2)
    rhs = spectral.dual_inner_product(spectral.fourier(f1), spectral.fourier(f2))
    assert abs(lhs - rhs) <= 1e-9 * (1 + abs(lhs))


def _convolve_by_definition(f1, f2):
    g = f1.owner
    values = []
    for x in g.elements():
        values.append(sum(f1(y) * f2(groups.sub(g, x, y)) for y in g.elements()) / g.n)
    return np.array(values)


def test_convolve_definition():
    g = groups.GroupSpec((4, 3))
    rng = np.random.default_rng(4)
    f1 = GroupFunction.random(g, rng)
    f2 = GroupFunction.random(g, rng)
    np.testing.assert_allclose(spectral.convolve(f1, f2).values, _convolve_by_definition(f1, f2), atol=1e-12)


def test_delta_is_the_unit():
    g = groups.GroupSpec((4, 2))
    f = GroupFunction.random(g, np.random.default_rng(5))
    np.testing.assert_allclose(spectral.convolve(GroupFunction.delta0(g), f).values, f.values, atol=1e-14)


@pytest.mark.parametrize('orders', [(4, 2, 3), (2048,), (32, 40)])
def test_convolution_theorem(orders):
    g = groups.GroupSpec(orders)
    rng = np.random.default_rng(6)
    f1 = GroupFunction.random(g, rng)
    f2 = GroupFunction.random(g, rng)
    lhs = spectral.fourier(spectral.convolve(f1, f2)).values
    rhs = spectral.fourier(f1).values * spectral.fourier(f2).values
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)
