import numpy as np
import pytest

from abelfourier import groups, operators, spectral
from abelfourier.errors import ExponentError, OwnerMismatchError
from abelfourier.functions import DualFunction, GroupFunction
from abelfourier.norms import INFINITY, ONE, TWO, Exponent, group_norm

GRID = [ONE, Exponent(0.8), Exponent(0.75), Exponent(2 / 3), TWO, Exponent(0.25), INFINITY]


@pytest.fixture
def kernel():
    g = groups.GroupSpec((4, 2, 3))
    return operators.ConvKernel(GroupFunction.random(g, np.random.default_rng(0)))


def test_kernel_needs_a_group_function():
    g = groups.GroupSpec((4,))
    with pytest.raises(OwnerMismatchError):
        operators.ConvKernel(DualFunction(g, [1, 0, 0, 0]))


def test_apply_owner_mismatch(kernel):
    with pytest.raises(OwnerMismatchError):
        operators.conv_apply(kernel, GroupFunction.zeros(groups.GroupSpec((4, 3, 2))))


def test_identity_kernel():
    g = groups.GroupSpec((5, 2))
    k = operators.ConvKernel(GroupFunction.delta0(g))
    f = GroupFunction.random(g, np.random.default_rng(1))
    np.testing.assert_allclose(operators.conv_apply(k, f).values, f.values, atol=1e-14)
    for p in GRID:
        assert operators.bound_p(k, p) == pytest.approx(1)


def test_bound_endpoints(kernel):
    assert operators.bound_p(kernel, ONE) == kernel.norm1
    assert operators.bound_p(kernel, TWO) == kernel.spectral_sup
    assert operators.bound_p(kernel, INFINITY) == kernel.norm1
    assert operators.bound_p(kernel, Exponent(0.25)) == operators.bound_p(kernel, Exponent(0.75))
    # ||F(b)||_inf <= ||b||_1, so the bound decreases towards p = 2
    assert operators.bound_p(kernel, TWO) <= operators.bound_p(kernel, Exponent(0.75)) <= kernel.norm1


@pytest.mark.parametrize('p', [ONE, TWO])
def test_sharpness(kernel, p):
    f, ratio = operators.sharpness_witness(kernel, p)
    assert ratio == pytest.approx(operators.bound_p(kernel, p), rel=1e-10)
    assert group_norm(f, p) > 0


def test_sharpness_outside_endpoints(kernel):
    with pytest.raises(ExponentError):
        operators.sharpness_witness(kernel, Exponent(0.75))


def test_operator_bound(kernel):
    rng = np.random.default_rng(2)
    for _ in range(5):
        f = GroupFunction.random(kernel.owner, rng)
        image = operators.conv_apply(kernel, f)
        for p in GRID:
            assert operators.operator_bound_check(kernel, f, p).ok
            assert operators.operator_bound_check(kernel, f, p, image=image).ok


def test_diagonalization_and_duality(kernel):
    rng = np.random.default_rng(3)
    f1 = GroupFunction.random(kernel.owner, rng)
    f2 = GroupFunction.random(kernel.owner, rng)
    assert operators.diagonalization_check(kernel, f1).ok
    assert operators.duality_pairing_check(kernel, f1, f2).ok
    for p in GRID:
        assert operators.reflection_norm_check(kernel, f1, p).ok


def test_reflection():
    g = groups.GroupSpec((5,))
    k = operators.ConvKernel(GroupFunction(g, [0, 1, 2, 3, 4]))
    np.testing.assert_array_equal(operators.reflect(k).b.values.real, [0, 4, 3, 2, 1])


def test_large_group_operator():
    g = groups.GroupSpec((64, 20))
    rng = np.random.default_rng(4)
    k = operators.ConvKernel(GroupFunction.random(g, rng))
    f = GroupFunction.random(g, rng)
    assert g.n > spectral.DIFFERENCE_TABLE_MAX
    assert operators.diagonalization_check(k, f).ok
    assert operators.operator_bound_check(k, f, Exponent(0.75)).ok
