import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelfourier import groups, norms, spectral
from abelfourier.errors import ExponentError, OwnerMismatchError, WitnessError
from abelfourier.functions import DualFunction, GroupFunction
from abelfourier.norms import INFINITY, ONE, TWO, Exponent


@pytest.mark.parametrize('token,recip', [('0.75', 0.75), ('3/4', 0.75), ('p=4/3', 0.75),
                                         ('p=inf', 0.0), ('0', 0.0), ('1', 1.0), ('p=2', 0.5)])
def test_parse(token, recip):
    assert Exponent.parse(token).recip == recip


@pytest.mark.parametrize('token', ['p=0.5', '1.5', '-1', 'abc', 'p=', '1/0'])
def test_parse_invalid(token):
    with pytest.raises(ExponentError):
        Exponent.parse(token)


def test_exponent():
    p = Exponent.from_p(4)
    assert p.conjugate() == Exponent(0.75)
    assert str(p.conjugate()) == '4/3'
    assert str(INFINITY) == 'inf'
    assert INFINITY.is_infinite and INFINITY.p == math.inf
    assert ONE.conjugate() == INFINITY
    with pytest.raises(ExponentError):
        Exponent.from_p(0.5)


def test_vec_norm():
    assert norms.vec_norm([3, 4], TWO) == pytest.approx(5)
    assert norms.vec_norm([3, 4j], ONE) == pytest.approx(7)
    assert norms.vec_norm([3, -4], INFINITY) == 4
    assert norms.vec_norm([0, 0], TWO) == 0
    # no underflow nor overflow
    assert norms.vec_norm([1e-200, 1e-200], TWO) == pytest.approx(math.sqrt(2) * 1e-200)
    assert norms.vec_norm([1e200, 1e200], TWO) == pytest.approx(math.sqrt(2) * 1e200)


def test_group_and_dual_norms():
    g = groups.GroupSpec((4, 2))
    for p in (ONE, Exponent(0.75), TWO, INFINITY):
        assert norms.group_norm(GroupFunction.constant(g), p) == pytest.approx(1)
    delta = GroupFunction(g, [1] + [0] * 7)
    assert norms.group_norm(delta, ONE) == pytest.approx(1 / 8)
    assert norms.dual_pnorm(DualFunction(g, [1] + [0] * 7), ONE) == 1
    with pytest.raises(OwnerMismatchError):
        norms.group_norm(DualFunction(g, [1] + [0] * 7), ONE)


@given(st.lists(st.tuples(st.floats(-1e3, 1e3), st.floats(-1e3, 1e3)), min_size=1, max_size=12),
       st.integers(0, 2**32 - 1), st.sampled_from([1.0, 0.8, 0.5, 0.25, 0.0]))
@settings(max_examples=50, deadline=None)
def test_holder(pairs, seed, recip):
    v = np.array([complex(re, im) for re, im in pairs])
    rng = np.random.default_rng(seed)
    w = rng.standard_normal(len(v)) + 1j * rng.standard_normal(len(v))
    assert norms.holder_check(v, w, Exponent(recip)).ok


@pytest.mark.parametrize('recip', [1.0, 0.75, 0.5, 0.2, 0.0])
def test_holder_witness(recip):
    p = Exponent(recip)
    v = np.array([3, -4j, 0, 1 + 1j])
    w = norms.holder_witness(v, p)
    assert np.sum(v * w) == pytest.approx(norms.vec_norm(v, p), rel=1e-12)
    assert norms.vec_norm(w, p.conjugate()) == pytest.approx(1, rel=1e-12)


def test_holder_witness_edge_cases():
    assert np.all(norms.holder_witness([0, 0], ONE) == 1)
    w = norms.holder_witness([1, -2, 2], INFINITY)
    np.testing.assert_allclose(w, [0, -1, 0])
    with pytest.raises(WitnessError):
        norms.holder_witness([0, 0], TWO)


def test_holder_length_mismatch():
    with pytest.raises(OwnerMismatchError):
        norms.holder_check([1, 2], [1, 2, 3], TWO)


def test_norm_comparison():
    rng = np.random.default_rng(0)
    g = groups.GroupSpec((4, 3))
    f = GroupFunction.random(g, rng)
    grid = [ONE, Exponent(0.75), TWO, INFINITY]
    for i, p in enumerate(grid):
        for q in grid[i:]:
            for x in (f.values, f, spectral.fourier(f)):
                assert norms.norm_comparison_report(x, p, q).ok
    with pytest.raises(ExponentError):
        norms.norm_comparison_report(f, INFINITY, ONE)


def test_norm_comparison_equality_cases():
    report = norms.norm_comparison_report([1, -1, 1j], ONE, INFINITY)
    assert report.ok
    assert report.checks[1].margin == pytest.approx(0, abs=1e-12)


def test_young_exponent():
    assert norms.young_exponent(ONE, ONE) == ONE
    assert norms.young_exponent(Exponent(0.75), Exponent(0.75)) == TWO
    assert norms.young_exponent(TWO, TWO) == INFINITY
    with pytest.raises(ExponentError):
        norms.young_exponent(Exponent(0.25), Exponent(0.25))


def test_young_and_sup():
    rng = np.random.default_rng(1)
    g = groups.GroupSpec((4, 2, 3))
    f1 = GroupFunction.random(g, rng)
    f2 = GroupFunction.random(g, rng)
    grid = [ONE, Exponent(0.8), Exponent(0.75), TWO, Exponent(0.25), INFINITY]
    for p in grid:
        assert norms.convolution_sup_check(f1, f2, p).ok
        for r in grid:
            if p.recip + r.recip >= 1:
                assert norms.young_check(f1, f2, p, r).ok


def test_young_equality_for_nonnegative():
    rng = np.random.default_rng(2)
    g = groups.GroupSpec((5, 3))
    f1 = GroupFunction(g, rng.random(g.n))
    f2 = GroupFunction(g, rng.random(g.n))
    check = norms.young_check(f1, f2, ONE, ONE)
    assert check.lhs == pytest.approx(check.rhs, rel=1e-12)


def test_hausdorff_young():
    rng = np.random.default_rng(3)
    g = groups.GroupSpec((8, 9))
    f = GroupFunction.random(g, rng)
    for recip in (1.0, 0.8, 0.75, 2 / 3, 0.5):
        assert norms.hausdorff_young_check(f, Exponent(recip)).ok
    delta = GroupFunction.delta0(g)
    check = norms.hausdorff_young_check(delta, ONE)
    assert check.lhs == pytest.approx(check.rhs)
    with pytest.raises(ExponentError):
        norms.hausdorff_young_check(f, Exponent(0.25))
