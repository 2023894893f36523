import math
import pickle

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from abelfourier import interpolation, norms
from abelfourier.errors import AbelFourierError, ConvergenceError, ExponentError, UnsupportedNormError
from abelfourier.interpolation import ExpSum, InterpSetting, LinearMap
from abelfourier.norms import INFINITY, ONE, TWO, Exponent


def test_linear_map_validation():
    with pytest.raises(AbelFourierError):
        LinearMap([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(AbelFourierError):
        LinearMap([[1, math.inf], [0, 1]])
    with pytest.raises(AbelFourierError):
        LinearMap.from_json([[[1, 0], [2]], [[0, 0], [1, 0]]])
    T = LinearMap.from_json([[[1, 0], [0, 1]], [[0, 0], [2, 0]]])
    np.testing.assert_array_equal(T.entries, [[1, 1j], [0, 2]])
    np.testing.assert_array_equal(T([1, 1]), [1 + 1j, 2])


def test_hadamard_map():
    np.testing.assert_array_equal(interpolation.hadamard_map(2).entries, [[1, 1], [1, -1]])
    assert interpolation.hadamard_map(8).m == 8
    with pytest.raises(AbelFourierError):
        interpolation.hadamard_map(3)


def test_intermediate_exponent():
    assert interpolation.intermediate_exponent(ONE, INFINITY, 0.5) == TWO
    assert interpolation.intermediate_exponent(ONE, TWO, 0.0) == ONE
    with pytest.raises(ExponentError):
        interpolation.intermediate_exponent(ONE, TWO, 1.5)


def test_interp_setting():
    s = InterpSetting(ONE, TWO, INFINITY, TWO, 1.0, 2.0, 0.5)
    assert s.Lt == pytest.approx(math.sqrt(2))
    assert s.pt == Exponent(0.75)
    assert s.qt == Exponent(0.25)
    assert InterpSetting(ONE, TWO, INFINITY, TWO, 0.0, 2.0, 0.5).Lt == 0
    with pytest.raises(ExponentError):
        InterpSetting(ONE, TWO, INFINITY, TWO, 1.0, 2.0, 0.0)
    with pytest.raises(AbelFourierError):
        InterpSetting(ONE, TWO, INFINITY, TWO, -1.0, 2.0, 0.5)


def test_exact_norms_of_hadamard():
    H = interpolation.hadamard_map(2)
    assert interpolation.op_norm_exact(H, ONE, INFINITY) == pytest.approx(1)
    assert interpolation.op_norm_exact(H, ONE, ONE) == pytest.approx(2)
    assert interpolation.op_norm_exact(H, INFINITY, INFINITY) == pytest.approx(2)
    assert interpolation.op_norm_exact(H, TWO, TWO) == pytest.approx(math.sqrt(2), rel=1e-9)
    with pytest.raises(UnsupportedNormError):
        interpolation.op_norm_exact(H, Exponent(0.75), Exponent(0.25))


def test_spectral_norm_against_svd():
    T = LinearMap.random(5, np.random.default_rng(7))
    expected = np.linalg.svd(T.entries, compute_uv=False)[0]
    assert interpolation.op_norm_exact(T, TWO, TWO) == pytest.approx(expected, rel=1e-8)
    assert interpolation.op_norm_exact(LinearMap(np.zeros((3, 3))), TWO, TWO) == 0


def test_power_iteration_cap():
    T = LinearMap.random(4, np.random.default_rng(8))
    with pytest.raises(ConvergenceError) as info:
        interpolation._largest_singular_value(T.entries, max_iter=1)
    assert info.value.residual > 0


@pytest.mark.parametrize('gap', [1e-4, 1e-8])
def test_spectral_norm_close_singular_values(gap):
    T = LinearMap(np.diag([1, 1 - gap, 0.5]))
    assert interpolation.op_norm_exact(T, TWO, TWO) == pytest.approx(1, rel=1e-10)
    rng = np.random.default_rng(4)
    u, _ = np.linalg.qr(rng.standard_normal((4, 4)))
    rotated = LinearMap(u @ np.diag([3, 3 * (1 - gap), 1, 0.1]) @ u.T)
    assert interpolation.op_norm_exact(rotated, TWO, TWO) == pytest.approx(3, rel=1e-10)


def test_convergence_error_pickles():
    error = pickle.loads(pickle.dumps(ConvergenceError('Power iteration did not converge', 2.5e-5)))
    assert error.residual == 2.5e-5
    assert str(error) == 'Power iteration did not converge (residual 2.500e-05)'


@pytest.mark.parametrize('p,q', [(ONE, ONE), (ONE, TWO), (ONE, INFINITY), (TWO, INFINITY),
                                 (Exponent(0.75), INFINITY), (INFINITY, INFINITY)])
def test_lower_bound_attains_closed_forms(p, q):
    T = LinearMap.random(4, np.random.default_rng(9))
    exact = interpolation.op_norm_exact(T, p, q)
    lower = interpolation.op_norm_lower(T, p, q, trials=20, seed=0)
    assert lower <= exact * (1 + 1e-9)
    assert lower == pytest.approx(exact, rel=1e-9)


def test_lower_bound_below_spectral_norm():
    T = LinearMap.random(4, np.random.default_rng(10))
    exact = interpolation.op_norm_exact(T, TWO, TWO)
    lower = interpolation.op_norm_lower(T, TWO, TWO, trials=20, seed=0)
    assert 0 < lower <= exact * (1 + 1e-9)
    H = interpolation.hadamard_map(4)
    assert interpolation.op_norm_lower(H, TWO, TWO, trials=5, seed=0) == pytest.approx(2, rel=1e-12)


def test_lower_bound_is_deterministic():
    T = LinearMap.random(3, np.random.default_rng(11))
    p, q = Exponent(0.75), Exponent(0.25)
    assert interpolation.op_norm_lower(T, p, q, 10, 5) == interpolation.op_norm_lower(T, p, q, 10, 5)
    with pytest.raises(AbelFourierError):
        interpolation.op_norm_lower(T, p, q, 0, 5)


def test_hadamard_interpolation():
    H = interpolation.hadamard_map(2)
    t_grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    report = interpolation.riesz_thorin_verify(H, ONE, INFINITY, TWO, TWO, t_grid, trials=50, seed=0)
    assert report.ok
    rows = report.details['rows']
    for row in rows:
        assert row['bound'] == pytest.approx(2 ** (row['t'] / 2))
    assert rows[0]['lower'] == pytest.approx(1, abs=1e-3)
    assert rows[-1]['lower'] == pytest.approx(math.sqrt(2), abs=1e-3)


def test_random_interpolation():
    rng = np.random.default_rng(12)
    for _ in range(3):
        T = LinearMap.random(4, rng)
        report = interpolation.riesz_thorin_verify(T, ONE, ONE, INFINITY, INFINITY, [0.1, 0.5, 0.9], 20, 1)
        assert report.ok
        report = interpolation.riesz_thorin_verify(T, ONE, INFINITY, TWO, TWO, [0.3, 0.6], 20, 2)
        assert report.ok


def test_thorin_coefficients():
    a0, a1 = interpolation.thorin_coefficients(ONE, TWO, 0.5)
    assert a0 == pytest.approx(-2 / 3)
    assert a1 == pytest.approx(1 / 3)
    assert interpolation.thorin_coefficients(INFINITY, INFINITY, 0.5) == (0.0, 0.0)


@given(st.integers(0, 2**32 - 1), st.floats(0.05, 0.95), st.floats(0, 1), st.floats(-10, 10),
       st.sampled_from([(1.0, 0.5), (1.0, 0.0), (0.5, 0.0), (0.75, 0.25)]))
@settings(max_examples=50, deadline=None)
def test_thorin_family_norm(seed, t, x, y, recips):
    p0, p1 = Exponent(recips[0]), Exponent(recips[1])
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(5) + 1j * rng.standard_normal(5)
    v[2] = 0
    v = v / norms.vec_norm(v, interpolation.intermediate_exponent(p0, p1, t))
    np.testing.assert_allclose(interpolation.thorin_family(v, p0, p1, t, t), v, rtol=1e-12)
    alpha = interpolation.thorin_family(v, p0, p1, t, complex(x, y))
    assert alpha[2] == 0
    px = interpolation.intermediate_exponent(p0, p1, x)
    assert norms.vec_norm(alpha, px) == pytest.approx(1, rel=1e-9)


def test_thorin_family_domain():
    with pytest.raises(ExponentError):
        interpolation.thorin_family([1, 2], ONE, TWO, 0.0, 0.5)
    with pytest.raises(ExponentError):
        interpolation.thorin_family([1, 2], ONE, TWO, 0.5, 1.5)


def test_thorin_pipeline():
    rng = np.random.default_rng(13)
    for _ in range(3):
        T = LinearMap.random(3, rng)
        v = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        w = rng.standard_normal(3) + 1j * rng.standard_normal(3)
        report = interpolation.thorin_pipeline_check(T, v, w, ONE, INFINITY, TWO, TWO, 0.4, samples=1025)
        assert report.ok
        assert [c.name for c in report] == ['thorin-boundary-0', 'thorin-boundary-1', 'thorin-bound', 'thorin-maximum']
        assert report.details['F(t)'] <= report.details['Lt'] * (1 + 1e-6)
        sampled = max(report.details['M0'], report.details['M1'], report.details['edges'])
        assert report.details['F(t)'] <= sampled * (1 + 1e-6)


def test_expsum():
    f = ExpSum([(1, 1.0), (2j, -2.0)])
    assert f.period == pytest.approx(2 * math.pi)
    assert complex(f(0)) == pytest.approx(1 + 2j)
    assert f(np.array([0, 1])).shape == (2,)
    with pytest.raises(AbelFourierError):
        ExpSum([(1, 1.0), (1, 0.5)])
    with pytest.raises(AbelFourierError):
        ExpSum([(1, 1.0)], omega=0)


def test_strip_max_closed_forms():
    exponential = ExpSum([(1, 1.0)])
    assert interpolation.strip_max(exponential, 0.3, 64) == pytest.approx(math.exp(0.3), rel=1e-12)
    shifted = ExpSum([(1, 0.0), (1, 1.0)])
    assert interpolation.strip_max(shifted, 0.5, 64) == pytest.approx(1 + math.exp(0.5), rel=1e-12)
    with pytest.raises(AbelFourierError):
        interpolation.strip_max(exponential, 1.5, 64)


def test_strip_max_against_dense_sampling():
    rng = np.random.default_rng(14)
    for _ in range(5):
        f = ExpSum.random(rng, 6)
        for x in (0.0, 0.4, 1.0):
            ys = np.linspace(0, f.period, 200001)
            dense = float(np.max(np.abs(f(x + 1j * ys))))
            found = interpolation.strip_max(f, x, 4096)
            assert dense * (1 - 1e-10) <= found <= dense * (1 + 1e-6)


def test_three_lines_equality_for_exponentials():
    for a in (-2.0, -1.0, 1.0, 2.0):
        report = interpolation.three_lines_check(ExpSum([(1, a)]), [0.25, 0.5, 0.75], 64)
        assert report.ok
        for check in report:
            assert check.lhs == pytest.approx(check.rhs, rel=1e-12)


def test_three_lines_random():
    rng = np.random.default_rng(15)
    for _ in range(5):
        assert interpolation.three_lines_check(ExpSum.random(rng, 6), [0.1, 0.5, 0.9], 1024).ok
    with pytest.raises(ExponentError):
        interpolation.three_lines_check(ExpSum([(1, 1.0)]), [0.0], 64)
