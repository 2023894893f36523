"""
Operator norms of linear maps on C^m and the Riesz-Thorin machinery.

Endpoint norms with a closed form (``p = 1``, ``q = inf`` and
``p = q = 2``) are computed exactly and give the constants ``L_0, L_1``.
Norms at intermediate exponents are only estimated from below, so every
verified inequality compares a lower bound against an exact bound.
"""

import math
import logging

import numpy as np
from scipy import optimize

from abelfourier import norms
from abelfourier.checks import Check, CheckReport
from abelfourier.errors import (AbelFourierError, ConvergenceError, ExponentError, OwnerMismatchError,
                                UnsupportedNormError)
from abelfourier.norms import Exponent, conjugate_exponent, pnorms


logger = logging.getLogger(__name__)

POWER_RTOL = 1e-10
POWER_MAX_ITER = 10**4
ASCENT_STEPS = 50
ASCENT_STARTS = 4
ASCENT_RTOL = 1e-15
INTERP_TOL = 1e-6
# sampled peaks refined by strip_max
POLISH_PEAKS = 8


class LinearMap:
    """
    Dense square complex matrix acting on C^m.

    Args:
        entries: ``m x m`` array, row-major

    """

    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] == 0:
            raise AbelFourierError('A linear map needs a non-empty square matrix, got shape {}'.format(entries.shape))
        if not np.all(np.isfinite(entries)):
            raise AbelFourierError('Matrix entries must be finite')
        entries.flags.writeable = False
        self.entries = entries

    @property
    def m(self):
        return self.entries.shape[0]

    @classmethod
    def from_json(cls, rows):
        """
        Args:
            rows (list): rows of ``[re, im]`` pairs

        """
        try:
            entries = [[complex(re, im) for re, im in row] for row in rows]
        except (TypeError, ValueError) as e:
            raise AbelFourierError('Matrix entries must be [re, im] pairs: {}'.format(e))
        if len({len(row) for row in entries}) > 1:
            raise AbelFourierError('Matrix rows of different lengths')
        return cls(entries)

    def to_json(self):
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]

    @classmethod
    def random(cls, m, rng):
        return cls(rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m)))

    def __call__(self, v):
        v = np.asarray(v, dtype=np.complex128)
        if v.shape[-1] != self.m:
            raise OwnerMismatchError('Map of dimension {} applied to a tuple of length {}'.format(self.m, v.shape[-1]))
        return v @ self.entries.T

    def __repr__(self):
        return 'LinearMap(m={})'.format(self.m)


def hadamard_map(m=2):
    """Unnormalized Sylvester-Hadamard map with ±1 entries, ``m`` a power of two"""
    if m < 1 or m & (m - 1):
        raise AbelFourierError('Hadamard maps need a power of two dimension, got {}'.format(m))
    entries = np.ones((1, 1))
    while entries.shape[0] < m:
        entries = np.block([[entries, entries], [entries, -entries]])
    return LinearMap(entries)


def intermediate_exponent(p0, p1, t):
    """``1/p_t = (1 - t)/p_0 + t/p_1``"""
    if not 0 <= t <= 1:
        raise ExponentError('t must be in [0, 1], got {}'.format(t))
    return Exponent((1 - t) * p0.recip + t * p1.recip)


class InterpSetting:
    """
    Data of one application of the convexity theorem.

    Args:
        p0, p1, q0, q1 (:class:`~abelfourier.norms.Exponent`): endpoint exponents
        L0, L1 (float): endpoint bounds, ``>= 0``
        t (float): interpolation parameter in ``(0, 1)``

    """

    def __init__(self, p0, p1, q0, q1, L0, L1, t):
        if not 0 < t < 1:
            raise ExponentError('t must be in (0, 1), got {}'.format(t))
        if not (L0 >= 0 and L1 >= 0):
            raise AbelFourierError('Endpoint bounds must be non negative, got {} and {}'.format(L0, L1))
        self.p0, self.p1, self.q0, self.q1 = p0, p1, q0, q1
        self.L0, self.L1 = float(L0), float(L1)
        self.t = float(t)

    @property
    def pt(self):
        return intermediate_exponent(self.p0, self.p1, self.t)

    @property
    def qt(self):
        return intermediate_exponent(self.q0, self.q1, self.t)

    @property
    def Lt(self):
        return riesz_thorin_bound(self)


def riesz_thorin_bound(s):
    """``L_0^(1-t) L_1^t``, zero when either bound is zero"""
    if s.L0 == 0 or s.L1 == 0:
        return 0.0
    return math.exp((1 - s.t) * math.log(s.L0) + s.t * math.log(s.L1))


def _largest_singular_value(entries, seed=0, rtol=POWER_RTOL, max_iter=POWER_MAX_ITER):
    """
    Power iteration on the Gram map ``T* T``.

    The iterate is advanced by the powers ``G, G^2, G^4, ...`` of the
    scaled Gram matrix, so singular values that are close together
    separate in a few dozen steps. Convergence is still judged on ``G``
    itself: the residual ``||G x - rho x||`` must fall below ``rtol rho``.
    """
    gram = entries.conj().T @ entries
    scale = float(np.max(np.abs(gram)))
    if scale == 0:
        return 0.0
    gram = gram / scale
    power = gram
    rng = np.random.default_rng(seed)
    m = gram.shape[0]
    x = np.ones(m, dtype=np.complex128) + 1e-3 * (rng.standard_normal(m) + 1j * rng.standard_normal(m))
    x /= np.linalg.norm(x)
    residual = math.inf
    for _ in range(max_iter):
        y = gram @ x
        rayleigh = float(np.real(np.vdot(x, y)))
        residual = float(np.linalg.norm(y - rayleigh * x))
        if residual <= rtol * rayleigh:
            return math.sqrt(rayleigh * scale)
        y = power @ x
        size = np.linalg.norm(y)
        if size == 0:
            # start fell in the kernel
            y = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            size = np.linalg.norm(y)
        x = y / size
        power = power @ power
        power /= np.max(np.abs(power))
    raise ConvergenceError('Power iteration did not converge in {} iterations'.format(max_iter), residual)


def op_norm_exact(T, p, q, seed=0):
    """
    Closed form ``||T||_{p -> q}``.

    Supported pairs: ``p = 1`` (largest column q-norm), ``q = inf``
    (largest row p'-norm) and ``p = q = 2`` (largest singular value by
    power iteration on ``T* T``).

    Raises:
        UnsupportedNormError: any other pair
        ConvergenceError: power iteration hit its cap

    """
    if p.recip == 1:
        return float(np.max(pnorms(T.entries, q, axis=0)))
    if q.recip == 0:
        return float(np.max(pnorms(T.entries, conjugate_exponent(p), axis=1)))
    if p.recip == 0.5 and q.recip == 0.5:
        return _largest_singular_value(T.entries, seed=seed)
    raise UnsupportedNormError('No closed form for ||T||_{{{} -> {}}}'.format(p, q))


def _ascend(T, v, p, q, steps):
    """Hölder rescaling ascent of the ratio ||Tv||_q / ||v||_p, stops once the ratio stalls"""
    p_conjugate = conjugate_exponent(p)
    best = norms.vec_norm(T(v), q) / norms.vec_norm(v, p)
    for _ in range(steps):
        y = T(v)
        if not np.any(y):
            break
        w = norms.holder_witness(y, q)
        # sum_j (Tv)_j w_j = sum_k v_k (w T)_k
        z = w @ T.entries
        if not np.any(z):
            break
        v = norms.holder_witness(z, p_conjugate)
        ratio = norms.vec_norm(T(v), q) / norms.vec_norm(v, p)
        if ratio <= best * (1 + ASCENT_RTOL):
            # stalled
            return max(best, ratio)
        best = ratio
    return best


def op_norm_lower(T, p, q, trials, seed, steps=ASCENT_STEPS, starts=ASCENT_STARTS):
    """
    Randomized lower bound of ``||T||_{p -> q}``.

    Evaluates the coordinate tuples, the Hölder witnesses of the rows
    and ``trials`` random directions, then runs the Hölder ascent from
    the best ``starts`` of them. Deterministic for a given seed.

    Args:
        T (:class:`LinearMap`): map
        p, q (:class:`~abelfourier.norms.Exponent`): exponents
        trials (int): random directions, ``>= 1``
        seed (int): random seed

    """
    if trials < 1:
        raise AbelFourierError('At least one trial is needed')
    rng = np.random.default_rng(seed)
    m = T.m
    p_conjugate = conjugate_exponent(p)
    # a row witness attains ||row||_p' in that coordinate
    witnesses = [norms.holder_witness(row, p_conjugate) for row in T.entries if np.any(row)]
    candidates = np.vstack([
        np.eye(m, dtype=np.complex128),
        np.array(witnesses, dtype=np.complex128).reshape(-1, m),
        rng.standard_normal((trials, m)) + 1j * rng.standard_normal((trials, m))
    ])
    candidates /= pnorms(candidates, p, axis=1)[:, None]
    values = pnorms(T(candidates), q, axis=1)
    best = float(np.max(values))
    for index in np.argsort(-values, kind='stable')[:starts]:
        best = max(best, _ascend(T, candidates[index], p, q, steps))
    return best


def thorin_coefficients(p0, p1, t):
    """
    Coefficients ``(a_0, a_1)`` of the analytic family.

    They solve ``(1/p_t)(a_0 x + a_1 + 1) = 1/p_x`` for every ``x``::

        a_1 = p_t/p_0 - 1,   a_0 = p_t (1/p_1 - 1/p_0)

    Both are zero when ``p_t = inf``.
    """
    recip_t = (1 - t) * p0.recip + t * p1.recip
    if recip_t == 0:
        return 0.0, 0.0
    return (p1.recip - p0.recip) / recip_t, p0.recip / recip_t - 1


def _thorin_rows(v, a0, a1, zs):
    """``alpha(z)`` for every z in ``zs``, one row per z"""
    moduli = np.abs(v)
    nonzero = moduli > 0
    logs = np.zeros_like(moduli)
    logs[nonzero] = np.log(moduli[nonzero])
    exponents = np.multiply.outer(a0 * np.asarray(zs) + a1, logs)
    return np.where(nonzero, v * np.exp(exponents), 0)


def thorin_family(v, p0, p1, t, z):
    """
    Analytic family ``alpha_j(z) = v_j |v_j|^(a_0 z + a_1)``.

    ``alpha(t) = v`` and, if ``||v||_{p_t} = 1``, ``||alpha(x+iy)||_{p_x} = 1``
    on the whole strip. Zero entries stay zero.

    Raises:
        ExponentError: t outside (0, 1) or Re z outside [0, 1]

    """
    if not 0 < t < 1:
        raise ExponentError('t must be in (0, 1), got {}'.format(t))
    z = complex(z)
    if not 0 <= z.real <= 1:
        raise ExponentError('Re z must be in [0, 1], got {}'.format(z))
    v = norms.complex_tuple(v)
    a0, a1 = thorin_coefficients(p0, p1, t)
    if a0 == 0 and a1 == 0:
        return v.copy()
    return _thorin_rows(v, a0, a1, z)


def riesz_thorin_verify(T, p0, q0, p1, q1, t_grid, trials, seed, rtol=INTERP_TOL, steps=ASCENT_STEPS):
    """
    Compare lower bounds of ``||T||_{p_t -> q_t}`` with ``L_0^(1-t) L_1^t``.

    ``L_0, L_1`` are the exact endpoint norms, so the endpoint pairs must
    be supported by :func:`op_norm_exact`.

    Returns:
        :class:`~abelfourier.checks.CheckReport`: one check per t, ``details['rows']``
        lists t, p_t, q_t, the lower bound and the bound

    """
    L0 = op_norm_exact(T, p0, q0, seed=seed)
    L1 = op_norm_exact(T, p1, q1, seed=seed)
    report = CheckReport('riesz-thorin', details={'L0': L0, 'L1': L1, 'rows': []})
    for i, t in enumerate(t_grid):
        pt, qt = intermediate_exponent(p0, p1, t), intermediate_exponent(q0, q1, t)
        if t == 0:
            bound = L0
        elif t == 1:
            bound = L1
        else:
            bound = riesz_thorin_bound(InterpSetting(p0, p1, q0, q1, L0, L1, t))
        lower = op_norm_lower(T, pt, qt, trials, seed + i, steps=steps)
        report.add(Check('riesz-thorin', lower, bound, rtol=rtol))
        report.details['rows'].append({'t': t, 'p': str(pt), 'q': str(qt), 'lower': lower, 'bound': bound})
        logger.debug('t=%g p=%s q=%s lower=%.12g bound=%.12g', t, pt, qt, lower, bound)
    return report


def thorin_pipeline_check(T, v, w, p0, q0, p1, q1, t, window=50.0, samples=4097, rtol=INTERP_TOL):
    """
    Follow the interpolation argument on one pair of tuples.

    ``v`` is normalized in ``p_t`` and ``w`` in ``q_t'``; the scalar
    function ``F(z) = sum_j (T alpha(z))_j beta_j(z)`` is sampled on the
    two boundary lines for ``|y| <= window`` and on the horizontal edges
    ``y = +-window`` of the strip.

    Checks:
        - ``|F(x+iy)| <= L_x`` on both boundary lines (Hölder plus the endpoint bound)
        - ``|F(t)| <= L_0^(1-t) L_1^t``
        - ``|F(t)|`` does not exceed the sampled maximum of ``|F|`` over the
          boundary of the rectangle ``[0, 1] x [-window, window]``

    """
    pt, qt = intermediate_exponent(p0, p1, t), intermediate_exponent(q0, q1, t)
    v = norms.complex_tuple(v)
    w = norms.complex_tuple(w)
    v = v / norms.vec_norm(v, pt)
    w = w / norms.vec_norm(w, conjugate_exponent(qt))
    L0 = op_norm_exact(T, p0, q0)
    L1 = op_norm_exact(T, p1, q1)

    a = thorin_coefficients(p0, p1, t)
    b = thorin_coefficients(conjugate_exponent(q0), conjugate_exponent(q1), t)

    def F(zs):
        alpha = _thorin_rows(v, a[0], a[1], zs)
        beta = _thorin_rows(w, b[0], b[1], zs)
        return np.sum(T(alpha) * beta, axis=-1)

    ys = np.linspace(-window, window, samples)
    xs = np.linspace(0, 1, samples)
    M0 = float(np.max(np.abs(F(1j * ys))))
    M1 = float(np.max(np.abs(F(1 + 1j * ys))))
    edges = float(np.max(np.abs(F(np.concatenate([xs + 1j * window, xs - 1j * window])))))
    Ft = abs(complex(F(np.array([t]))[0]))
    bound = riesz_thorin_bound(InterpSetting(p0, p1, q0, q1, L0, L1, t))
    boundary = max(M0, M1, edges)

    return CheckReport('thorin-pipeline', [
        Check('thorin-boundary-0', M0, L0, rtol=rtol),
        Check('thorin-boundary-1', M1, L1, rtol=rtol),
        Check('thorin-bound', Ft, bound, rtol=rtol),
        Check('thorin-maximum', Ft, boundary, rtol=rtol)
    ], details={'F(t)': Ft, 'M0': M0, 'M1': M1, 'edges': edges, 'Lt': bound})


class ExpSum:
    """
    Exponential sum ``f(z) = sum_k c_k exp(a_k z)``.

    Every rate is an integer multiple of ``omega``, so ``|f(x+iy)|`` is
    periodic in y with period ``2 pi / omega``.

    Args:
        terms (iterable): ``(c_k, a_k)`` pairs
        omega (float): base rate, ``> 0``

    """

    def __init__(self, terms, omega=1.0):
        if not omega > 0:
            raise AbelFourierError('The base rate must be positive, got {}'.format(omega))
        terms = list(terms)
        coefficients = np.array([c for c, _ in terms], dtype=np.complex128)
        ratios = np.array([a / omega for _, a in terms], dtype=float)
        multiples = np.rint(ratios)
        if np.any(np.abs(ratios - multiples) > 1e-9):
            raise AbelFourierError('Rates must be integer multiples of {}'.format(omega))
        self.omega = float(omega)
        self.coefficients = coefficients
        self.multiples = multiples.astype(np.int64)

    @classmethod
    def random(cls, rng, terms, omega=1.0, max_multiple=4):
        size = int(rng.integers(1, terms + 1))
        coefficients = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        multiples = rng.integers(-max_multiple, max_multiple + 1, size=size)
        return cls(zip(coefficients, multiples * omega), omega)

    @property
    def rates(self):
        return self.multiples * self.omega

    @property
    def period(self):
        return 2 * np.pi / self.omega

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        return np.exp(np.multiply.outer(z, self.rates)) @ self.coefficients

    def __repr__(self):
        return 'ExpSum({} terms, omega={})'.format(len(self.coefficients), self.omega)


def strip_max(f, x, samples):
    """
    Maximum of ``|f(x+iy)|`` over one period.

    ``samples`` equispaced points locate the peaks, the highest ones are
    then refined with a bounded scalar search.
    """
    if samples < 2:
        raise AbelFourierError('At least two samples are needed')
    if not 0 <= x <= 1:
        raise AbelFourierError('x must be in [0, 1], got {}'.format(x))
    step = f.period / samples
    ys = np.arange(samples) * step
    values = np.abs(f(x + 1j * ys))
    best = float(np.max(values))
    # local maxima of the periodic sequence
    peaks = np.flatnonzero((values >= np.roll(values, 1)) & (values >= np.roll(values, -1)))
    peaks = peaks[np.argsort(-values[peaks], kind='stable')][:POLISH_PEAKS]
    for i in peaks:
        found = optimize.minimize_scalar(lambda y: -abs(complex(f(x + 1j * y))),
                                         bounds=(ys[i] - step, ys[i] + step), method='bounded',
                                         options={'xatol': 1e-12 * f.period})
        best = max(best, -float(found.fun))
    return best


def three_lines_check(f, t_grid, samples, rtol=INTERP_TOL):
    """
    ``M_t <= M_0^(1-t) M_1^t`` at every t of the grid.

    Returns:
        :class:`~abelfourier.checks.CheckReport`

    """
    M0 = strip_max(f, 0.0, samples)
    M1 = strip_max(f, 1.0, samples)
    report = CheckReport('three-lines', details={'M0': M0, 'M1': M1, 'rows': []})
    for t in t_grid:
        if not 0 < t < 1:
            raise ExponentError('t must be in (0, 1), got {}'.format(t))
        Mt = strip_max(f, t, samples)
        bound = 0.0 if M0 == 0 or M1 == 0 else math.exp((1 - t) * math.log(M0) + t * math.log(M1))
        report.add(Check('three-lines', Mt, bound, rtol=rtol))
        report.details['rows'].append({'t': t, 'M': Mt, 'bound': bound})
    return report
