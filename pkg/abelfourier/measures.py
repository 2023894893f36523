"""
Finite point mass measures on R^n.

A measure ``sum_j c_j delta_{x_j}`` acts on continuous functions by
``lambda(f) = sum_j c_j f(x_j)``. Its dual norm is ``sum_j |c_j|`` and its
Fourier transform ``lambda^(xi) = sum_j c_j exp(-2 pi i xi . x_j)`` is a
finite exponential sum, defined for complex frequencies as well.
"""

import math
import logging

import numpy as np

from abelfourier.checks import Check, CheckReport
from abelfourier.errors import MeasureError, OwnerMismatchError


logger = logging.getLogger(__name__)

SINGLE_TOL = 1e-12
EPS = np.finfo(float).eps


class PointMassMeasure:
    """
    Args:
        dim (int): dimension of the ambient space, ``>= 1``
        atoms (iterable): ``(weight, point)`` pairs. Weights at equal
            points are summed, so points end up pairwise distinct

    """

    __slots__ = ('dim', 'weights', 'points')

    def __init__(self, dim, atoms=()):
        dim = int(dim)
        if dim < 1:
            raise MeasureError('The dimension must be >= 1, got {}'.format(dim))
        merged = {}
        for weight, point in atoms:
            point = tuple(float(x) for x in np.atleast_1d(point))
            weight = complex(weight)
            if len(point) != dim:
                raise OwnerMismatchError('Point {} does not live in R^{}'.format(point, dim))
            if not (all(math.isfinite(x) for x in point) and math.isfinite(weight.real) and math.isfinite(weight.imag)):
                raise MeasureError('Atoms must have finite weights and coordinates')
            merged[point] = merged.get(point, 0j) + weight
        self.dim = dim
        self.weights = np.array(list(merged.values()), dtype=np.complex128)
        self.points = np.array(list(merged.keys()), dtype=float).reshape(len(merged), dim)
        self.weights.flags.writeable = False
        self.points.flags.writeable = False

    @classmethod
    def delta(cls, point, weight=1.0):
        point = np.atleast_1d(np.asarray(point, dtype=float))
        return cls(len(point), [(weight, point)])

    @classmethod
    def zero(cls, dim):
        return cls(dim)

    @classmethod
    def random(cls, rng, max_atoms, dim, spread=1.0):
        """Between 1 and ``max_atoms`` atoms with complex normal weights in ``[-spread, spread]^dim``"""
        size = int(rng.integers(1, max_atoms + 1))
        weights = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        points = rng.uniform(-spread, spread, size=(size, dim))
        return cls(dim, zip(weights, points))

    @classmethod
    def from_json(cls, data):
        """``{dim, atoms: [{w: [re, im], x: [...]}]}``"""
        try:
            atoms = [(complex(*atom['w']), atom['x']) for atom in data['atoms']]
            dim = data['dim']
        except (KeyError, TypeError, ValueError) as e:
            raise MeasureError('Malformed measure: {}'.format(e))
        return cls(dim, atoms)

    def to_json(self):
        return {
            'dim': self.dim,
            'atoms': [{'w': [float(w.real), float(w.imag)], 'x': [float(x) for x in point]}
                      for w, point in zip(self.weights, self.points)]
        }

    def atoms(self):
        return list(zip(self.weights, map(tuple, self.points)))

    def _same_dim(self, other):
        if not isinstance(other, PointMassMeasure) or other.dim != self.dim:
            raise OwnerMismatchError('Cannot combine measures on R^{} and {!r}'.format(self.dim, other))

    def __add__(self, other):
        self._same_dim(other)
        return PointMassMeasure(self.dim, self.atoms() + other.atoms())

    def __mul__(self, scalar):
        return PointMassMeasure(self.dim, [(scalar * w, x) for w, x in self.atoms()])

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __len__(self):
        return len(self.weights)

    def __repr__(self):
        return 'PointMassMeasure(dim={}, atoms={})'.format(self.dim, len(self.weights))


class ScalarField:
    """
    Complex valued function on R^n with an optional declared sup bound.

    Args:
        func (callable): maps an ``(N, dim)`` array of points to ``N`` values.
            Must be reentrant
        bound (float): declared supremum of ``|f|``, None when unknown
        name (str): label used in reports

    """

    __slots__ = ('func', 'bound', 'name')

    def __init__(self, func, bound=None, name='field'):
        self.func = func
        self.bound = None if bound is None else float(bound)
        self.name = name

    def evaluate(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        try:
            values = np.asarray(self.func(points), dtype=np.complex128).reshape(len(points))
        except (ArithmeticError, ValueError, TypeError) as e:
            raise MeasureError("Evaluation of '{}' failed: {}".format(self.name, e))
        if not np.all(np.isfinite(values)):
            raise MeasureError("Evaluation of '{}' produced non finite values".format(self.name))
        return values

    def __call__(self, point):
        return complex(self.evaluate(point)[0])

    @staticmethod
    def _lift(other):
        return other if isinstance(other, ScalarField) else constant(other)

    def __add__(self, other):
        other = self._lift(other)
        bound = None if self.bound is None or other.bound is None else self.bound + other.bound
        return ScalarField(lambda X: self.evaluate(X) + other.evaluate(X), bound, '({}+{})'.format(self.name, other.name))

    __radd__ = __add__

    def __neg__(self):
        return ScalarField(lambda X: -self.evaluate(X), self.bound, '-{}'.format(self.name))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        bound = None if self.bound is None or other.bound is None else self.bound * other.bound
        return ScalarField(lambda X: self.evaluate(X) * other.evaluate(X), bound, '{}*{}'.format(self.name, other.name))

    __rmul__ = __mul__

    def __repr__(self):
        return 'ScalarField({}, bound={})'.format(self.name, self.bound)


def constant(value):
    value = complex(value)
    return ScalarField(lambda X: np.full(len(X), value), abs(value), 'constant({})'.format(value))


def as_frequency(xi, dim):
    """Validate a frequency: ``dim`` finite complex components"""
    xi = np.atleast_1d(np.asarray(xi, dtype=np.complex128))
    if xi.shape != (dim,):
        raise OwnerMismatchError('Frequency {} does not live in C^{}'.format(xi, dim))
    if not np.all(np.isfinite(xi)):
        raise MeasureError('Frequency components must be finite')
    return xi


def exponential(xi):
    """``e_xi(x) = exp(-2 pi i xi . x)``, bounded by 1 for real xi"""
    xi = np.atleast_1d(np.asarray(xi, dtype=np.complex128))
    bound = 1.0 if np.all(xi.imag == 0) else None
    return ScalarField(lambda X: np.exp(-2j * np.pi * (X @ xi)), bound, 'e_{}'.format(np.round(xi, 6).tolist()))


def polynomial(coefficients):
    """
    Args:
        coefficients (dict): multi-exponent tuple -> coefficient

    """
    terms = [(np.asarray(exponents, dtype=int), complex(c)) for exponents, c in coefficients.items()]
    degree = max((int(e.sum()) for e, _ in terms), default=0)
    bound = sum(abs(c) for _, c in terms) if degree == 0 else None

    def evaluate(X):
        result = np.zeros(len(X), dtype=np.complex128)
        for exponents, c in terms:
            result += c * np.prod(X ** exponents, axis=1)
        return result

    return ScalarField(evaluate, bound, 'polynomial')


def bump(center, radius, height=1.0):
    """``height * max(0, 1 - |x - c| / r)``"""
    center = np.atleast_1d(np.asarray(center, dtype=float))
    if not radius > 0:
        raise MeasureError('The radius of a bump must be positive, got {}'.format(radius))
    height = complex(height)
    return ScalarField(lambda X: height * np.maximum(0.0, 1 - np.linalg.norm(X - center, axis=1) / radius),
                       abs(height), 'bump({}, {})'.format(center.tolist(), radius))


def eval_measure(m, f):
    """``lambda(f) = sum_j c_j f(x_j)``"""
    if len(m) == 0:
        return 0j
    return complex(np.sum(m.weights * f.evaluate(m.points)))


def dual_norm(m):
    """``||lambda||_* = sum_j |c_j|``"""
    return float(np.sum(np.abs(m.weights)))


def _fourier_matrix(m, xis):
    """``exp(-2 pi i xi . x_j)`` with one row per atom and one column per frequency"""
    with np.errstate(over='raise', invalid='raise'):
        try:
            return np.exp(-2j * np.pi * (m.points @ np.asarray(xis, dtype=np.complex128).T))
        except FloatingPointError as e:
            raise MeasureError('Fourier transform overflows: {}'.format(e))


def measure_fourier(m, xi):
    """
    ``lambda^(xi) = sum_j c_j exp(-2 pi i xi . x_j)`` for real or complex xi.

    Raises:
        MeasureError: overflow for large imaginary parts

    """
    xi = as_frequency(xi, m.dim)
    if len(m) == 0:
        return 0j
    with np.errstate(over='raise', invalid='raise'):
        try:
            value = complex(m.weights @ _fourier_matrix(m, xi[None, :])[:, 0])
        except FloatingPointError as e:
            raise MeasureError('Fourier transform overflows: {}'.format(e))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise MeasureError('Fourier transform overflows at {}'.format(xi))
    return value


def measure_convolve(m, f):
    """
    ``(lambda * f)(v) = lambda(tau_v f) = sum_j c_j f(v - x_j)``.

    The result declares the bound ``||lambda||_* ||f||`` when ``f`` has one.
    """
    weights, points = m.weights, m.points

    def evaluate(V):
        result = np.zeros(len(V), dtype=np.complex128)
        for c, x in zip(weights, points):
            result += c * f.evaluate(V - x)
        return result

    bound = None if f.bound is None else dual_norm(m) * f.bound
    return ScalarField(evaluate, bound, 'conv({})'.format(f.name))


def weight_measure(m, phi):
    """``lambda_phi``: atoms ``(c_j phi(x_j), x_j)``, zero weights dropped"""
    if len(m) == 0:
        return PointMassMeasure(m.dim)
    weights = m.weights * phi.evaluate(m.points)
    return PointMassMeasure(m.dim, [(w, x) for w, x in zip(weights, m.points) if w != 0])


def support(m):
    """Points carrying a non zero weight"""
    return frozenset(tuple(x) for w, x in zip(m.weights, m.points.tolist()) if w != 0)


def eigen_identity_check(m, xi, samples, rtol=SINGLE_TOL):
    """
    ``lambda * e_xi = lambda^(-xi) e_xi`` at the sample points.

    The tolerance is ``rtol ||lambda||_*`` for real xi; for complex xi
    it is scaled by the growth of the exponentials involved.
    """
    xi = as_frequency(xi, m.dim)
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    e = exponential(xi)
    lhs = measure_convolve(m, e).evaluate(samples)
    rhs = measure_fourier(m, -xi) * e.evaluate(samples)
    deviation = float(np.max(np.abs(lhs - rhs))) if len(samples) else 0.0
    if len(m) == 0:
        scale = 0.0
    else:
        growth = np.abs(_fourier_matrix(m, -xi[None, :])[:, 0])
        scale = float(np.sum(np.abs(m.weights) * growth)) * float(np.max(np.abs(e.evaluate(samples)), initial=0.0))
    return Check('eigen-identity', deviation, 0.0, relation='==', atol=rtol * scale)


def partition_inequality_check(m, fields, bound=None, rtol=SINGLE_TOL):
    """
    ``sum_j ||lambda_{phi_j}||_* <= ||sum_j |phi_j| || ||lambda||_*``.

    Args:
        m (:class:`PointMassMeasure`): measure
        fields (list): the ``phi_j``
        bound (float): declared sup of ``sum_j |phi_j|``. Defaults to the
            sum of the declared bounds of the fields

    Raises:
        MeasureError: no bound given and some field declares none

    """
    fields = list(fields)
    if bound is None:
        if any(phi.bound is None for phi in fields):
            raise MeasureError('Every field needs a declared bound')
        bound = sum(phi.bound for phi in fields)
    if len(m) == 0:
        at_atoms = 0.0
    else:
        at_atoms = float(np.max(sum(np.abs(phi.evaluate(m.points)) for phi in fields)))
    lhs = sum(dual_norm(weight_measure(m, phi)) for phi in fields)
    return CheckReport('partition', [
        Check('partition-declared-bound', at_atoms, bound, rtol=rtol),
        Check('partition-inequality', lhs, bound * dual_norm(m), rtol=rtol)
    ])


def complementary_partition_check(m, phi, rtol=SINGLE_TOL):
    """
    ``||lambda||_* = ||lambda_phi||_* + ||lambda_{1-phi}||_*`` for ``0 <= phi <= 1``.

    Raises:
        MeasureError: phi leaves [0, 1] at some atom

    """
    if len(m):
        values = phi.evaluate(m.points)
        if np.any(values.imag != 0) or np.any(values.real < 0) or np.any(values.real > 1):
            raise MeasureError('phi must take values in [0, 1] at the atoms')
    lhs = dual_norm(weight_measure(m, phi)) + dual_norm(weight_measure(m, 1 - phi))
    return Check('complementary-partition', lhs, dual_norm(m), relation='==', rtol=rtol)


def convolution_bound_check(m, f, samples, rtol=SINGLE_TOL):
    """
    ``|(lambda * f)(v)| <= ||lambda||_* ||f||`` at the samples, using the
    declared bound of ``f``, which is itself checked at the samples.
    """
    if f.bound is None:
        raise MeasureError("'{}' declares no bound".format(f.name))
    samples = np.atleast_2d(np.asarray(samples, dtype=float))
    observed = float(np.max(np.abs(measure_convolve(m, f).evaluate(samples)), initial=0.0))
    declared = float(np.max(np.abs(f.evaluate(samples)), initial=0.0))
    return CheckReport('convolution-bound', [
        Check('declared-bound', declared, f.bound, rtol=rtol),
        Check('convolution-bound', observed, dual_norm(m) * f.bound, rtol=rtol)
    ])


def fourier_bound_check(m, xis, rtol=SINGLE_TOL):
    """``|lambda^(xi)| <= ||lambda||_*`` over real frequencies ``xis`` (one per row)"""
    xis = np.atleast_2d(np.asarray(xis, dtype=float))
    if len(m) == 0:
        observed = 0.0
    else:
        observed = float(np.max(np.abs(m.weights @ _fourier_matrix(m, xis))))
    return Check('fourier-bound', observed, dual_norm(m), rtol=rtol)


def fourier_continuity_check(m, xis, etas, rtol=SINGLE_TOL):
    """
    Lipschitz spot check of the transform over real frequency pairs::

        |lambda^(xi) - lambda^(eta)| <= 2 pi ||lambda||_* R |xi - eta|

    with ``R`` the largest norm of an atom. The quotient of each pair is
    allowed the rounding error of its two transforms divided by the
    distance, which dominates for close pairs.
    """
    xis = np.atleast_2d(np.asarray(xis, dtype=float))
    etas = np.atleast_2d(np.asarray(etas, dtype=float))
    if len(m) == 0:
        return Check('fourier-continuity', 0.0, 0.0)
    radius = float(np.max(np.linalg.norm(m.points, axis=1)))
    size = dual_norm(m)
    difference = np.abs(m.weights @ _fourier_matrix(m, xis) - m.weights @ _fourier_matrix(m, etas))
    distance = np.linalg.norm(xis - etas, axis=1)
    lipschitz = 2 * np.pi * size * radius
    moving = distance > 0
    if not np.any(moving):
        return Check('fourier-continuity', 0.0, lipschitz)
    # phases 2 pi xi.x carry an absolute error of about eps |2 pi xi.x|
    phases = 2 * np.pi * radius * (np.linalg.norm(xis, axis=1) + np.linalg.norm(etas, axis=1))
    rounding = 8 * EPS * size * (len(m) + 2 + phases)
    observed = float(np.max(difference[moving] / distance[moving]))
    allowance = float(np.max(rounding[moving] / distance[moving]))
    return Check('fourier-continuity', observed, lipschitz, rtol=rtol, atol=allowance)
