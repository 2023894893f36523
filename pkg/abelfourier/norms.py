"""
Lebesgue exponents, p-norms and the elementary inequalities between them.

Two normalizations are used on groups::

    ||f||_{p,A}  = ((1/n) sum_x |f(x)|^p)^(1/p)      (functions on A)
    ||h||_{p,A*} = (sum_a |h(a)|^p)^(1/p)            (functions on A*)

with the maximum modulus for ``p = inf`` in both cases.
"""

import math
import logging
from fractions import Fraction

import numpy as np

from abelfourier import spectral
from abelfourier.checks import Check, CheckReport
from abelfourier.errors import AbelFourierError, ExponentError, WitnessError, OwnerMismatchError
from abelfourier.functions import GroupFunction, DualFunction


logger = logging.getLogger(__name__)

SINGLE_TOL = 1e-12
AGGREGATE_TOL = 1e-9


class Exponent:
    """
    Exponent ``p`` in ``[1, inf]`` stored by its reciprocal.

    ``recip = 0`` encodes ``p = inf``, so convex combinations of
    reciprocals need no special casing.

    Args:
        recip (float): ``1/p`` in ``[0, 1]``

    """

    __slots__ = ('recip',)

    def __init__(self, recip):
        recip = float(recip)
        if math.isnan(recip) or not -1e-15 <= recip <= 1 + 1e-15:
            raise ExponentError('1/p must be in [0, 1], got {}'.format(recip))
        self.recip = min(max(recip, 0.0), 1.0)

    @classmethod
    def from_p(cls, p):
        p = float(p)
        if math.isinf(p) and p > 0:
            return cls(0.0)
        if not p >= 1:
            raise ExponentError('p must be in [1, inf], got {}'.format(p))
        return cls(1 / p)

    @classmethod
    def parse(cls, token):
        """
        Parse a command line token.

        ``"0.75"`` and ``"3/4"`` are reciprocals, ``"p=4/3"`` and
        ``"p=inf"`` are exponents.
        """
        token = token.strip()
        try:
            if token.startswith('p='):
                value = token[2:].strip()
                if value.lower() in ('inf', 'infinity'):
                    return cls(0.0)
                p = Fraction(value)
                if p < 1:
                    raise ExponentError('p must be in [1, inf], got {}'.format(value))
                return cls(1 / p)
            return cls(Fraction(token))
        except (ValueError, ZeroDivisionError) as e:
            raise ExponentError("Invalid exponent '{}': {}".format(token, e))

    @property
    def p(self):
        return math.inf if self.recip == 0 else 1 / self.recip

    @property
    def is_infinite(self):
        return self.recip == 0

    def conjugate(self):
        return conjugate_exponent(self)

    def __eq__(self, other):
        return isinstance(other, Exponent) and self.recip == other.recip

    def __hash__(self):
        return hash(self.recip)

    def __str__(self):
        if self.recip == 0:
            return 'inf'
        p = Fraction(self.recip).limit_denominator(1000)
        return str(1 / p)

    def __repr__(self):
        return 'Exponent(p={})'.format(self)


ONE = Exponent(1.0)
TWO = Exponent(0.5)
INFINITY = Exponent(0.0)


def conjugate_exponent(p):
    """``p'`` with ``1/p + 1/p' = 1``"""
    return Exponent(1 - p.recip)


def complex_tuple(v):
    """Validate and convert to a 1-d complex array"""
    v = np.asarray(v, dtype=np.complex128)
    if v.ndim != 1 or v.shape[0] == 0:
        raise AbelFourierError('Expected a non-empty 1-d tuple, got shape {}'.format(v.shape))
    if not np.all(np.isfinite(v)):
        raise AbelFourierError('Tuple entries must be finite')
    return v


def pnorms(values, p, axis=-1):
    """
    p-norm along ``axis``.

    Moduli are scaled by their maximum and raised to ``p`` as
    ``exp(p log|v|)``, zeros contribute nothing.
    """
    moduli = np.abs(np.asarray(values))
    top = np.max(moduli, axis=axis, keepdims=True)
    if p.recip == 0:
        return np.squeeze(top, axis=axis)
    scaled = moduli / np.where(top > 0, top, 1.0)
    with np.errstate(divide='ignore'):
        logs = np.log(scaled)
    powers = np.where(scaled > 0, np.exp(logs / p.recip), 0.0)
    total = np.sum(powers, axis=axis)
    return np.squeeze(top, axis=axis) * total ** p.recip


def vec_norm(v, p):
    return float(pnorms(complex_tuple(v), p))


def group_norm(f, p):
    """``||f||_{p,A}``, the 1/n weighted norm"""
    if not isinstance(f, GroupFunction):
        raise OwnerMismatchError('{!r} is not a function on a group'.format(f))
    return float(pnorms(f.values, p)) * f.owner.n ** (-p.recip)


def dual_pnorm(h, p):
    """``||h||_{p,A*}``, the unweighted norm"""
    if not isinstance(h, DualFunction):
        raise OwnerMismatchError('{!r} is not a function on a dual group'.format(h))
    return float(pnorms(h.values, p))


def holder_check(v, w, p, rtol=SINGLE_TOL):
    """
    Hölder's inequality ``|sum v_j w_j| <= ||v||_p ||w||_p'``.

    Returns:
        :class:`~abelfourier.checks.Check`

    """
    v, w = complex_tuple(v), complex_tuple(w)
    if v.shape != w.shape:
        raise OwnerMismatchError('Tuples of different length: {} and {}'.format(len(v), len(w)))
    lhs = abs(np.sum(v * w))
    rhs = vec_norm(v, p) * vec_norm(w, conjugate_exponent(p))
    return Check('holder', lhs, rhs, rtol=rtol)


def group_holder_check(f1, f2, p, rtol=AGGREGATE_TOL):
    """``(1/n)|sum f1 f2| <= ||f1||_{p,A} ||f2||_{p',A}``"""
    spectral._same_owner(f1, f2)
    lhs = abs(np.sum(f1.values * f2.values)) / f1.owner.n
    rhs = group_norm(f1, p) * group_norm(f2, conjugate_exponent(p))
    return Check('holder-group', lhs, rhs, rtol=rtol)


def dual_holder_check(h1, h2, p, rtol=AGGREGATE_TOL):
    """``|sum h1 h2| <= ||h1||_{p,A*} ||h2||_{p',A*}``"""
    spectral._same_owner(h1, h2)
    lhs = abs(np.sum(h1.values * h2.values))
    rhs = dual_pnorm(h1, p) * dual_pnorm(h2, conjugate_exponent(p))
    return Check('holder-dual', lhs, rhs, rtol=rtol)


def holder_witness(v, p):
    """
    Tuple attaining equality in Hölder's inequality.

    Returns ``w`` with ``||w||_p' = 1`` and ``sum v_j w_j = ||v||_p``.
    At ``p = 1`` zero entries get weight 1, at ``p = inf`` the mass
    sits at the first entry of maximal modulus.

    Raises:
        WitnessError: ``v = 0`` with ``1 < p < inf``

    """
    v = complex_tuple(v)
    moduli = np.abs(v)
    phases = np.ones_like(v)
    nonzero = moduli > 0
    phases[nonzero] = np.conj(v[nonzero]) / moduli[nonzero]

    if p.recip == 0:
        w = np.zeros_like(v)
        top = int(np.argmax(moduli))
        w[top] = phases[top]
        return w
    if p.recip == 1:
        return phases

    norm = vec_norm(v, p)
    if norm == 0:
        raise WitnessError('The zero tuple has no normalized Hölder witness for p={}'.format(p))
    scaled = moduli / norm
    w = np.zeros_like(v)
    with np.errstate(divide='ignore'):
        w[nonzero] = phases[nonzero] * np.exp((1 / p.recip - 1) * np.log(scaled[nonzero]))
    return w


def norm_comparison_report(x, p, q, rtol=SINGLE_TOL):
    """
    Two sided comparison between the p and q norms, ``p <= q``.

    On C^m and A*::

        ||v||_q <= ||v||_p <= m^(1/p - 1/q) ||v||_q

    On A (weighted)::

        ||f||_{p,A} <= ||f||_{q,A} <= n^(1/p - 1/q) ||f||_{p,A}

    Args:
        x: tuple, :class:`~abelfourier.functions.GroupFunction` or
            :class:`~abelfourier.functions.DualFunction`
        p (:class:`Exponent`): smaller exponent
        q (:class:`Exponent`): larger exponent

    Returns:
        :class:`~abelfourier.checks.CheckReport`: one check per side, margins are the slacks

    """
    if p.recip < q.recip:
        raise ExponentError('Expected p <= q, got p={} q={}'.format(p, q))
    factor_exponent = p.recip - q.recip
    if isinstance(x, GroupFunction):
        small, large = group_norm(x, p), group_norm(x, q)
        factor = x.owner.n ** factor_exponent
        return CheckReport('norm-comparison-group', [
            Check('monotone', small, large, rtol=rtol),
            Check('reverse', large, factor * small, rtol=rtol)
        ], details={'p': str(p), 'q': str(q)})

    if isinstance(x, DualFunction):
        values, name = x.values, 'norm-comparison-dual'
    else:
        values, name = complex_tuple(x), 'norm-comparison-tuple'
    norm_p, norm_q = float(pnorms(values, p)), float(pnorms(values, q))
    factor = len(values) ** factor_exponent
    return CheckReport(name, [
        Check('monotone', norm_q, norm_p, rtol=rtol),
        Check('reverse', norm_p, factor * norm_q, rtol=rtol)
    ], details={'p': str(p), 'q': str(q)})


def young_exponent(p, r):
    """
    ``1/q = 1/p + 1/r - 1``.

    Raises:
        ExponentError: ``1/p + 1/r < 1``

    """
    recip = p.recip + r.recip - 1
    if recip < -1e-15:
        raise ExponentError('Inadmissible pair p={} r={}: 1/p + 1/r < 1'.format(p, r))
    return Exponent(max(recip, 0.0))


def young_check(f1, f2, p, r, rtol=AGGREGATE_TOL, product=None):
    """
    Young's inequality ``||f1 * f2||_{q,A} <= ||f1||_{r,A} ||f2||_{p,A}``.

    ``product`` can carry an already computed ``f1 * f2``.
    """
    q = young_exponent(p, r)
    if product is None:
        product = spectral.convolve(f1, f2)
    lhs = group_norm(product, q)
    rhs = group_norm(f1, r) * group_norm(f2, p)
    return Check('young', lhs, rhs, rtol=rtol)


def convolution_sup_check(f1, f2, p, rtol=AGGREGATE_TOL, product=None):
    """``||f1 * f2||_{inf,A} <= ||f1||_{p',A} ||f2||_{p,A}``"""
    if product is None:
        product = spectral.convolve(f1, f2)
    lhs = group_norm(product, INFINITY)
    rhs = group_norm(f1, conjugate_exponent(p)) * group_norm(f2, p)
    return Check('convolution-sup', lhs, rhs, rtol=rtol)


def hausdorff_young_check(f, p, rtol=AGGREGATE_TOL, transform=None):
    """
    ``||F(f)||_{p',A*} <= ||f||_{p,A}`` for ``1 <= p <= 2``.

    Raises:
        ExponentError: ``p > 2``

    """
    if p.recip < 0.5:
        raise ExponentError('Hausdorff-Young needs 1 <= p <= 2, got p={}'.format(p))
    if transform is None:
        transform = spectral.fourier_fast(f)
    lhs = dual_pnorm(transform, conjugate_exponent(p))
    rhs = group_norm(f, p)
    return Check('hausdorff-young', lhs, rhs, rtol=rtol)
