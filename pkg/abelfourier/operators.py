"""
Convolution operators ``T_b(f) = f * b`` on a finite abelian group.
"""

import logging

import numpy as np

from abelfourier import characters, groups, spectral
from abelfourier.checks import Check, CheckReport
from abelfourier.errors import ExponentError, OwnerMismatchError
from abelfourier.functions import GroupFunction
from abelfourier.norms import ONE, TWO, INFINITY, conjugate_exponent, group_norm, dual_pnorm


logger = logging.getLogger(__name__)

AGGREGATE_TOL = 1e-9


class ConvKernel:
    """
    Fixed kernel ``b`` of a convolution operator.

    ``||b||_{1,A}``, ``F(b)`` and ``||F(b)||_{inf,A*}`` are computed once.

    Args:
        b (:class:`~abelfourier.functions.GroupFunction`): kernel

    """

    __slots__ = ('b', 'norm1', 'spectrum', 'spectral_sup')

    def __init__(self, b):
        if not isinstance(b, GroupFunction):
            raise OwnerMismatchError('A kernel must be a function on a group, got {!r}'.format(b))
        self.b = b
        self.norm1 = group_norm(b, ONE)
        self.spectrum = spectral.fourier_fast(b)
        self.spectral_sup = dual_pnorm(self.spectrum, INFINITY)

    @property
    def owner(self):
        return self.b.owner

    def __repr__(self):
        return 'ConvKernel({})'.format(self.owner)


def conv_apply(k, f):
    if f.owner != k.owner:
        raise OwnerMismatchError('Kernel on {} applied to a function on {}'.format(k.owner, f.owner))
    return spectral.convolve(f, k.b)


def _power(base, exponent):
    # 0^0 is taken as 1, the limit along the interpolation path
    if exponent == 0:
        return 1.0
    return base ** exponent


def bound_p(k, p):
    """
    Interpolated bound of ``||T_b||_{p -> p}``::

        ||b||_{1,A}^(2/p - 1) ||F(b)||_{inf,A*}^(2 - 2/p)      (1 <= p <= 2)

    and the bound at ``p'`` when ``p > 2``.
    """
    if p.recip < 0.5:
        return bound_p(k, conjugate_exponent(p))
    return _power(k.norm1, 2 * p.recip - 1) * _power(k.spectral_sup, 2 - 2 * p.recip)


def reflect(k):
    """Kernel ``b~(z) = b(-z)``"""
    return ConvKernel(k.b.reflect())


def duality_pairing_check(k, f1, f2, rtol=AGGREGATE_TOL):
    """
    The transfer identity behind the duality argument::

        (1/n) sum_x T_b(f1)(x) f2(x) = (1/n) sum_y f1(y) T_b~(f2)(y)

    together with ``T_b~(f)(-x) = T_b(f~)(x)`` entrywise.
    """
    if not (f1.owner == f2.owner == k.owner):
        raise OwnerMismatchError('Kernel and functions must share the group')
    n = k.owner.n
    reflected = reflect(k)
    lhs = complex(np.sum(conv_apply(k, f1).values * f2.values)) / n
    rhs = complex(np.sum(f1.values * conv_apply(reflected, f2).values)) / n
    scale = k.norm1 * group_norm(f1, TWO) * group_norm(f2, TWO)

    left = conv_apply(reflected, f1).values[groups.negation_indices(k.owner)]
    right = conv_apply(k, f1.reflect()).values
    deviation = float(np.max(np.abs(left - right)))
    entry_scale = k.norm1 * group_norm(f1, INFINITY)

    return CheckReport('duality-pairing', [
        Check('pairing-identity', lhs, rhs, relation='==', atol=rtol * scale + 1e-12),
        Check('reflection-identity', deviation, 0.0, relation='==', atol=rtol * entry_scale + 1e-12)
    ])


def sharpness_witness(k, p):
    """
    Input attaining the endpoint bounds.

    ``p = 1``: ``delta_0``, ratio ``||b||_{1,A}``. ``p = 2``: the character
    maximizing ``|F(b)|`` (smallest canonical index on ties), ratio
    ``||F(b)||_{inf,A*}``.

    Returns:
        tuple: witness function and ``||T_b f||_p / ||f||_p``

    Raises:
        ExponentError: p not in {1, 2}

    """
    g = k.owner
    if p == ONE:
        f = GroupFunction.delta0(g)
    elif p == TWO:
        best = int(np.argmax(np.abs(k.spectrum.values)))
        a = groups.element_at(g, best, kind=characters.DualElement)
        f = characters.character_table(g, a)
    else:
        raise ExponentError('Sharpness witnesses exist for p=1 and p=2 only, got p={}'.format(p))
    ratio = group_norm(conv_apply(k, f), p) / group_norm(f, p)
    return f, ratio


def operator_bound_check(k, f, p, rtol=AGGREGATE_TOL, image=None):
    """
    ``||T_b f||_{p,A} <= bound_p(b, p) ||f||_{p,A}``

    ``image`` can carry ``T_b f`` when checking many exponents.
    """
    if image is None:
        image = conv_apply(k, f)
    lhs = group_norm(image, p)
    rhs = bound_p(k, p) * group_norm(f, p)
    return Check('operator-bound', lhs, rhs, rtol=rtol)


def diagonalization_check(k, f, rtol=AGGREGATE_TOL):
    """``F(T_b f) = F(b) F(f)`` entrywise"""
    transformed = spectral.fourier_fast(conv_apply(k, f)).values
    product = k.spectrum.values * spectral.fourier_fast(f).values
    deviation = float(np.max(np.abs(transformed - product)))
    scale = group_norm(k.b, TWO) * group_norm(f, TWO)
    return Check('diagonalization', deviation, 0.0, relation='==', atol=rtol * scale + 1e-12)


def reflection_norm_check(k, f, p, rtol=AGGREGATE_TOL):
    """
    Reflection of inputs preserves norms: ``||T_b~ f||_p = ||T_b f~||_p``,
    and the bound ``M = bound_p(b, p)`` holds for ``T_b~`` at ``p`` and ``p'``.
    """
    reflected = reflect(k)
    left = group_norm(conv_apply(reflected, f), p)
    right = group_norm(conv_apply(k, f.reflect()), p)
    bound = bound_p(k, p)
    return CheckReport('reflection', [
        Check('reflection-norm', left, right, relation='==', rtol=rtol, atol=1e-12),
        Check('reflected-bound', left, bound * group_norm(f, p), rtol=rtol),
        Check('reflected-bound-conjugate', group_norm(conv_apply(reflected, f), conjugate_exponent(p)),
              bound * group_norm(f, conjugate_exponent(p)), rtol=rtol)
    ])
