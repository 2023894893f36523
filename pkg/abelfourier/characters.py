"""
Characters of a finite abelian group and its dual.

A* is identified with A through the pairing::

    chi_a(x) = exp(2 pi i sum_j a_j x_j / m_j)

so dual elements are residue tuples as well, and the product of two
characters corresponds to the sum of their residues.
"""

import functools
import logging

import numpy as np

from abelfourier import groups
from abelfourier.errors import AbelFourierError, OwnerMismatchError
from abelfourier.functions import GroupFunction


logger = logging.getLogger(__name__)

UNIT_TOL = 1e-12


class DualElement(groups.GroupElement):
    """Element of A*, the residues ``a`` of the character ``chi_a``"""

    __slots__ = ()


class UnitComplex(complex):
    """Complex number of modulus 1"""

    def __new__(cls, value):
        z = complex.__new__(cls, value)
        if abs(z.real * z.real + z.imag * z.imag - 1) > UNIT_TOL:
            raise AbelFourierError('{} does not have modulus 1'.format(complex(z)))
        return z


@functools.lru_cache(maxsize=256)
def roots_of_unity(m):
    """
    The m-th roots of unity ``exp(2 pi i r / m)``, ``r = 0 .. m-1``.

    One trigonometric evaluation per root, so there is no phase
    drift from repeated multiplication.
    """
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    roots.flags.writeable = False
    return roots


def dual_group(g):
    """A* as a :class:`~abelfourier.groups.GroupSpec` with the same orders"""
    return groups.GroupSpec(g.orders)


def dual_element(g, residues):
    return DualElement(g, residues)


def _check_dual(g, a):
    if not isinstance(a, DualElement) or a.group != g:
        raise OwnerMismatchError('{!r} is not a dual element of {}'.format(a, g))


def character_value(g, a, x):
    """
    Value ``chi_a(x)``.

    Args:
        g (:class:`~abelfourier.groups.GroupSpec`): group
        a (:class:`DualElement`): character
        x (:class:`~abelfourier.groups.GroupElement`): point

    Returns:
        :class:`UnitComplex`

    """
    _check_dual(g, a)
    if not isinstance(x, groups.GroupElement) or isinstance(x, DualElement) or x.group != g:
        raise OwnerMismatchError('{!r} is not an element of {}'.format(x, g))
    value = 1 + 0j
    for aj, xj, m in zip(a.residues, x.residues, g.orders):
        value *= roots_of_unity(m)[(aj * xj) % m]
    return UnitComplex(value)


def character_table(g, a):
    """
    Tabulate ``chi_a`` over the whole group.

    Returns:
        :class:`~abelfourier.functions.GroupFunction`

    """
    _check_dual(g, a)
    tensor = np.ones((), dtype=np.complex128)
    # axis j ends up as axis j of the tensor, first factor first
    for aj, m in zip(a.residues, g.orders):
        axis = roots_of_unity(m)[(aj * np.arange(m)) % m]
        tensor = np.multiply.outer(tensor, axis)
    return GroupFunction.from_tensor(g, tensor)


def character_product(g, a, b):
    """Pointwise product of characters, i.e. ``chi_a chi_b = chi_{a+b}``"""
    _check_dual(g, a)
    _check_dual(g, b)
    return groups.add(g, a, b)


def character_inverse(g, a):
    """``1 / chi_a = conj(chi_a) = chi_{-a}``"""
    _check_dual(g, a)
    return groups.neg(g, a)


def translate(f, a):
    """
    Translation operator ``T_a(f)(x) = f(x - a)``.

    Args:
        f (:class:`~abelfourier.functions.GroupFunction`): function
        a (:class:`~abelfourier.groups.GroupElement`): shift

    """
    g = f.owner
    if not isinstance(a, groups.GroupElement) or isinstance(a, DualElement) or a.group != g:
        raise OwnerMismatchError('{!r} is not an element of {}'.format(a, g))
    tensor = np.roll(f.tensor(), shift=a.residues, axis=tuple(range(g.k)))
    return GroupFunction.from_tensor(g, tensor)


def character_sum(g, a):
    """``sum_x chi_a(x)``: n for the unit character, 0 otherwise"""
    return complex(np.sum(character_table(g, a).values))


def is_character(g, f, tol):
    """
    Check whether ``f`` is a homomorphism into the unit circle.

    Args:
        g (:class:`~abelfourier.groups.GroupSpec`): group
        f (:class:`~abelfourier.functions.GroupFunction`): candidate
        tol (float): tolerance on both the modulus and the homomorphism defect

    Returns:
        bool

    """
    if tol <= 0:
        raise AbelFourierError('Tolerance must be positive')
    if f.owner != g:
        raise OwnerMismatchError('{!r} is not defined on {}'.format(f, g))
    values = f.values
    if np.max(np.abs(np.abs(values) - 1)) > tol:
        return False
    for i, y in enumerate(g.elements()):
        # f(x + y) over every x is the translate by -y
        shifted = translate(f, groups.neg(g, y)).values
        if np.max(np.abs(shifted - values * values[i])) > tol:
            return False
    return True


def eigencharacter(f, tol=1e-9):
    """
    Identify a joint eigenvector of all translations.

    If ``T_a(f) = lambda(a) f`` for every ``a``, then ``f`` is either zero
    or a multiple of the conjugate of ``lambda``, which is a character.

    Args:
        f (:class:`~abelfourier.functions.GroupFunction`): function
        tol (float): relative tolerance

    Returns:
        :class:`DualElement`: residues of the character ``f`` is proportional to,
        None when ``f`` is zero

    Raises:
        AbelFourierError: ``f`` is not an eigenvector of every translation

    """
    g = f.owner
    scale = np.max(np.abs(f.values))
    if scale == 0:
        return None
    base = f.values[0]
    if abs(base) <= tol * scale:
        raise AbelFourierError('Not a joint eigenvector: vanishes at 0 without vanishing everywhere')
    normalized = GroupFunction(g, f.values / base)
    if not is_character(g, normalized, tol):
        raise AbelFourierError('Not a joint eigenvector of the translations')
    # chi_a(e_j) = exp(2 pi i a_j / m_j) on the generator of factor j
    residues = []
    for j, m in enumerate(g.orders):
        generator = [0] * g.k
        generator[j] = 1 % m
        value = normalized(groups.GroupElement(g, generator))
        residues.append(int(np.rint(np.angle(value) * m / (2 * np.pi))) % m)
    return DualElement(g, residues)


def character_matrix(g):
    """
    All characters at once.

    Returns:
        :obj:`numpy.ndarray`: ``(n, n)`` array, row ``i`` is the character
        with canonical dual index ``i``

    """
    table = groups.residue_table(g)
    matrix = np.ones((g.n, g.n), dtype=np.complex128)
    for j, m in enumerate(g.orders):
        if m > 1:
            matrix *= roots_of_unity(m)[np.multiply.outer(table[:, j], table[:, j]) % m]
    return matrix
