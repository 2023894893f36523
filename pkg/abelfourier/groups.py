"""
Finite abelian groups as explicit products of cyclic groups.

Elements are tuples of residues. The canonical enumeration is the
little-endian mixed-radix order, the first factor varies fastest::

    index = x_1 + m_1 * (x_2 + m_2 * (x_3 + ...))

Every other module relies on this order (function values, dual
functions, fixtures).
"""

import re
import functools

import numpy as np

from abelfourier.errors import GroupError, OwnerMismatchError


MAX_ORDER = np.iinfo(np.int64).max

_LIST_GRAMMAR = re.compile(r'^\s*\d+(\s*,\s*\d+)*\s*$')
_CYCLIC_GRAMMAR = re.compile(r'^\s*Z\d+(\s*x\s*Z\d+)*\s*$')


class GroupSpec:
    """
    Finite abelian group Z_{m_1} x ... x Z_{m_k}.

    Trivial factors (order 1) are kept so parsed specs round-trip.

    Args:
        orders (iterable): cyclic orders, each >= 1

    """

    __slots__ = ('orders', 'n')

    def __init__(self, orders):
        orders = tuple(int(m) for m in orders)
        if len(orders) == 0:
            raise GroupError('A group needs at least one cyclic factor')
        if any(m < 1 for m in orders):
            raise GroupError('Cyclic orders must be >= 1, got {}'.format(orders))
        n = 1
        for m in orders:
            n *= m
            if n > MAX_ORDER:
                raise GroupError('Group order overflows a 64 bit integer: {}'.format(orders))
        self.orders = orders
        self.n = n

    @property
    def k(self):
        """Number of cyclic factors"""
        return len(self.orders)

    def zero(self):
        return GroupElement(self, (0,) * self.k)

    def elements(self):
        """Yield the elements in canonical order"""
        for i in range(self.n):
            yield element_at(self, i)

    def __eq__(self, other):
        return isinstance(other, GroupSpec) and self.orders == other.orders

    def __hash__(self):
        return hash(self.orders)

    def __str__(self):
        return 'x'.join('Z{}'.format(m) for m in self.orders)

    def __repr__(self):
        return 'GroupSpec({})'.format(str(self))


class GroupElement:
    """
    Element of a :class:`GroupSpec`, stored as reduced residues.

    Args:
        group (:class:`GroupSpec`): owner
        residues (iterable): one integer per factor, reduced modulo its order

    """

    __slots__ = ('group', 'residues')

    def __init__(self, group, residues):
        residues = tuple(int(x) for x in residues)
        if len(residues) != group.k:
            raise OwnerMismatchError('Element {} has {} residues but {} has {} factors'.format(
                residues, len(residues), group, group.k))
        self.group = group
        self.residues = tuple(x % m for x, m in zip(residues, group.orders))

    def __eq__(self, other):
        return type(self) is type(other) and self.group == other.group and self.residues == other.residues

    def __hash__(self):
        return hash((type(self).__name__, self.group, self.residues))

    def __repr__(self):
        return '{}({}, {})'.format(type(self).__name__, self.group, self.residues)


def parse_group_spec(text):
    """
    Parse a group spec.

    Two spellings are accepted: ``"4,2,3"`` and ``"Z4xZ2xZ3"``.

    Args:
        text (str): group spec

    Returns:
        :class:`GroupSpec`

    Raises:
        GroupError: malformed text, order < 1 or overflow

    """
    if text is None:
        raise GroupError('Empty group spec')
    if _LIST_GRAMMAR.match(text):
        orders = [int(token) for token in text.split(',')]
    elif _CYCLIC_GRAMMAR.match(text):
        orders = [int(token.strip()[1:]) for token in text.split('x')]
    else:
        raise GroupError("Malformed group spec '{}'".format(text))
    return GroupSpec(orders)


def _check_owner(g, *elements):
    kind = type(elements[0])
    for a in elements:
        if not isinstance(a, GroupElement) or a.group != g:
            raise OwnerMismatchError('{!r} is not an element of {}'.format(a, g))
        if type(a) is not kind:
            raise OwnerMismatchError('Cannot combine {} with {}'.format(kind.__name__, type(a).__name__))


def add(g, a, b):
    _check_owner(g, a, b)
    return type(a)(g, [(x + y) % m for x, y, m in zip(a.residues, b.residues, g.orders)])


def neg(g, a):
    _check_owner(g, a)
    return type(a)(g, [(-x) % m for x, m in zip(a.residues, g.orders)])


def sub(g, a, b):
    return add(g, a, neg(g, b))


def index_of(g, a):
    """Canonical index of ``a`` (little-endian mixed radix)"""
    _check_owner(g, a)
    index = 0
    for x, m in zip(reversed(a.residues), reversed(g.orders)):
        index = index * m + x
    return index


def element_at(g, i, kind=None):
    """
    Inverse of :func:`index_of`.

    Args:
        g (:class:`GroupSpec`): group
        i (int): index in ``[0, n)``
        kind (type): element class to build. Defaults to :class:`GroupElement`

    """
    i = int(i)
    if not 0 <= i < g.n:
        raise GroupError('Index {} out of range for {} (n={})'.format(i, g, g.n))
    residues = []
    for m in g.orders:
        i, x = divmod(i, m)
        residues.append(x)
    return (kind or GroupElement)(g, residues)


@functools.lru_cache(maxsize=32)
def _residue_table(orders):
    n = int(np.prod(orders, dtype=np.int64))
    table = np.column_stack(np.unravel_index(np.arange(n), orders, order='F'))
    table.flags.writeable = False
    return table


def residue_table(g):
    """
    Residues of every element in canonical order.

    Returns:
        :obj:`numpy.ndarray`: read-only integer array of shape ``(n, k)``

    """
    return _residue_table(g.orders)


@functools.lru_cache(maxsize=32)
def _negation_indices(orders):
    g = GroupSpec(orders)
    residues = (-_residue_table(orders)) % np.array(orders)
    indices = indices_of(g, residues)
    indices.flags.writeable = False
    return indices


def negation_indices(g):
    """Index of ``-x`` for every ``x`` in canonical order"""
    return _negation_indices(g.orders)


def indices_of(g, residues):
    """Vectorized :func:`index_of` over an ``(N, k)`` array of reduced residues"""
    residues = np.asarray(residues, dtype=np.int64)
    return np.ravel_multi_index(tuple(residues.T), g.orders, order='F')


@functools.lru_cache(maxsize=8)
def _difference_indices(orders):
    g = GroupSpec(orders)
    residues = _residue_table(orders)
    differences = (residues[:, None, :] - residues[None, :, :]) % np.array(orders)
    indices = indices_of(g, differences.reshape(-1, g.k)).reshape(g.n, g.n)
    indices.flags.writeable = False
    return indices


def difference_indices(g):
    """
    Table of ``index(x - y)`` with rows indexed by ``x`` and columns by ``y``.

    Quadratic in n, meant for small groups.
    """
    return _difference_indices(g.orders)
