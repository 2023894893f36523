"""
Complex valued functions on a group A and on its dual A*.

Values are stored as a read-only ``complex128`` array of length n in
canonical index order (see :mod:`abelfourier.groups`).
"""

import numpy as np

from abelfourier import groups
from abelfourier.errors import AbelFourierError, OwnerMismatchError


class _TabulatedFunction:

    __slots__ = ('owner', 'values')

    def __init__(self, owner, values):
        values = np.array(values, dtype=np.complex128)
        if values.ndim != 1 or values.shape[0] != owner.n:
            raise OwnerMismatchError('{} expects {} values, got shape {}'.format(owner, owner.n, values.shape))
        if not np.all(np.isfinite(values)):
            raise AbelFourierError('Function values must be finite')
        values.flags.writeable = False
        self.owner = owner
        self.values = values

    @classmethod
    def from_tensor(cls, owner, tensor):
        """Build from an array of shape ``owner.orders`` indexed by residues"""
        return cls(owner, np.asarray(tensor).reshape(-1, order='F'))

    @classmethod
    def constant(cls, owner, value=1.0):
        return cls(owner, np.full(owner.n, value, dtype=np.complex128))

    @classmethod
    def zeros(cls, owner):
        return cls.constant(owner, 0.0)

    @classmethod
    def random(cls, owner, rng):
        """Standard complex normal values drawn from ``rng``"""
        return cls(owner, rng.standard_normal(owner.n) + 1j * rng.standard_normal(owner.n))

    @classmethod
    def from_json(cls, owner, data):
        """
        Args:
            owner (:class:`~abelfourier.groups.GroupSpec`): group
            data (list): ``[re, im]`` pairs in canonical index order

        """
        try:
            values = [complex(re, im) for re, im in data]
        except (TypeError, ValueError) as e:
            raise AbelFourierError('Function values must be [re, im] pairs: {}'.format(e))
        return cls(owner, values)

    def to_json(self):
        return [[float(z.real), float(z.imag)] for z in self.values]

    def tensor(self):
        return self.values.reshape(self.owner.orders, order='F')

    def _same_owner(self, other):
        if type(other) is not type(self) or other.owner != self.owner:
            raise OwnerMismatchError('Cannot combine {!r} with {!r}'.format(self, other))

    def __call__(self, element):
        return self.values[groups.index_of(self.owner, element)]

    def __len__(self):
        return self.owner.n

    def __add__(self, other):
        self._same_owner(other)
        return type(self)(self.owner, self.values + other.values)

    def __sub__(self, other):
        self._same_owner(other)
        return type(self)(self.owner, self.values - other.values)

    def __mul__(self, other):
        if isinstance(other, _TabulatedFunction):
            self._same_owner(other)
            return type(self)(self.owner, self.values * other.values)
        return type(self)(self.owner, self.values * complex(other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return type(self)(self.owner, self.values / complex(scalar))

    def __neg__(self):
        return type(self)(self.owner, -self.values)

    def conj(self):
        return type(self)(self.owner, np.conj(self.values))

    def __repr__(self):
        return '{}({}, n={})'.format(type(self).__name__, self.owner, self.owner.n)


class GroupFunction(_TabulatedFunction):
    """
    Function on A.

    Args:
        owner (:class:`~abelfourier.groups.GroupSpec`): group
        values: n complex values in canonical order

    """

    __slots__ = ()

    @classmethod
    def delta0(cls, owner):
        """The function equal to n at 0 and to 0 elsewhere"""
        values = np.zeros(owner.n, dtype=np.complex128)
        values[0] = owner.n
        return cls(owner, values)

    def reflect(self):
        """``x -> f(-x)``"""
        return GroupFunction(self.owner, self.values[groups.negation_indices(self.owner)])


class DualFunction(_TabulatedFunction):
    """
    Function on A*, indexed by dual elements in canonical order.

    Args:
        owner (:class:`~abelfourier.groups.GroupSpec`): the dual group
        values: n complex values in canonical order

    """

    __slots__ = ()
