"""
Inner products, the Fourier transform on A and convolution.

Normalizations::

    <f1, f2>_A   = (1/n) sum_x f1(x) conj(f2(x))
    F(f)(a)      = <f, chi_a>_A
    (f1 * f2)(x) = (1/n) sum_y f1(y) f2(x - y)

so that ``F`` is unitary from the weighted inner product on A to the
unweighted one on A*, and ``F(f1 * f2) = F(f1) F(f2)``.
"""

import functools
import logging

import numpy as np

from abelfourier import groups
from abelfourier.characters import roots_of_unity
from abelfourier.errors import OwnerMismatchError
from abelfourier.functions import GroupFunction, DualFunction


logger = logging.getLogger(__name__)

# entries of the character matrix materialized at once by the naive transforms
BLOCK_ENTRIES = 2**20
# largest group on which convolution gathers from the n x n difference table
DIFFERENCE_TABLE_MAX = 1024


def _same_owner(f1, f2):
    if type(f1) is not type(f2) or f1.owner != f2.owner:
        raise OwnerMismatchError('Cannot pair {!r} with {!r}'.format(f1, f2))


def inner_product(f1, f2):
    _same_owner(f1, f2)
    return complex(np.vdot(f2.values, f1.values) / f1.owner.n)


def dual_inner_product(h1, h2):
    """Unweighted inner product on A*"""
    _same_owner(h1, h2)
    return complex(np.vdot(h2.values, h1.values))


def _character_blocks(g):
    """Yield ``(rows, block)`` with ``block[i, x] = chi_{rows[i]}(x)``"""
    table = groups.residue_table(g)
    step = max(1, BLOCK_ENTRIES // g.n)
    for start in range(0, g.n, step):
        rows = np.arange(start, min(start + step, g.n))
        block = np.ones((len(rows), g.n), dtype=np.complex128)
        for j, m in enumerate(g.orders):
            if m == 1:
                continue
            phases = np.multiply.outer(table[rows, j], table[:, j]) % m
            block *= roots_of_unity(m)[phases]
        yield rows, block


def fourier_naive(f):
    """
    Reference O(n^2) transform ``F(f)(a) = <f, chi_a>_A``.

    Args:
        f (:class:`~abelfourier.functions.GroupFunction`): function on A

    Returns:
        :class:`~abelfourier.functions.DualFunction`

    """
    g = f.owner
    result = np.empty(g.n, dtype=np.complex128)
    for rows, block in _character_blocks(g):
        result[rows] = np.conj(block) @ f.values
    return DualFunction(g, result / g.n)


def _is_power_of_two(m):
    return m & (m - 1) == 0


@functools.lru_cache(maxsize=64)
def _bit_reversal(m):
    levels = m.bit_length() - 1
    indices = np.arange(m)
    reversed_indices = np.zeros(m, dtype=np.int64)
    for bit in range(levels):
        reversed_indices |= ((indices >> bit) & 1) << (levels - 1 - bit)
    return reversed_indices


def _radix2_last_axis(x):
    """Iterative radix-2 DFT (kernel exp(-2 pi i a x / m)) along the last axis"""
    m = x.shape[-1]
    roots = roots_of_unity(m)
    y = x[..., _bit_reversal(m)]
    size = 2
    while size <= m:
        half = size // 2
        twiddles = np.conj(roots[::m // size][:half])
        y = y.reshape(x.shape[:-1] + (m // size, size))
        even = y[..., :half]
        odd = y[..., half:] * twiddles
        y = np.concatenate([even + odd, even - odd], axis=-1).reshape(x.shape)
        size *= 2
    return y


def _naive_last_axis(x):
    m = x.shape[-1]
    grid = np.arange(m)
    kernel = np.conj(roots_of_unity(m)[np.multiply.outer(grid, grid) % m])
    return x @ kernel.T


def fourier_fast(f):
    """
    Factorized transform, one cyclic factor at a time.

    Factors whose order is a power of two use a radix-2 recursion, the
    rest use the naive kernel along that axis. Agrees with
    :func:`fourier_naive` up to rounding.

    Args:
        f (:class:`~abelfourier.functions.GroupFunction`): function on A

    Returns:
        :class:`~abelfourier.functions.DualFunction`

    """
    g = f.owner
    tensor = f.tensor().astype(np.complex128)
    for axis, m in enumerate(g.orders):
        if m == 1:
            continue
        moved = np.moveaxis(tensor, axis, -1)
        kernel = _radix2_last_axis if _is_power_of_two(m) else _naive_last_axis
        tensor = np.moveaxis(kernel(moved), -1, axis)
    return DualFunction.from_tensor(g, tensor / g.n)


fourier = fourier_fast


def inverse_fourier(h, method='fast'):
    """
    Fourier inversion ``f(x) = sum_a h(a) chi_a(x)``.

    Args:
        h (:class:`~abelfourier.functions.DualFunction`): function on A*
        method (str): ``'fast'`` or ``'naive'``

    Returns:
        :class:`~abelfourier.functions.GroupFunction`

    """
    g = h.owner
    if method == 'naive':
        result = np.empty(g.n, dtype=np.complex128)
        # the pairing is symmetric, so rows may be read as points of A
        for rows, block in _character_blocks(g):
            result[rows] = block @ h.values
        return GroupFunction(g, result)
    if method != 'fast':
        raise ValueError('Unknown method {}'.format(method))
    conjugated = GroupFunction(g, np.conj(h.values))
    return GroupFunction(g, g.n * np.conj(fourier_fast(conjugated).values))


def convolve(f1, f2):
    """
    Convolution ``(f1 * f2)(x) = (1/n) sum_y f1(y) f2(x - y)``.

    Computed directly from the definition: through the table of
    differences on small groups, otherwise as a combination of
    translates of ``f2`` weighted by the values of ``f1``.
    """
    _same_owner(f1, f2)
    g = f1.owner
    if g.n <= DIFFERENCE_TABLE_MAX:
        return GroupFunction(g, f2.values[groups.difference_indices(g)] @ f1.values / g.n)
    table = groups.residue_table(g)
    axes = tuple(range(g.k))
    tensor = f2.tensor()
    result = np.zeros(g.orders, dtype=np.complex128)
    for y in np.flatnonzero(f1.values):
        result += f1.values[y] * np.roll(tensor, shift=tuple(table[y]), axis=axes)
    return GroupFunction.from_tensor(g, result / g.n)
