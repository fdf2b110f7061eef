#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Spin-1 operators, projectors and base-3 register indexing.

Single-site basis order is (|1>, |0>, |-1>), i.e. projection m maps to digit
1 - m. Register states are numbered with site 0 as the most significant
base-3 digit, so |1, 1, ..., 1> is index 0.

@version  0.1.0
@license  MIT
"""


from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from utils import check_choice


PROJECTIONS = (1, 0, -1)
KINDS = ['x', 'z']

__all__ = [
    'PROJECTIONS', 'BasisIndex', 'spin_operator', 'projector', 'basis_index',
    'from_linear', 'basis_digits', 'basis_projections', 'block_states',
    'group_projector_diagonal'
]


@dataclass(frozen=True)
class BasisIndex:
    """A computational basis state of an `n`-qutrit register.

    Attributes:
        n (int): Qutrit count.
        digits (tuple): Spin projections m_i, site 0 first.
        linear (int): Position in the 3**n state vector.
    """
    n: int
    digits: tuple
    linear: int


def spin_operator(kind: str) -> np.ndarray:
    """Returns the 3x3 spin-1 operator S^`kind`.

    Parameters:
        kind (str): 'x' or 'z'.

    Returns:
        np.ndarray: Complex 3x3 matrix in (|1>, |0>, |-1>) order.
    """
    check_choice('kind', kind, KINDS)

    if kind == 'z':
        return np.diag([1.0, 0.0, -1.0]).astype(complex)

    return np.array(
        [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0], [0.0, 1.0, 0.0]], dtype=complex
    ) / np.sqrt(2)


def projector(m: int) -> np.ndarray:
    """Returns |m><m| evaluated as a polynomial in S^z.

    Parameters:
        m (int): Spin projection, one of `PROJECTIONS`.

    Returns:
        np.ndarray: Real 3x3 projector.
    """
    check_choice('m', m, PROJECTIONS)

    sz = spin_operator('z').real
    one = np.eye(3)

    if m == 1:
        p = sz @ (one + sz) / 2
    elif m == 0:
        p = one - sz @ sz
    else:
        p = -sz @ (one - sz) / 2

    return p


def basis_index(digits) -> BasisIndex:
    """Maps spin projections (site 0 first) to their basis index."""
    digits = tuple(int(m) for m in digits)
    for m in digits:
        check_choice('m', m, PROJECTIONS)

    linear = 0
    for m in digits:
        linear = 3 * linear + (1 - m)

    return BasisIndex(n=len(digits), digits=digits, linear=linear)


def from_linear(linear: int, n: int) -> BasisIndex:
    """Inverse of `basis_index`."""
    if not 0 <= linear < 3 ** n:
        raise ValueError(f'linear = {linear} is not valid for n = {n}!')

    digits = []
    rest = linear
    for _ in range(n):
        rest, d = divmod(rest, 3)
        digits.append(1 - d)

    return BasisIndex(n=n, digits=tuple(reversed(digits)), linear=linear)


@lru_cache(maxsize=None)
def basis_digits(n: int) -> np.ndarray:
    """Returns a read-only (3**n, n) table of base-3 digits of every state."""
    table = np.indices((3,) * n).reshape(n, -1).T.astype(np.int8)
    table.flags.writeable = False
    return table


def basis_projections(n: int) -> np.ndarray:
    """Returns the (3**n, n) table of spin projections of every state."""
    return 1 - basis_digits(n).astype(int)


def block_states(n: int, start: int, size: int) -> np.ndarray:
    """Returns, per basis state, the index of the block `start:start+size`.

    Block states are ordered lexicographically in the digits, which is the
    psi_1, psi_2, ... numbering |1,1>, |1,0>, |1,-1>, |0,1>, ...
    """
    digits = basis_digits(n)[:, start:start + size].astype(int)
    weights = 3 ** np.arange(size - 1, -1, -1)
    return digits @ weights


def group_projector_diagonal(sites, state, n: int) -> np.ndarray:
    """Diagonal of the projector onto `state` on a block of sites.

    Parameters:
        sites (sequence): Contiguous register sites of the block.
        state (sequence): Spin projections of the block, one per site.
        n (int): Register size.

    Returns:
        np.ndarray: 0/1 float vector of length 3**n.
    """
    sites = list(sites)
    state = tuple(state)

    if len(state) != len(sites):
        raise ValueError(
            f'state = {state} does not match block of {len(sites)} sites!'
        )
    if sites != list(range(sites[0], sites[0] + len(sites))):
        raise ValueError(f'sites = {sites} is not a contiguous block!')
    if sites[-1] >= n:
        raise ValueError(f'sites = {sites} exceed register of {n} qutrits!')

    target = basis_index(state).linear
    return (block_states(n, sites[0], len(sites)) == target).astype(float)


if __name__ == '__main__':
    pass
