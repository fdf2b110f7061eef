#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Final, penalty and driver Hamiltonians for clustering on qutrits.

Every final and penalty term is diagonal in the computational basis and is
kept as a real vector of length 3**n. The transverse-field driver is kept
structured and applied site by site.

@version  0.1.0
@license  MIT
"""


from dataclasses import dataclass
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from clustering import pair_indices
from qutrits import (
    basis_projections, block_states, from_linear, group_projector_diagonal,
    spin_operator
)
from utils import ceil_log3, check_choice, check_positive
import utils.logger as logger


__all__ = [
    'METHODS', 'DiagonalHamiltonian', 'DriverHamiltonian', 'EncodingScheme',
    'default_centroid_states', 'register_size', 'point_projections',
    'point_blocks', 'build_onehot_k3',
    'build_onehot_k3_pinned', 'build_k2_penalty', 'build_onehot_multispin',
    'build_penalty_onehot', 'build_kmeanspp', 'build_penalty_kmeanspp',
    'build_driver'
]

METHODS = [
    'one-hot-K3', 'one-hot-K3-pinned', 'one-hot-K2-penalty',
    'one-hot-multispin', 'kmeanspp'
]

log = logger.get(__name__)


@dataclass(frozen=True, eq=False)
class DiagonalHamiltonian:
    """A Hamiltonian diagonal in the computational basis of `n` qutrits."""
    n: int
    diag: np.ndarray

    def __post_init__(self):
        diag = np.array(self.diag, dtype=float)
        if diag.shape != (3 ** self.n,):
            raise ValueError(
                f'diag of shape {diag.shape} does not fit {self.n} qutrits!'
            )
        if not np.all(np.isfinite(diag)):
            raise ValueError('diag has non-finite entries!')
        diag.flags.writeable = False
        object.__setattr__(self, 'diag', diag)

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError(f'n = {other.n} does not match n = {self.n}!')
        return DiagonalHamiltonian(self.n, self.diag + other.diag)

    @property
    def dim(self) -> int:
        return 3 ** self.n

    def matvec(self, x: np.ndarray) -> np.ndarray:
        return self.diag * x

    def expectation(self, psi: np.ndarray) -> float:
        """Returns <psi|H|psi>."""
        return float(np.sum(self.diag * np.abs(psi) ** 2))


@dataclass(frozen=True)
class DriverHamiltonian:
    """Transverse field h * sum_i S^x_i on `n` qutrits."""
    n: int
    h: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f'n = {self.n} is not valid! Must be >= 1.')
        check_positive('h', self.h)

    @property
    def dim(self) -> int:
        return 3 ** self.n

    @property
    def ground_energy(self) -> float:
        return -self.n * self.h

    def matvec(self, x: np.ndarray) -> np.ndarray:
        """Applies the driver to `x` one site at a time."""
        sx = spin_operator('x').real
        psi = np.asarray(x).reshape((3,) * self.n)
        out = np.zeros_like(psi)
        for axis in range(self.n):
            out += np.moveaxis(np.tensordot(sx, psi, axes=([1], [axis])),
                               0, axis)
        return self.h * out.reshape(-1)

    @cached_property
    def sparse(self) -> sp.csr_matrix:
        """The driver as a sparse CSR matrix, built on first use."""
        sx = sp.csr_matrix(spin_operator('x').real)
        total = sp.csr_matrix((self.dim, self.dim))
        for i in range(self.n):
            left = sp.identity(3 ** i, format='csr')
            right = sp.identity(3 ** (self.n - 1 - i), format='csr')
            total = total + sp.kron(sp.kron(left, sx), right, format='csr')
        return (self.h * total).tocsr()


def default_centroid_states(K: int, spins: int) -> list:
    """First `K` block states of the lexicographic numbering."""
    return [from_linear(q, spins).digits for q in range(K)]


@dataclass(frozen=True)
class EncodingScheme:
    """How points and clusters are laid out on the register.

    Attributes:
        method (str): One of `METHODS`.
        K (int): Cluster count.
        spins_per_point (int): Qutrits per point block.
        centroid_states (tuple): Block state per centroid (kmeanspp only).
        penalty_constant (float): a or b; None picks 2 * max distance.
        pinned (bool): Point 0 fixed at projection 1.
    """
    method: str
    K: int
    spins_per_point: int = None
    centroid_states: tuple = None
    penalty_constant: float = None
    pinned: bool = False

    def __post_init__(self):
        check_choice('method', self.method, METHODS)

        if self.method in ('one-hot-K3', 'one-hot-K3-pinned') and self.K != 3:
            raise ValueError(f'K = {self.K} is not valid for {self.method}!')
        if self.method == 'one-hot-K2-penalty' and self.K != 2:
            raise ValueError(f'K = {self.K} is not valid for {self.method}!')
        if self.K < 2:
            raise ValueError(f'K = {self.K} is not valid! Must be >= 2.')
        if self.method == 'one-hot-K3-pinned':
            object.__setattr__(self, 'pinned', True)

        spins = ceil_log3(self.K)
        if self.spins_per_point is None:
            object.__setattr__(self, 'spins_per_point', spins)
        elif self.spins_per_point != spins:
            raise ValueError(
                f'spins_per_point = {self.spins_per_point} is not valid! '
                f'K = {self.K} needs {spins}.'
            )

        if self.penalty_constant is not None:
            check_positive('penalty_constant', self.penalty_constant)

        if self.method == 'kmeanspp':
            states = self.centroid_states
            if states is None:
                states = default_centroid_states(self.K, spins)
            states = tuple(tuple(int(m) for m in s) for s in states)
            if len(states) != self.K:
                raise ValueError(
                    f'centroid_states has {len(states)} states, needs K = '
                    f'{self.K}!'
                )
            if len(set(states)) != len(states):
                raise ValueError(f'centroid_states = {states} has duplicates!')
            for s in states:
                if len(s) != spins:
                    raise ValueError(
                        f'centroid state {s} is not valid for blocks of '
                        f'{spins} spins!'
                    )
                group_projector_diagonal(range(spins), s, spins)
            object.__setattr__(self, 'centroid_states', states)
        elif self.centroid_states is not None:
            raise ValueError(
                f'centroid_states given for method = {self.method}!'
            )

    @property
    def needs_penalty(self) -> bool:
        """True when some block states name no cluster."""
        return self.method in ('one-hot-multispin', 'kmeanspp') \
            and self.K < 3 ** self.spins_per_point


def register_size(scheme: EncodingScheme, n_points: int) -> int:
    """Qutrits needed for `n_points` under `scheme`."""
    if scheme.method in ('one-hot-K3', 'one-hot-K3-pinned',
                         'one-hot-K2-penalty'):
        return n_points - 1 if scheme.pinned else n_points
    if scheme.method == 'one-hot-multispin':
        return n_points * scheme.spins_per_point
    return (n_points - scheme.K) * scheme.spins_per_point


def point_projections(n_points: int, pinned: bool) -> np.ndarray:
    """Projection of every point in every basis state.

    With `pinned`, point 0 has no qutrit and always reads projection 1.
    """
    if not pinned:
        return basis_projections(n_points)
    proj = basis_projections(n_points - 1)
    return np.hstack([np.ones((len(proj), 1), dtype=int), proj])


def _pair_terms(dm: np.ndarray, same: np.ndarray) -> np.ndarray:
    """Sum over pairs of d_ij * (2 * same_ij - 1)."""
    i, j = pair_indices(len(dm))
    return (2 * same.astype(float) - 1) @ dm[i, j]


def build_onehot_k3(dm: np.ndarray) -> DiagonalHamiltonian:
    """Three-cluster one-hot Hamiltonian, one qutrit per point."""
    n_points = len(dm)
    proj = point_projections(n_points, False)
    i, j = pair_indices(n_points)
    return DiagonalHamiltonian(n_points,
                               _pair_terms(dm, proj[:, i] == proj[:, j]))


def build_onehot_k3_pinned(dm: np.ndarray) -> DiagonalHamiltonian:
    """Three-cluster one-hot Hamiltonian with point 0 pinned at |1>.

    Qutrit j - 1 represents point j. Pairs with point 0 reduce to the field
    terms d_0j * (2 P(1)_j - 1).
    """
    n_points = len(dm)
    if n_points < 2:
        raise ValueError(f'n_points = {n_points} is not valid! Need >= 2.')
    proj = point_projections(n_points, True)
    i, j = pair_indices(n_points)
    return DiagonalHamiltonian(n_points - 1,
                               _pair_terms(dm, proj[:, i] == proj[:, j]))


def build_k2_penalty(dm: np.ndarray, pinned: bool = True) \
        -> DiagonalHamiltonian:
    """Two-cluster one-hot Hamiltonian that penalizes projection -1.

    Each pair adds 2 * d_ij * (P(-1)_i + P(-1)_j), so |-1,-1> costs 4 * d_ij.
    """
    n_points = len(dm)
    proj = point_projections(n_points, pinned)
    i, j = pair_indices(n_points)
    diag = _pair_terms(dm, proj[:, i] == proj[:, j])
    minus = (proj == -1).astype(float)
    diag = diag + (minus[:, i] + minus[:, j]) @ (2 * dm[i, j])
    n = n_points - 1 if pinned else n_points
    return DiagonalHamiltonian(n, diag)


def point_blocks(n_points: int, spins: int) -> np.ndarray:
    """Block state index of every point in every basis state."""
    n = n_points * spins
    return np.stack(
        [block_states(n, p * spins, spins) for p in range(n_points)], axis=1
    )


def build_onehot_multispin(dm: np.ndarray, K: int) -> DiagonalHamiltonian:
    """One-hot Hamiltonian numbering clusters by multi-spin block states.

    Point p owns qutrits p*s .. p*s + s - 1 with s = ceil(log3 K); two points
    share a cluster when their blocks hold the same one of the first K states.
    """
    if K < 2:
        raise ValueError(f'K = {K} is not valid! Must be >= 2.')
    n_points = len(dm)
    spins = ceil_log3(K)
    blocks = point_blocks(n_points, spins)
    i, j = pair_indices(n_points)
    same = (blocks[:, i] == blocks[:, j]) & (blocks[:, i] < K)
    log.debug(f'multispin K={K}: {n_points} points x {spins} spins')
    return DiagonalHamiltonian(n_points * spins, _pair_terms(dm, same))


def _forbidden_states(allowed, spins: int) -> list:
    allowed = set(allowed)
    return [from_linear(q, spins).digits for q in range(3 ** spins)
            if from_linear(q, spins).digits not in allowed]


def _block_penalty(n_blocks: int, spins: int, forbidden, weight: float) \
        -> DiagonalHamiltonian:
    n = n_blocks * spins
    diag = np.zeros(3 ** n)
    for p in range(n_blocks):
        sites = range(p * spins, (p + 1) * spins)
        for state in forbidden:
            diag += weight * group_projector_diagonal(sites, state, n)
    return DiagonalHamiltonian(n, diag)


def build_penalty_onehot(n_points: int, K: int, a: float) \
        -> DiagonalHamiltonian:
    """Adds `a` for every point whose block state index is >= K."""
    check_positive('a', a)
    spins = ceil_log3(K)
    allowed = default_centroid_states(K, spins)
    return _block_penalty(n_points, spins, _forbidden_states(allowed, spins),
                          a)


def build_kmeanspp(dm_centroid_point: np.ndarray, scheme: EncodingScheme) \
        -> DiagonalHamiltonian:
    """k-means++ Hamiltonian over the free (non-centroid) points.

    Parameters:
        dm_centroid_point (np.ndarray): (K, F) distances d[c][j] from
            centroid c to free point j.
        scheme (EncodingScheme): Supplies the centroid states.

    Returns:
        DiagonalHamiltonian: sum_c sum_j d[c][j] * (2 P(phi_c)_j - 1) on
        F * spins_per_point qutrits.
    """
    if scheme.method != 'kmeanspp':
        raise ValueError(f'method = {scheme.method} is not kmeanspp!')
    d = np.asarray(dm_centroid_point, dtype=float)
    if d.ndim != 2 or d.shape[0] != scheme.K:
        raise ValueError(
            f'distances of shape {d.shape} do not fit K = {scheme.K}!'
        )

    spins = scheme.spins_per_point
    n_free = d.shape[1]
    n = n_free * spins
    diag = np.zeros(3 ** n)
    for c, state in enumerate(scheme.centroid_states):
        for j in range(n_free):
            sites = range(j * spins, (j + 1) * spins)
            diag += d[c, j] * (2 * group_projector_diagonal(sites, state, n)
                               - 1)
    return DiagonalHamiltonian(n, diag)


def build_penalty_kmeanspp(n_free_points: int, scheme: EncodingScheme,
                           b: float) -> DiagonalHamiltonian:
    """Adds `b` for every free point whose block holds no centroid state."""
    check_positive('b', b)
    spins = scheme.spins_per_point
    forbidden = _forbidden_states(scheme.centroid_states, spins)
    return _block_penalty(n_free_points, spins, forbidden, b)


def build_driver(n: int, h: float) -> DriverHamiltonian:
    """Transverse-field driver h * sum_i S^x_i."""
    check_positive('h', h)
    return DriverHamiltonian(n, float(h))


if __name__ == '__main__':
    pass
