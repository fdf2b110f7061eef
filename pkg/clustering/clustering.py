#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Clustering problem data, cost function and the exhaustive oracle.

@version  0.1.0
@license  MIT
"""


import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import pdist, squareform

import config
from qutrits import from_linear
from utils import check_limit


__all__ = [
    'PointSet', 'Partition', 'OracleResult', 'distance', 'distance_matrix',
    'pair_indices', 'cost', 'enumerate_assignments', 'oracle_min',
    'oracle_diag_min'
]

"""float: Absolute tolerance when collecting degenerate minima."""
DEGENERACY_ATOL = 1e-9


@dataclass(frozen=True)
class PointSet:
    """Ordered 2-D points with optional display labels."""
    points: tuple
    labels: tuple = None

    def __post_init__(self):
        points = tuple((float(x), float(y)) for x, y in self.points)
        if len(points) < 2:
            raise ValueError(f'points = {points} is not valid! Need >= 2.')
        if self.labels is not None and len(self.labels) != len(points):
            raise ValueError(
                f'labels = {self.labels} does not match {len(points)} points!'
            )
        object.__setattr__(self, 'points', points)
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(self.labels))

    def __len__(self):
        return len(self.points)

    def coords(self) -> np.ndarray:
        """Returns the (N, 2) coordinate array."""
        return np.array(self.points)

    def label(self, i: int) -> str:
        if self.labels is not None:
            return str(self.labels[i])
        x, y = self.points[i]
        return f'({x:g}, {y:g})'


class Partition:
    """An assignment of points to cluster labels.

    Two partitions are equal when they induce the same set partition, no
    matter which label names each cluster.
    """

    def __init__(self, assignment, K: int = None):
        """
        Parameters:
            assignment (sequence): Cluster label per point, in [0, K).
            K (int): Cluster count. Defaults to max label + 1.
        """
        self.assignment = tuple(int(a) for a in assignment)
        self.K = K if K is not None else max(self.assignment) + 1
        if any(a < 0 or a >= self.K for a in self.assignment):
            raise ValueError(
                f'assignment = {self.assignment} is not valid for '
                f'K = {self.K}!'
            )
        self._canonical = self.canonical(self.assignment)

    @staticmethod
    def canonical(assignment) -> tuple:
        """Relabels clusters in order of first appearance."""
        names = {}
        out = []
        for a in assignment:
            if a not in names:
                names[a] = len(names)
            out.append(names[a])
        return tuple(out)

    @classmethod
    def from_blocks(cls, blocks, n_points: int = None):
        """Builds a partition from an iterable of point-index blocks."""
        blocks = [sorted(b) for b in blocks]
        if n_points is None:
            n_points = sum(len(b) for b in blocks)
        assignment = [-1] * n_points
        for k, block in enumerate(blocks):
            for i in block:
                assignment[i] = k
        return cls(assignment, K=len(blocks))

    def blocks(self) -> tuple:
        """Returns the non-empty clusters as sorted tuples of point indices."""
        groups = {}
        for i, a in enumerate(self.assignment):
            groups.setdefault(a, []).append(i)
        return tuple(sorted(tuple(g) for g in groups.values()))

    def __len__(self):
        return len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self._canonical == other._canonical

    def __hash__(self):
        return hash(self._canonical)

    def __repr__(self):
        return f'Partition({list(map(list, self.blocks()))})'


@dataclass
class OracleResult:
    """Exhaustive minimum of the cost (or of a diagonal Hamiltonian)."""
    min_cost: float
    argmin_partitions: set = field(default_factory=set)
    argmin_basis_states: set = field(default_factory=set)


def distance(p, q) -> float:
    """Euclidean distance between 2-D points `p` and `q`."""
    return float(np.hypot(p[0] - q[0], p[1] - q[1]))


def distance_matrix(ps: PointSet) -> np.ndarray:
    """Returns the symmetric (N, N) matrix of pairwise distances."""
    return squareform(pdist(ps.coords(), metric='euclidean'))


def pair_indices(n_points: int):
    """Returns index arrays (i, j) over all unordered pairs i < j."""
    return np.triu_indices(n_points, k=1)


def cost(dm: np.ndarray, p: Partition) -> float:
    """Sum of distances over unordered same-cluster pairs.

    Parameters:
        dm (np.ndarray): Distance matrix.
        p (Partition): Covers every point of `dm`.

    Returns:
        float: Cost W of the partition.
    """
    if len(p) != len(dm):
        raise ValueError(
            f'partition of {len(p)} points does not cover {len(dm)} points!'
        )
    a = np.asarray(p.assignment)
    i, j = pair_indices(len(dm))
    return float(np.sum(dm[i, j][a[i] == a[j]]))


def _free_points(n_points: int, fixed: dict) -> list:
    return [i for i in range(n_points) if i not in fixed]


def _check_fixed(K: int, fixed: dict):
    for point, label in fixed.items():
        if not 0 <= label < K:
            raise ValueError(
                f'fixed label {label} of point {point} is not in [0, {K})!'
            )


def enumerate_assignments(n_points: int, K: int, fixed: dict = None):
    """Yields every labeling of `n_points` honoring `fixed`.

    Parameters:
        n_points (int): Point count.
        K (int): Cluster count.
        fixed (dict): Optional point -> label map held constant.

    Yields:
        Partition: K**(free points) assignments.
    """
    fixed = fixed or {}
    _check_fixed(K, fixed)
    free = _free_points(n_points, fixed)

    for labels in itertools.product(range(K), repeat=len(free)):
        assignment = [0] * n_points
        for point, label in fixed.items():
            assignment[point] = label
        for point, label in zip(free, labels):
            assignment[point] = label
        yield Partition(assignment, K)


def _assignment_table(n_points: int, K: int, fixed: dict) -> np.ndarray:
    """All labelings as a (K**free, N) array, in enumeration order."""
    free = _free_points(n_points, fixed)
    table = np.zeros((K ** len(free), n_points), dtype=int)
    if free:
        grid = np.indices((K,) * len(free)).reshape(len(free), -1).T
        table[:, free] = grid
    for point, label in fixed.items():
        table[:, point] = label
    return table


def oracle_min(dm: np.ndarray, K: int, fixed: dict = None) -> OracleResult:
    """Exact minimum of `cost` over all labelings honoring `fixed`.

    Raises:
        SizeLimitError: More than `config.MAX_ORACLE_POINTS` points.
    """
    n_points = len(dm)
    check_limit('n_points', n_points, config.MAX_ORACLE_POINTS)
    fixed = fixed or {}
    _check_fixed(K, fixed)

    # Scores every labeling at once: same-cluster pair mask times distances.
    table = _assignment_table(n_points, K, fixed)
    i, j = pair_indices(n_points)
    same = table[:, i] == table[:, j]
    costs = same @ dm[i, j]

    min_cost = float(costs.min())
    rows = np.flatnonzero(np.abs(costs - min_cost) <= DEGENERACY_ATOL)
    argmin = {Partition(table[r], K) for r in rows}

    return OracleResult(min_cost=min_cost, argmin_partitions=argmin)


def oracle_diag_min(h_diag) -> OracleResult:
    """Minimum entry of a diagonal Hamiltonian and the states attaining it.

    Parameters:
        h_diag: `DiagonalHamiltonian` or a 1-D array of length 3**n.

    Returns:
        OracleResult: `argmin_basis_states` holds `BasisIndex` values.
    """
    diag = np.asarray(getattr(h_diag, 'diag', h_diag), dtype=float)
    n = int(round(np.log(len(diag)) / np.log(3)))
    if 3 ** n != len(diag):
        raise ValueError(f'length {len(diag)} is not a power of 3!')

    min_cost = float(diag.min())
    tol = DEGENERACY_ATOL * max(1.0, abs(min_cost))
    rows = np.flatnonzero(np.abs(diag - min_cost) <= tol)

    return OracleResult(
        min_cost=min_cost,
        argmin_basis_states={from_linear(int(r), n) for r in rows}
    )


if __name__ == '__main__':
    pass
