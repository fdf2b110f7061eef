#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Adiabatic evolution of a qutrit register and readout of the clusters.

The schedule H(s) = (1 - s) H0 + s Hf is held constant over each interval
dt and stepped for l = 0 .. M with s = l / M.

@version  0.1.0
@license  MIT
"""


from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.linalg import expm
from scipy.sparse.linalg import LinearOperator, expm_multiply

import config
from clustering import Partition, oracle_diag_min
from hamiltonians import (
    DiagonalHamiltonian, DriverHamiltonian, EncodingScheme, build_driver,
    point_blocks, point_projections, register_size
)
from qutrits import basis_index, spin_operator
from utils import check_choice, check_positive
import utils.logger as logger


__all__ = [
    'MODES', 'AnnealConfig', 'StateVector', 'ReadoutReport',
    'InstantaneousHamiltonian', 'initial_state', 'instantaneous_hamiltonian',
    'split_slices', 'step', 'anneal', 'decode'
]

MODES = ['exact', 'split']

log = logger.get(__name__)


@dataclass(frozen=True)
class AnnealConfig:
    """Schedule parameters.

    Attributes:
        M (int): Step count; the schedule has M + 1 intervals.
        dt (float): Interval length (hbar = 1).
        h (float): Driver field strength.
        mode (str): 'exact' or 'split'. See `MODES`.
    """
    M: int = config.STEPS
    dt: float = config.DT
    h: float = config.FIELD
    mode: str = config.MODE

    def __post_init__(self):
        if int(self.M) != self.M or self.M < 1:
            raise ValueError(f'M = {self.M} is not valid! Must be >= 1.')
        check_positive('dt', self.dt)
        check_positive('h', self.h)
        check_choice('mode', self.mode, MODES)

    @property
    def total_time(self) -> float:
        return self.M * self.dt


@dataclass
class StateVector:
    """Amplitudes over the 3**n basis of `n` qutrits."""
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (3 ** self.n,):
            raise ValueError(
                f'amplitudes of shape {self.amplitudes.shape} do not fit '
                f'{self.n} qutrits!'
            )

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass
class ReadoutReport:
    """Measurement statistics of a final state.

    Attributes:
        basis_probabilities (np.ndarray): |amplitude|**2 per basis state.
        partition_probabilities (dict): Partition -> summed probability.
        partitions (list): Decoded partitions, most probable first; a
            partition's id is its position here.
        basis_partition_ids (np.ndarray): Partition id per basis state, -1
            for states naming a forbidden cluster.
        invalid_probability (float): Mass on forbidden states.
        top_partition (Partition): Most probable valid partition.
        top_probability (float): Its probability.
        ground_probability (float): Mass on the minima of Hf, if given.
        energy (float): <Hf> in the final state, if given.
    """
    basis_probabilities: np.ndarray
    partition_probabilities: dict
    partitions: list
    basis_partition_ids: np.ndarray
    invalid_probability: float
    top_partition: Partition
    top_probability: float
    ground_probability: float = None
    energy: float = None


class InstantaneousHamiltonian(LinearOperator):
    """H(s) = (1 - s) H0 + s Hf as a linear operator."""

    def __init__(self, s: float, hf: DiagonalHamiltonian,
                 drv: DriverHamiltonian):
        """
        Parameters:
            s (float): Schedule position in [0, 1].
            hf (DiagonalHamiltonian): Final Hamiltonian.
            drv (DriverHamiltonian): Driver on the same register.
        """
        if hf.n != drv.n:
            raise ValueError(
                f'Hf on {hf.n} qutrits does not match H0 on {drv.n}!'
            )
        if not 0.0 <= s <= 1.0:
            raise ValueError(f's = {s} is not valid! Must be in [0, 1].')
        super().__init__(dtype=complex, shape=(hf.dim, hf.dim))
        self.s = s
        self.hf = hf
        self.drv = drv

    def _matvec(self, x):
        x = np.asarray(x).reshape(-1)
        out = self.s * self.hf.matvec(x)
        if self.s < 1.0:
            out = out + (1.0 - self.s) * self.drv.matvec(x)
        return out

    def _adjoint(self):
        return self

    def trace(self) -> float:
        # S^x is traceless.
        return self.s * float(np.sum(self.hf.diag))

    def tocsr(self) -> sp.csr_matrix:
        """Sparse form used by the exact propagator."""
        return ((1.0 - self.s) * self.drv.sparse
                + sp.diags(self.s * self.hf.diag)).tocsr()


def initial_state(n: int, h: float) -> StateVector:
    """Ground state of h * sum_i S^x_i: (1, -sqrt 2, 1) / 2 on every site."""
    check_positive('h', h)
    site = np.array([0.5, -1.0 / np.sqrt(2), 0.5], dtype=complex)
    psi = np.ones(1, dtype=complex)
    for _ in range(n):
        psi = np.kron(psi, site)
    return StateVector(n, psi)


def instantaneous_hamiltonian(s: float, hf: DiagonalHamiltonian,
                              drv: DriverHamiltonian) \
        -> InstantaneousHamiltonian:
    return InstantaneousHamiltonian(s, hf, drv)


def _apply_sites(u: np.ndarray, psi: np.ndarray, n: int) -> np.ndarray:
    """Applies the 3x3 `u` to every site of `psi`."""
    psi = psi.reshape((3,) * n)
    for axis in range(n):
        psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [axis])), 0, axis)
    return psi.reshape(-1)


def split_slices(s: float, hf: DiagonalHamiltonian, drv: DriverHamiltonian,
                 dt: float, angle: float = config.SPLIT_ANGLE) -> int:
    """Symmetric slices per interval so each slice turns at most `angle`.

    The spread of H(s) is bounded by s * ptp(Hf) + 2 (1 - s) n h. At s = 0
    and s = 1 the two parts commute and one slice is exact.
    """
    check_positive('angle', angle)
    if s <= 0.0 or s >= 1.0:
        return 1
    spread = s * float(np.ptp(hf.diag)) + 2.0 * (1.0 - s) * drv.n * drv.h
    return max(1, int(np.ceil(dt * spread / angle)))


def step(state: StateVector, s: float, hf: DiagonalHamiltonian,
         drv: DriverHamiltonian, dt: float, mode: str = 'exact') \
        -> StateVector:
    """Propagates `state` by exp(-i dt H(s)).

    Parameters:
        state (StateVector): Unit-norm input.
        s (float): Schedule position.
        hf (DiagonalHamiltonian): Final Hamiltonian.
        drv (DriverHamiltonian): Driver.
        dt (float): Interval length.
        mode (str): 'exact' uses a Krylov-type action of the full
            exponential; 'split' applies `split_slices` symmetric products
            exp(-i t s Hf / 2) exp(-i t (1 - s) H0) exp(-i t s Hf / 2)
            with t = dt / slices.

    Returns:
        StateVector: The propagated state.
    """
    check_choice('mode', mode, MODES)
    if dt == 0:
        return StateVector(state.n, state.amplitudes.copy())

    ham = instantaneous_hamiltonian(s, hf, drv)

    if mode == 'exact':
        psi = expm_multiply(-1j * dt * ham.tocsr(), state.amplitudes,
                            traceA=-1j * dt * ham.trace())
        return StateVector(state.n, psi)

    r = split_slices(s, hf, drv, dt)
    tau = dt / r
    half = np.exp(-0.5j * tau * s * hf.diag)
    psi = half * state.amplitudes
    if s < 1.0:
        u = expm(-1j * tau * (1.0 - s) * drv.h * spin_operator('x'))
        # Adjacent half phases of consecutive slices merge into one.
        full = half * half
        for _ in range(r - 1):
            psi = full * _apply_sites(u, psi, state.n)
        psi = _apply_sites(u, psi, state.n)
    return StateVector(state.n, half * psi)


def anneal(cfg: AnnealConfig, hf: DiagonalHamiltonian) -> StateVector:
    """Runs the full schedule from the driver ground state.

    Parameters:
        cfg (AnnealConfig): Schedule.
        hf (DiagonalHamiltonian): Final Hamiltonian.

    Returns:
        StateVector: State after the M + 1 intervals l = 0 .. M.
    """
    drv = build_driver(hf.n, cfg.h)
    state = initial_state(hf.n, cfg.h)
    every = max(1, cfg.M // 10)

    log.info(f'Annealing {hf.n} qutrits: M={cfg.M}, dt={cfg.dt}, '
             f'h={cfg.h}, mode={cfg.mode}')

    for l in range(cfg.M + 1):
        state = step(state, l / cfg.M, hf, drv, cfg.dt, cfg.mode)
        if l % every == 0:
            log.debug(f'step {l}/{cfg.M}: norm-1 = {state.norm() - 1:.2e}')

    return state


def _labels(scheme: EncodingScheme, n_points: int, centroids) -> tuple:
    """Cluster label of every point in every basis state.

    Returns:
        tuple: (labels, valid) with labels of shape (3**n, n_points) and
        valid a boolean mask over basis states.
    """
    if scheme.method in ('one-hot-K3', 'one-hot-K3-pinned',
                         'one-hot-K2-penalty'):
        proj = point_projections(n_points, scheme.pinned)
        labels = 1 - proj
        valid = (labels < scheme.K).all(axis=1)
        return labels, valid

    if scheme.method == 'one-hot-multispin':
        labels = point_blocks(n_points, scheme.spins_per_point)
        return labels, (labels < scheme.K).all(axis=1)

    centroids = list(centroids)
    free = [p for p in range(n_points) if p not in centroids]
    spins = scheme.spins_per_point
    lookup = np.full(3 ** spins, -1)
    for c, state in enumerate(scheme.centroid_states):
        lookup[basis_index(state).linear] = c

    blocks = lookup[point_blocks(len(free), spins)]
    labels = np.zeros((len(blocks), n_points), dtype=int)
    labels[:, free] = blocks
    for c, point in enumerate(centroids):
        labels[:, point] = c
    return labels, (blocks >= 0).all(axis=1)


def decode(state: StateVector, scheme: EncodingScheme, n_points: int,
           centroids=None, hf: DiagonalHamiltonian = None) -> ReadoutReport:
    """Aggregates basis probabilities into partition probabilities.

    Parameters:
        state (StateVector): Final state.
        scheme (EncodingScheme): Layout used to build `hf`.
        n_points (int): Total point count, centroids included.
        centroids (list): Centroid point indices (kmeanspp only).
        hf (DiagonalHamiltonian): Optional; adds ground-state mass and
            energy to the report.

    Returns:
        ReadoutReport: Readout statistics.
    """
    if scheme.method == 'kmeanspp' and centroids is None:
        raise ValueError('centroids are required to decode kmeanspp!')
    n = register_size(scheme, n_points)
    if n != state.n:
        raise ValueError(
            f'state on {state.n} qutrits does not match {n} for '
            f'{scheme.method}!'
        )

    probs = state.probabilities()
    labels, valid = _labels(scheme, n_points, centroids)

    row_partition = {}
    totals = {}
    for row in np.flatnonzero(valid):
        p = Partition(labels[row], scheme.K)
        row_partition[row] = p
        totals[p] = totals.get(p, 0.0) + float(probs[row])

    partitions = sorted(totals, key=lambda p: -totals[p])
    ids = {p: k for k, p in enumerate(partitions)}
    basis_ids = np.full(len(probs), -1)
    for row, p in row_partition.items():
        basis_ids[row] = ids[p]

    top = partitions[0] if partitions else None
    report = ReadoutReport(
        basis_probabilities=probs,
        partition_probabilities=totals,
        partitions=partitions,
        basis_partition_ids=basis_ids,
        invalid_probability=float(probs[~valid].sum()),
        top_partition=top,
        top_probability=totals[top] if top is not None else 0.0,
    )

    if hf is not None:
        ground = oracle_diag_min(hf).argmin_basis_states
        report.ground_probability = float(
            sum(probs[b.linear] for b in ground))
        report.energy = hf.expectation(state.amplitudes)

    return report


if __name__ == '__main__':
    pass
