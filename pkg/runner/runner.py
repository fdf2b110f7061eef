#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Runs clustering problems by annealing and checks them against the oracle.

@version  0.1.0
@license  MIT
"""


import multiprocessing as mp
import os
import time
from dataclasses import dataclass

import numpy as np

import config
from annealer import ReadoutReport, anneal, decode
from clustering import (
    Partition, PointSet, cost, distance_matrix, oracle_min
)
from collector import ProblemSpec
from hamiltonians import (
    DiagonalHamiltonian, EncodingScheme, build_k2_penalty, build_kmeanspp,
    build_onehot_k3, build_onehot_k3_pinned, build_onehot_multispin,
    build_penalty_kmeanspp, build_penalty_onehot, register_size
)
from utils import check_limit
import utils.logger as logger
import xport


__all__ = ['RunResult', 'Runner', 'run', 'sweep']

log = logger.get(__name__)


@dataclass
class RunResult:
    """Outcome of one annealing run and its oracle check.

    `match` is True iff `top_partition` is one of `oracle_partitions`.
    """
    name: str
    points: PointSet
    scheme: EncodingScheme
    centroids: tuple
    n_qutrits: int
    report: ReadoutReport
    top_partition: Partition
    top_probability: float
    top_cost: float
    oracle_min_cost: float
    oracle_partitions: set
    match: bool
    invalid_probability: float
    norm_error: float
    wall_time: float


class Runner:
    """An application class that solves one `ProblemSpec`."""

    def __init__(self, spec: ProblemSpec):
        """
        Parameters:
            spec (ProblemSpec): Validated problem.
        """
        self.spec = spec
        self.dm = distance_matrix(spec.points)
        self.n_qutrits = register_size(spec.scheme, len(spec.points))

    @property
    def penalty(self) -> float:
        """Penalty constant a (or b); defaults to a multiple of max d."""
        if self.spec.scheme.penalty_constant is not None:
            return self.spec.scheme.penalty_constant
        return config.PENALTY_FACTOR * float(self.dm.max())

    def free_points(self) -> list:
        centroids = self.spec.centroids or ()
        return [p for p in range(len(self.dm)) if p not in centroids]

    def build(self) -> DiagonalHamiltonian:
        """Builds Hf (plus any penalty) for the spec's encoding.

        Raises:
            SizeLimitError: Register above `config.MAX_QUTRITS`.
        """
        check_limit('n_qutrits', self.n_qutrits, config.MAX_QUTRITS)
        scheme = self.spec.scheme
        dm = self.dm

        if scheme.method == 'one-hot-K3':
            return build_onehot_k3(dm)
        if scheme.method == 'one-hot-K3-pinned':
            return build_onehot_k3_pinned(dm)
        if scheme.method == 'one-hot-K2-penalty':
            return build_k2_penalty(dm, scheme.pinned)

        if scheme.method == 'one-hot-multispin':
            hf = build_onehot_multispin(dm, scheme.K)
            if scheme.needs_penalty:
                hf = hf + build_penalty_onehot(len(dm), scheme.K,
                                               self.penalty)
            return hf

        free = self.free_points()
        hf = build_kmeanspp(dm[np.ix_(self.spec.centroids, free)], scheme)
        if scheme.needs_penalty:
            hf = hf + build_penalty_kmeanspp(len(free), scheme, self.penalty)
        return hf

    def run(self) -> RunResult:
        """Builds, anneals, decodes and checks against the oracle."""
        spec = self.spec
        start = time.perf_counter()
        log.info(f'Running {spec.name}: {spec.scheme.method}, '
                 f'K={spec.scheme.K}, {self.n_qutrits} qutrits')

        hf = self.build()
        oracle = oracle_min(self.dm, spec.scheme.K, spec.fixed)
        state = anneal(spec.anneal, hf)
        report = decode(state, spec.scheme, len(self.dm), spec.centroids, hf)

        top = report.top_partition
        match = top is not None and top in oracle.argmin_partitions
        wall_time = time.perf_counter() - start

        log.info(f'{spec.name}: top={top} p={report.top_probability:.4f} '
                 f'match={match} ({wall_time:.1f} s)')

        return RunResult(
            name=spec.name, points=spec.points, scheme=spec.scheme,
            centroids=spec.centroids, n_qutrits=self.n_qutrits,
            report=report, top_partition=top,
            top_probability=report.top_probability,
            top_cost=cost(self.dm, top) if top is not None else float('nan'),
            oracle_min_cost=oracle.min_cost,
            oracle_partitions=oracle.argmin_partitions, match=match,
            invalid_probability=report.invalid_probability,
            norm_error=abs(state.norm() - 1.0), wall_time=wall_time
        )


def run(spec: ProblemSpec) -> RunResult:
    """Solves `spec`. See `Runner.run`."""
    return Runner(spec).run()


def _run_and_emit(spec: ProblemSpec, dir: str) -> RunResult:
    result = run(spec)
    xport.emit(result, spec.emit, dir)
    return result


def sweep(specs: list, dir: str = config.DATA, processes: int = None) -> list:
    """Runs independent `specs` in a process pool.

    Each spec writes its artifacts to `dir`/<spec name>.

    Returns:
        list: `RunResult` per spec, in input order.
    """
    # Sets up `args` for parallel processing of `_run_and_emit` via `mp.Pool`.
    args = []
    for spec in specs:
        args.append((spec, os.path.join(spec.out or dir, spec.name)))

    # Runs parallel processes.
    with mp.Pool(processes) as pool:
        results = pool.starmap(_run_and_emit, args)

    return results


if __name__ == '__main__':
    pass
