#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Exports run results as tables, CSV dumps and scatter plots.

@version  0.1.0
@license  MIT
"""


import os

import pandas as pd

import config
import plotter
from qutrits import from_linear
import utils.logger as logger


__all__ = ['EXTENSIONS', 'describe', 'summary', 'probabilities',
           'partitions', 'emit']

EXTENSIONS = {'table': 'txt', 'csv': 'csv', 'svg': 'svg'}

log = logger.get(__name__)


def describe(points, partition) -> str:
    """Partition as clusters of point labels, e.g. '{(1, 2), (3, 4)} ...'."""
    if partition is None:
        return '-'
    return ' '.join(
        '{' + ', '.join(points.label(i) for i in block) + '}'
        for block in partition.blocks()
    )


def summary(result) -> pd.DataFrame:
    """Key/value table of a `RunResult`."""
    report = result.report
    rows = {
        'name': result.name,
        'method': result.scheme.method,
        'K': result.scheme.K,
        'qutrits': result.n_qutrits,
        'top_partition': describe(result.points, result.top_partition),
        'top_probability': round(result.top_probability, 6),
        'top_cost': round(result.top_cost, 6),
        'oracle_min_cost': round(result.oracle_min_cost, 6),
        'oracle_partitions': ' | '.join(
            describe(result.points, p)
            for p in sorted(result.oracle_partitions,
                            key=lambda p: p.blocks())),
        'match': result.match,
        'invalid_probability': round(result.invalid_probability, 6),
        'ground_probability': report.ground_probability,
        'energy': report.energy,
        'norm_error': result.norm_error,
        'wall_time_s': round(result.wall_time, 2),
    }
    df = pd.DataFrame({'Value': list(rows.values())}, index=list(rows))
    df.index.name = 'Run'
    return df


def probabilities(result) -> pd.DataFrame:
    """Per-basis-state dump: index, digits, partition id, probability."""
    report = result.report
    n = result.n_qutrits
    return pd.DataFrame({
        'basis_index': range(len(report.basis_probabilities)),
        'digits': [','.join(map(str, from_linear(k, n).digits))
                   for k in range(len(report.basis_probabilities))],
        'partition_id': report.basis_partition_ids,
        'probability': report.basis_probabilities,
    })


def partitions(result) -> pd.DataFrame:
    """Decoded partitions by id with their probabilities."""
    report = result.report
    return pd.DataFrame({
        'partition_id': range(len(report.partitions)),
        'clusters': [describe(result.points, p) for p in report.partitions],
        'probability': [report.partition_probabilities[p]
                        for p in report.partitions],
    })


def emit(result, formats=('table',), dir: str = config.DATA) -> list:
    """Writes `result` in each of `formats` under `dir`.

    Parameters:
        result (RunResult): Completed run.
        formats (sequence): Items of `EXTENSIONS`.
        dir (str): Output directory, created if needed.

    Returns:
        list: Paths written.
    """
    if not os.path.isdir(dir):
        os.makedirs(dir)

    paths = []
    for fmt in formats:
        if fmt not in EXTENSIONS:
            raise ValueError(
                f'format = {fmt} is not valid!'
                f'\nValid values are: {list(EXTENSIONS)}'
            )
        pathout = f'{dir}/{result.name}.{EXTENSIONS[fmt]}'

        if fmt == 'table':
            with open(pathout, 'w') as fh:
                summary(result).to_string(fh)
                fh.write('\n\n')
                partitions(result).head(10).to_string(fh, index=False)
                fh.write('\n')
        elif fmt == 'csv':
            probabilities(result).to_csv(path_or_buf=pathout, index=False)
            parts = f'{dir}/{result.name}-partitions.csv'
            partitions(result).to_csv(path_or_buf=parts, index=False)
            paths.append(parts)
        elif fmt == 'svg':
            if result.top_partition is None:
                log.warning(f'{result.name}: no valid partition to plot.')
                continue
            plotter.save_clusters(result.points, result.top_partition,
                                  pathout, title=result.name)

        paths.append(pathout)
        log.info(f"Data exported to '{pathout}'.")

    return paths


if __name__ == '__main__':
    pass
