#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Functions for plotting clusters.

@version  0.1.0
@license  MIT
"""


import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt


__all__ = ['MARKERS', 'MAX_CLUSTERS', 'plot_clusters', 'save_clusters']

MARKERS = ['o', 's', '^', 'D', 'v', 'p', 'h', '*', 'X']
MAX_CLUSTERS = len(MARKERS)

plt.rcParams['svg.hashsalt'] = 'qutrit-cluster'


def plot_clusters(points, partition, title: str = None):
    """Scatter plot with one marker shape per cluster.

    Every point is its own artist with gid 'cluster-<k>-point-<i>', so the
    SVG groups can be counted per cluster.

    Parameters:
        points (PointSet): Data points.
        partition (Partition): Clusters to draw.
        title (str): Figure title.

    Returns:
        tuple: Figure and axes.

    Raises:
        ValueError: More clusters than `MARKERS`.
    """
    blocks = partition.blocks()
    if len(blocks) > MAX_CLUSTERS:
        raise ValueError(
            f'{len(blocks)} clusters > MAX_CLUSTERS={MAX_CLUSTERS}!'
        )

    fig, ax = plt.subplots(figsize=(6, 6))

    for k, block in enumerate(blocks):
        for n, i in enumerate(block):
            x, y = points.points[i]
            ax.scatter(
                [x], [y], marker=MARKERS[k], s=80, color=f'C{k}',
                label=f'cluster {k + 1}' if n == 0 else None,
                gid=f'cluster-{k}-point-{i}'
            )

    lo = min(min(p) for p in points.points) - 1
    hi = max(max(p) for p in points.points) + 1
    ax.set_xlim(lo, hi)
    ax.set_ylim(lo, hi)
    ax.set_xlabel('x')
    ax.set_ylabel('y')
    ax.axhline(0, color='grey', lw=0.5)
    ax.axvline(0, color='grey', lw=0.5)
    ax.legend(loc='best')
    if title is not None:
        ax.set_title(title)

    return (fig, ax)


def save_clusters(points, partition, path: str, title: str = None):
    """Saves the cluster scatter plot as an SVG at `path`."""
    dir = os.path.dirname(path)
    if dir and not os.path.isdir(dir):
        os.makedirs(dir)

    fig = plot_clusters(points, partition, title)[0]
    fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)


if __name__ == '__main__':
    pass
