#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests plotter module.

@version  0.1.0
@license  MIT
"""


import collections
import os
import tempfile
import unittest
import xml.etree.ElementTree as ET

import utils.logger as logger
from clustering import Partition, PointSet
from plotter import MAX_CLUSTERS, plot_clusters, save_clusters


SIX = PointSet(((4, -2), (-7, 7), (6, -9), (-6, 8), (-2, -6), (-9, 5)))


class MyTestCase(unittest.TestCase):
    log = logger.get(__name__)

    def test_save_clusters_writes_one_group_per_point(self):
        self.log.info('=== TEST: save_clusters() groups points by cluster ===')
        partition = Partition.from_blocks([[1, 3, 5], [0, 4], [2]])
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'plots', 'six.svg')
            save_clusters(SIX, partition, path, title='six')
            ids = {el.get('id') for el in ET.parse(path).getroot().iter()
                   if (el.get('id') or '').startswith('cluster-')}

        self.assertEqual(len(ids), 6)
        sizes = collections.Counter(i.split('-')[1] for i in ids)
        self.assertEqual(sorted(sizes.values()), [1, 2, 3])

    def test_plot_clusters_covers_all_points(self):
        fig, ax = plot_clusters(SIX, Partition([0] * 6))
        xlo, xhi = ax.get_xlim()
        ylo, yhi = ax.get_ylim()
        for x, y in SIX.points:
            self.assertTrue(xlo < x < xhi and ylo < y < yhi)
        self.assertEqual(len(ax.collections), 6)

    def test_plot_clusters_rejects_too_many_clusters(self):
        points = PointSet(tuple((i, i) for i in range(MAX_CLUSTERS + 1)))
        with self.assertRaises(ValueError):
            plot_clusters(points, Partition(range(MAX_CLUSTERS + 1)))


if __name__ == '__main__':
    unittest.main()
