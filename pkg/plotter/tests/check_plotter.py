#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Checks plotter module.

@version  0.1.0
@license  MIT
"""


import config
from clustering import Partition
from collector import load_preset
import plotter


def check_save_clusters():
    spec = load_preset('fig1')
    partition = Partition.from_blocks([[1, 3, 5], [0, 4], [2]])
    path = f'{config.DATA}/check-plotter.svg'
    plotter.save_clusters(spec.points, partition, path, title=spec.name)
    print(f"Plot exported to '{path}'.")


if __name__ == '__main__':
    check_save_clusters()
