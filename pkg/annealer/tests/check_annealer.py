#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Checks annealer module.

@version  0.1.0
@license  MIT
"""


import numpy as np

from annealer import AnnealConfig, anneal, decode
from clustering import distance_matrix
from collector import load_preset
from hamiltonians import build_onehot_k3_pinned


def check_schedule_length():
    spec = load_preset('fig1')
    hf = build_onehot_k3_pinned(distance_matrix(spec.points))
    for M in (10, 100, 1000, 2000):
        state = anneal(AnnealConfig(M=M, dt=0.1, h=2.0), hf)
        report = decode(state, spec.scheme, len(spec.points), hf=hf)
        print(f'M={M:5d}: top={report.top_partition} '
              f'p={report.top_probability:.4f} '
              f'ground={report.ground_probability:.4f}')


def check_modes():
    spec = load_preset('fig1')
    hf = build_onehot_k3_pinned(distance_matrix(spec.points))
    exact = anneal(AnnealConfig(M=500, dt=0.1, h=2.0), hf)
    split = anneal(AnnealConfig(M=500, dt=0.1, h=2.0, mode='split'), hf)
    diff = np.abs(exact.probabilities() - split.probabilities()).max()
    print(f'max |p_exact - p_split| = {diff:.2e}')


if __name__ == '__main__':
    check_schedule_length()
    check_modes()
