#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Package configuration.

@version  0.1.0
@license  MIT
"""


import os


ASSETS_DIR = f'{os.path.dirname(__file__)}/assets'
PRESETS_DIR = f'{ASSETS_DIR}/presets'
DATA = f'{os.path.dirname(__file__)}/.data'
LOGS = f'{DATA}/logs'
LOG_LEVEL = os.environ.get('QUTRIT_LOG_LEVEL', 'INFO')

# Annealing schedule defaults.
STEPS = 2000
DT = 0.1
FIELD = 1.0
MODE = 'exact'
# Largest phase dt * |H| per symmetric slice in split mode.
SPLIT_ANGLE = 0.02

# Size guards.
MAX_QUTRITS = 7
MAX_ORACLE_POINTS = 12

COORD_RANGE = (-10, 10)
PENALTY_FACTOR = 2.0
