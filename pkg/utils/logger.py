#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Logger factory.

@version  0.1.0
@license  MIT
"""


import logging
import os

import config


FORMAT = '%(asctime)s %(name)s %(levelname)s: %(message)s'


def get(name: str, fname: str = None) -> logging.Logger:
    """Returns logger `name`, configured once.

    Parameters:
        name (str): Logger name, usually `__name__`.
        fname (str): Optional log file stem written under `config.LOGS`.

    Returns:
        logging.Logger: Logger with a stream handler and, if `fname` is
        given, a file handler.
    """
    log = logging.getLogger(name)

    if log.handlers:
        return log

    formatter = logging.Formatter(FORMAT)
    stream = logging.StreamHandler()
    stream.setFormatter(formatter)
    log.addHandler(stream)

    if fname is not None:
        if not os.path.isdir(config.LOGS):
            os.makedirs(config.LOGS)
        fh = logging.FileHandler(f'{config.LOGS}/{fname}.log')
        fh.setFormatter(formatter)
        log.addHandler(fh)

    log.setLevel(config.LOG_LEVEL)
    log.propagate = False

    return log
