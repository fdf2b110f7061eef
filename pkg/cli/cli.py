#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Command-line entry point.

    qutrit-cluster run <spec.json> [--emit table,csv,svg] [--out DIR]
    qutrit-cluster preset <fig1|fig2|fig3|fig4> [--pinned BOOL]
    qutrit-cluster generate --n K --seed S [--method M] [--out DIR]
    qutrit-cluster sweep <spec.json> ... [--processes P]

Exit codes: 0 match, 1 mismatch, 2 input error, 3 size-guard error.

@version  0.1.0
@license  MIT
"""


import argparse
import dataclasses
import os
import sys

import config
from collector import Collector, EMITS, SpecError, dump_spec
from hamiltonians import METHODS
from runner import run, sweep
from utils import SizeLimitError
import utils.logger as logger
import xport


__all__ = ['EXIT_MATCH', 'EXIT_MISMATCH', 'EXIT_INPUT', 'EXIT_SIZE',
           'build_argparser', 'main']

EXIT_MATCH = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_SIZE = 3

log = logger.get(__name__)


def _bool(value: str) -> bool:
    lowered = value.lower()
    if lowered in ('true', '1', 'yes'):
        return True
    if lowered in ('false', '0', 'no'):
        return False
    raise argparse.ArgumentTypeError(f'{value} is not a boolean!')


def _emit(value: str) -> tuple:
    formats = tuple(f for f in value.split(',') if f)
    for fmt in formats:
        if fmt not in EMITS:
            raise argparse.ArgumentTypeError(
                f'{fmt} is not valid! Valid values are: {EMITS}')
    return formats


def _add_run_options(p: argparse.ArgumentParser):
    p.add_argument('--emit', type=_emit, default=None,
                   help='Comma list of table,csv,svg.')
    p.add_argument('--pinned', type=_bool, default=None,
                   help='Pin point 0 (one-hot-K2-penalty only).')
    p.add_argument('--mode', choices=['exact', 'split'], default=None)
    p.add_argument('--out', default=None, help='Output directory.')


def build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog='qutrit-cluster',
        description='Clustering of 2-D points by simulated adiabatic '
                    'annealing on qutrits.')
    sub = p.add_subparsers(dest='cmd', required=True)

    pr = sub.add_parser('run', help='Run a spec file.')
    pr.add_argument('spec')
    _add_run_options(pr)

    pp = sub.add_parser('preset', help='Run a built-in experiment.')
    pp.add_argument('name', choices=Collector.PRESETS)
    _add_run_options(pp)

    pg = sub.add_parser('generate', help='Write a random spec file.')
    pg.add_argument('--n', type=int, required=True, help='Point count.')
    pg.add_argument('--seed', type=int, required=True)
    pg.add_argument('--method', choices=METHODS, default='one-hot-K3-pinned')
    pg.add_argument('--K', type=int, default=None)
    pg.add_argument('--out', default=config.DATA)

    ps = sub.add_parser('sweep', help='Run several spec files in parallel.')
    ps.add_argument('specs', nargs='+')
    ps.add_argument('--processes', type=int, default=None)
    _add_run_options(ps)

    return p


def _override(spec, args):
    """Applies command-line overrides to a loaded spec."""
    changes = {}
    if args.emit is not None:
        changes['emit'] = args.emit
    if args.out is not None:
        changes['out'] = args.out
    if args.mode is not None:
        changes['anneal'] = dataclasses.replace(spec.anneal, mode=args.mode)
    if args.pinned is not None:
        if spec.scheme.method != 'one-hot-K2-penalty':
            raise SpecError(
                f'--pinned: not supported by method = {spec.scheme.method}!')
        changes['scheme'] = dataclasses.replace(spec.scheme,
                                                pinned=args.pinned)
    return spec.replace(**changes) if changes else spec


def cmd_run(spec) -> int:
    result = run(spec)
    paths = xport.emit(result, spec.emit, spec.out or config.DATA)
    print(xport.summary(result).to_string())
    for path in paths:
        print(f"Data exported to '{path}'.")
    return EXIT_MATCH if result.match else EXIT_MISMATCH


def cmd_generate(args) -> int:
    extra = {'method': args.method}
    if args.K is not None:
        extra['K'] = args.K
    spec = Collector('random').collect(args.n, seed=args.seed, **extra)
    path = os.path.join(args.out, f'{spec.name}.json')
    dump_spec(spec, path)
    for i, (x, y) in enumerate(spec.points.points):
        print(f'{i}: ({x:g}, {y:g})')
    print(f"Spec exported to '{path}'.")
    return EXIT_MATCH


def cmd_sweep(args) -> int:
    collector = Collector('file')
    specs = [_override(collector.collect(path), args) for path in args.specs]
    results = sweep(specs, dir=args.out or config.DATA,
                    processes=args.processes)
    for result in results:
        print(f'{result.name}: match={result.match} '
              f'p={result.top_probability:.4f}')
    return EXIT_MATCH if all(r.match for r in results) else EXIT_MISMATCH


def main(argv=None) -> int:
    """Parses `argv` and dispatches; returns the process exit code."""
    args = build_argparser().parse_args(argv)

    try:
        if args.cmd == 'generate':
            return cmd_generate(args)
        if args.cmd == 'sweep':
            return cmd_sweep(args)
        if args.cmd == 'preset':
            spec = Collector('preset').collect(args.name)
        else:
            spec = Collector('file').collect(args.spec)
        return cmd_run(_override(spec, args))
    except SizeLimitError as e:
        log.error(f'Size guard: {e}')
        return EXIT_SIZE
    except (ValueError, OSError) as e:
        log.error(f'Input error: {e}')
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
