#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Collects clustering problems from spec files, presets or a generator.

@version  0.1.0
@license  MIT
"""


import dataclasses
import json
import os
from dataclasses import dataclass

import numpy as np

import config
from annealer import AnnealConfig
from clustering import PointSet
from hamiltonians import METHODS, EncodingScheme
import utils.logger as logger


__all__ = [
    'EMITS', 'SpecError', 'ProblemSpec', 'Collector', 'parse_spec',
    'load_spec', 'load_preset', 'dump_spec', 'generate_instance'
]

log = logger.get(__name__)


class SpecError(ValueError):
    """A spec file does not parse or violates an invariant."""


@dataclass
class ProblemSpec:
    """A clustering experiment: data, encoding, schedule and outputs."""
    name: str
    points: PointSet
    scheme: EncodingScheme
    anneal: AnnealConfig
    centroids: tuple = None
    seed: int = None
    emit: tuple = ('table',)
    out: str = None

    @property
    def fixed(self) -> dict:
        """Centroid point -> cluster label, or None."""
        if self.centroids is None:
            return None
        return {p: c for c, p in enumerate(self.centroids)}

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


"""dict: Default K per method; None means the spec must say."""
DEFAULT_K = {'one-hot-K3': 3, 'one-hot-K3-pinned': 3, 'one-hot-K2-penalty': 2,
             'one-hot-multispin': None, 'kmeanspp': None}
EMITS = ['table', 'csv', 'svg']
KEYS = {'name', 'points', 'labels', 'n_points', 'method', 'K', 'pinned',
        'centroids', 'centroid_states', 'penalty', 'anneal', 'seed', 'emit',
        'out'}
ANNEAL_KEYS = {'M', 'dt', 'h', 'mode'}


def generate_instance(n_points: int, seed: int) -> PointSet:
    """Integer points uniform on `config.COORD_RANGE` squared.

    Uses numpy's PCG64 generator (`np.random.default_rng`), which yields the
    same stream for a given seed on every platform.
    """
    if n_points < 2:
        raise ValueError(f'n_points = {n_points} is not valid! Need >= 2.')
    lo, hi = config.COORD_RANGE
    rng = np.random.default_rng(seed)
    coords = rng.integers(lo, hi, size=(n_points, 2), endpoint=True)
    return PointSet(tuple(map(tuple, coords.tolist())))


def _points(raw: dict) -> PointSet:
    if 'points' in raw:
        points = raw['points']
        if not isinstance(points, list) or not all(
                isinstance(p, (list, tuple)) and len(p) == 2 for p in points):
            raise SpecError('points: expected a list of [x, y] pairs!')
        try:
            return PointSet(tuple(tuple(p) for p in points), raw.get('labels'))
        except (TypeError, ValueError) as e:
            raise SpecError(f'points: {e}')

    if 'n_points' in raw and raw.get('seed') is not None:
        return generate_instance(int(raw['n_points']), int(raw['seed']))

    raise SpecError('points: missing (give points, or n_points and seed)!')


def _centroids(raw: dict, method: str, n_points: int):
    centroids = raw.get('centroids')

    if method != 'kmeanspp':
        if centroids is not None:
            raise SpecError(
                f'centroids: only valid for kmeanspp, not method = {method}!'
            )
        return None

    if not centroids:
        raise SpecError('centroids: required for method = kmeanspp!')
    centroids = tuple(int(c) for c in centroids)
    if len(set(centroids)) != len(centroids):
        raise SpecError(f'centroids: {centroids} are not distinct!')
    if any(not 0 <= c < n_points for c in centroids):
        raise SpecError(f'centroids: {centroids} not in [0, {n_points})!')
    if len(centroids) >= n_points:
        raise SpecError('centroids: no free points left to cluster!')
    return centroids


def _anneal(raw: dict) -> AnnealConfig:
    block = raw.get('anneal') or {}
    unknown = set(block) - ANNEAL_KEYS
    if unknown:
        raise SpecError(f'anneal: unknown keys {sorted(unknown)}!')
    try:
        return AnnealConfig(**block)
    except (TypeError, ValueError) as e:
        raise SpecError(f'anneal: {e}')


def parse_spec(raw: dict, name: str = 'spec') -> ProblemSpec:
    """Validates a decoded spec document and fills defaults.

    Parameters:
        raw (dict): Decoded JSON document. See README for the schema.
        name (str): Fallback for a missing 'name'.

    Returns:
        ProblemSpec: Validated spec.

    Raises:
        SpecError: Naming the offending field and invariant.
    """
    if not isinstance(raw, dict):
        raise SpecError('spec: top level must be an object!')
    unknown = set(raw) - KEYS
    if unknown:
        raise SpecError(f'spec: unknown keys {sorted(unknown)}!')

    method = raw.get('method')
    if method not in METHODS:
        raise SpecError(
            f'method = {method} is not valid!\nValid values are: {METHODS}')

    points = _points(raw)
    centroids = _centroids(raw, method, len(points))

    K = raw.get('K', DEFAULT_K[method])
    if K is None:
        K = len(centroids) if centroids else None
    if K is None:
        raise SpecError(f'K: required for method = {method}!')
    if centroids is not None and len(centroids) != K:
        raise SpecError(
            f'centroids: {len(centroids)} given but K = {K} clusters!')

    pinned = raw.get('pinned')
    if pinned is None:
        pinned = method in ('one-hot-K3-pinned', 'one-hot-K2-penalty')
    elif pinned and method not in ('one-hot-K3-pinned', 'one-hot-K2-penalty'):
        raise SpecError(f'pinned: not supported by method = {method}!')
    elif not pinned and method == 'one-hot-K3-pinned':
        raise SpecError('pinned: one-hot-K3-pinned is always pinned!')

    try:
        scheme = EncodingScheme(
            method=method, K=int(K),
            centroid_states=raw.get('centroid_states'),
            penalty_constant=raw.get('penalty'), pinned=bool(pinned)
        )
    except (TypeError, ValueError) as e:
        raise SpecError(f'method: {e}')

    emit = raw.get('emit', ['table'])
    if isinstance(emit, str):
        emit = emit.split(',')
    for fmt in emit:
        if fmt not in EMITS:
            raise SpecError(
                f'emit = {fmt} is not valid!\nValid values are: {EMITS}')

    return ProblemSpec(
        name=str(raw.get('name', name)), points=points, scheme=scheme,
        anneal=_anneal(raw), centroids=centroids, seed=raw.get('seed'),
        emit=tuple(emit), out=raw.get('out')
    )


def load_spec(path: str) -> ProblemSpec:
    """Reads and validates the JSON spec file at `path`.

    Raises:
        SpecError: Parse error (with line and column) or invalid spec.
        OSError: `path` cannot be read.
    """
    with open(path, 'r') as fh:
        text = fh.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecError(f'{path}:{e.lineno}:{e.colno}: {e.msg}')

    name = os.path.splitext(os.path.basename(path))[0]
    try:
        return parse_spec(raw, name=name)
    except SpecError as e:
        raise SpecError(f'{path}: {e}')


def load_preset(name: str) -> ProblemSpec:
    """Loads one of `Collector.PRESETS` from `config.PRESETS_DIR`."""
    if name not in Collector.PRESETS:
        raise SpecError(
            f'preset = {name} is not valid!'
            f'\nValid values are: {Collector.PRESETS}'
        )
    return load_spec(f'{config.PRESETS_DIR}/{name}.json')


def dump_spec(spec: ProblemSpec, path: str):
    """Writes `spec` back to the JSON schema read by `load_spec`."""
    raw = {
        'name': spec.name,
        'points': [list(p) for p in spec.points.points],
        'method': spec.scheme.method,
        'K': spec.scheme.K,
        'anneal': dataclasses.asdict(spec.anneal),
        'emit': list(spec.emit),
    }
    if spec.points.labels is not None:
        raw['labels'] = list(spec.points.labels)
    if spec.scheme.method == 'one-hot-K2-penalty':
        raw['pinned'] = spec.scheme.pinned
    if spec.centroids is not None:
        raw['centroids'] = list(spec.centroids)
        raw['centroid_states'] = [list(s) for s in spec.scheme.centroid_states]
    if spec.scheme.penalty_constant is not None:
        raw['penalty'] = spec.scheme.penalty_constant
    if spec.seed is not None:
        raw['seed'] = spec.seed
    if spec.out is not None:
        raw['out'] = spec.out

    dir = os.path.dirname(path)
    if dir and not os.path.isdir(dir):
        os.makedirs(dir)
    with open(path, 'w') as fh:
        json.dump(raw, fh, indent=2)

    log.info(f"Spec exported to '{path}'.")


class Collector:
    """A library class that collects clustering problems from `source`."""

    """list: Sources from which `self` can collect problems."""
    SOURCES = ['file', 'preset', 'random']

    """list: Preset names, one per reproduced experiment."""
    PRESETS = ['fig1', 'fig2', 'fig3', 'fig4']

    def __init__(self, source=SOURCES[0]):
        """
        Parameters:
            source (str): Source from `SOURCES` to collect problems from.
        """
        self.source = source

    """source (str): Source from which to collect problems."""
    @property
    def source(self):
        return self._source
    @source.setter
    def source(self, value):
        if value not in self.SOURCES:
            raise ValueError(
                f'source = {value} is not valid!'
                f'\nValid values are: {self.SOURCES}'
            )
        self._source = value

    def collect(self, target, seed: int = None, **kwargs) -> ProblemSpec:
        """Gets a `ProblemSpec` for `target` from `source`.

        Parameters:
            target: Spec path ('file'), preset name ('preset') or point
                count ('random').
            seed (int): Generator seed ('random' only).
            **kwargs: Extra spec fields for 'random', e.g. method.

        Returns:
            ProblemSpec: Validated spec.
        """
        if self.source == 'file':
            return load_spec(target)
        if self.source == 'preset':
            return load_preset(target)

        if seed is None:
            raise SpecError('seed: required for source = random!')

        raw = {'name': f'random-n{target}-s{seed}', 'n_points': int(target),
               'seed': seed, 'method': 'one-hot-K3-pinned'}
        raw.update(kwargs)
        return parse_spec(raw)


if __name__ == '__main__':
    pass
