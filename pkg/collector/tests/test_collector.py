#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests collector module.

@version  0.1.0
@license  MIT
"""


import json
import os
import tempfile
import unittest

import utils.logger as logger
from collector import (
    Collector, SpecError, dump_spec, generate_instance, load_preset,
    load_spec, parse_spec
)


class MyTestCase(unittest.TestCase):
    log = logger.get(__name__)

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.raw = {
            'points': [[0, 0], [3, 4], [6, 8]],
            'method': 'one-hot-K3',
        }

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, text: str) -> str:
        path = os.path.join(self.tmp.name, 'spec.json')
        with open(path, 'w') as fh:
            fh.write(text)
        return path

    def test_load_preset_fig1(self):
        self.log.info('=== TEST: load_preset() reads the six-point preset ===')
        spec = load_preset('fig1')
        self.assertEqual(spec.name, 'fig1')
        self.assertEqual(len(spec.points), 6)
        self.assertEqual(spec.scheme.method, 'one-hot-K3-pinned')
        self.assertTrue(spec.scheme.pinned)
        self.assertEqual(spec.anneal.h, 2.0)
        self.assertEqual(spec.emit, ('table', 'csv', 'svg'))

    def test_load_preset_kmeanspp(self):
        spec = load_preset('fig4')
        self.assertEqual(spec.centroids, (0, 1, 2, 4))
        self.assertEqual(spec.fixed, {0: 0, 1: 1, 2: 2, 4: 3})
        self.assertEqual(spec.scheme.spins_per_point, 2)
        self.assertEqual(spec.scheme.centroid_states[3], (0, 1))

    def test_load_preset_rejects_unknown_name(self):
        with self.assertRaises(SpecError):
            load_preset('fig9')

    def test_parse_spec_defaults(self):
        spec = parse_spec(self.raw, name='three')
        self.assertEqual(spec.name, 'three')
        self.assertEqual((spec.anneal.M, spec.anneal.dt), (2000, 0.1))
        self.assertEqual(spec.anneal.mode, 'exact')
        self.assertEqual(spec.scheme.K, 3)
        self.assertFalse(spec.scheme.pinned)
        self.assertEqual(spec.emit, ('table',))
        self.assertIsNone(spec.centroids)

    def test_parse_spec_k2_is_pinned_by_default(self):
        self.raw['method'] = 'one-hot-K2-penalty'
        self.assertTrue(parse_spec(self.raw).scheme.pinned)
        self.raw['pinned'] = False
        self.assertFalse(parse_spec(self.raw).scheme.pinned)

    def test_parse_spec_infers_k_from_centroids(self):
        self.raw.update(method='kmeanspp', centroids=[0, 2])
        spec = parse_spec(self.raw)
        self.assertEqual(spec.scheme.K, 2)
        self.assertEqual(spec.scheme.centroid_states, ((1,), (0,)))

    def test_parse_spec_splits_emit_string(self):
        self.raw['emit'] = 'csv,svg'
        self.assertEqual(parse_spec(self.raw).emit, ('csv', 'svg'))

    def test_parse_spec_rejects_invalid_fields(self):
        cases = [
            {'centroids': [0, 1, 2]},
            {'colour': 'red'},
            {'method': 'qaoa'},
            {'anneal': {'M': 0}},
            {'anneal': {'steps': 10}},
            {'emit': ['pdf']},
            {'pinned': True},
            {'K': 4},
            {'points': [[0, 0]]},
            {'points': [[0, 0, 0], [1, 1, 1]]},
        ]
        for case in cases:
            raw = dict(self.raw, **case)
            with self.assertRaises(SpecError, msg=str(case)):
                parse_spec(raw)

    def test_parse_spec_rejects_bad_centroids(self):
        base = dict(self.raw, method='kmeanspp', K=2)
        for centroids in ([0, 0], [0, 5], [0, 1, 2], None):
            with self.assertRaises(SpecError, msg=str(centroids)):
                parse_spec(dict(base, centroids=centroids))

    def test_load_spec_reports_parse_position(self):
        path = self._write('{\n  "method": "one-hot-K3",\n  "points": [}\n')
        with self.assertRaises(SpecError) as ctx:
            load_spec(path)
        self.assertIn(f'{path}:3:', str(ctx.exception))

    def test_load_spec_uses_file_stem_as_name(self):
        path = self._write(json.dumps(self.raw))
        self.assertEqual(load_spec(path).name, 'spec')

    def test_load_spec_missing_file(self):
        with self.assertRaises(OSError):
            load_spec(os.path.join(self.tmp.name, 'missing.json'))

    def test_generate_instance(self):
        a = generate_instance(8, 42)
        b = generate_instance(8, 42)
        self.assertEqual(a.points, b.points)
        self.assertEqual(len(a), 8)
        self.assertNotEqual(a.points, generate_instance(8, 43).points)
        for x, y in a.points:
            self.assertTrue(-10 <= x <= 10 and -10 <= y <= 10)
            self.assertEqual(x, int(x))

    def test_dump_spec_reloads_same_problem(self):
        spec = load_preset('fig4')
        path = os.path.join(self.tmp.name, 'sub', 'fig4.json')
        dump_spec(spec, path)
        again = load_spec(path)
        self.assertEqual(again.points, spec.points)
        self.assertEqual(again.scheme, spec.scheme)
        self.assertEqual(again.anneal, spec.anneal)
        self.assertEqual(again.centroids, spec.centroids)

    def test_random_source_requires_seed(self):
        with self.assertRaises(SpecError) as ctx:
            Collector('random').collect(5)
        self.assertIn('seed', str(ctx.exception))

    def test_collector_sources(self):
        with self.assertRaises(ValueError):
            Collector('yahoo')
        spec = Collector('random').collect(5, seed=7)
        self.assertEqual(spec.name, 'random-n5-s7')
        self.assertEqual(spec.points, generate_instance(5, 7).points)
        self.assertEqual(spec.scheme.method, 'one-hot-K3-pinned')
        spec = Collector('random').collect(4, seed=1, method='one-hot-K3')
        self.assertFalse(spec.scheme.pinned)
        self.assertEqual(Collector('preset').collect('fig2').scheme.K, 2)


if __name__ == '__main__':
    unittest.main()
