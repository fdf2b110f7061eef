#! /usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests cli module.

@version  0.1.0
@license  MIT
"""


import io
import json
import os
import tempfile
import unittest
from contextlib import redirect_stdout

import utils.logger as logger
from cli import (
    EXIT_INPUT, EXIT_MATCH, EXIT_MISMATCH, EXIT_SIZE, build_argparser, main
)
from collector import load_spec


class MyTestCase(unittest.TestCase):
    log = logger.get(__name__)

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def _main(self, *argv) -> int:
        with redirect_stdout(io.StringIO()):
            return main(list(argv))

    def _spec(self, raw: dict) -> str:
        path = os.path.join(self.tmp.name, f'{raw["name"]}.json')
        with open(path, 'w') as fh:
            json.dump(raw, fh)
        return path

    def test_generate_writes_loadable_spec(self):
        self.log.info('=== TEST: generate writes a spec file ===')
        code = self._main('generate', '--n', '4', '--seed', '1', '--out',
                          self.tmp.name)
        self.assertEqual(code, EXIT_MATCH)
        spec = load_spec(os.path.join(self.tmp.name, 'random-n4-s1.json'))
        self.assertEqual(len(spec.points), 4)
        self.assertEqual(spec.seed, 1)

    def test_run_reports_match_or_mismatch(self):
        path = self._spec({
            'name': 'small', 'points': [[0, 0], [1, 0], [8, 8], [9, 8]],
            'method': 'one-hot-K3-pinned',
            'anneal': {'M': 200, 'dt': 0.1, 'h': 1.0},
        })
        code = self._main('run', path, '--emit', 'table,csv', '--out',
                          self.tmp.name)
        self.assertIn(code, (EXIT_MATCH, EXIT_MISMATCH))
        self.assertTrue(os.path.isfile(os.path.join(self.tmp.name,
                                                    'small.txt')))

    def test_preset_runs_unpinned(self):
        self.log.info('=== TEST: preset with --pinned false ===')
        code = self._main('preset', 'fig2', '--pinned', 'false', '--emit',
                          'table', '--out', self.tmp.name)
        self.assertEqual(code, EXIT_MATCH)
        with open(os.path.join(self.tmp.name, 'fig2.txt')) as fh:
            self.assertRegex(fh.read(), r'qutrits\s+6')

    def test_missing_spec_is_input_error(self):
        code = self._main('run', os.path.join(self.tmp.name, 'none.json'))
        self.assertEqual(code, EXIT_INPUT)

    def test_malformed_spec_is_input_error(self):
        path = os.path.join(self.tmp.name, 'bad.json')
        with open(path, 'w') as fh:
            fh.write('{"method": ')
        self.assertEqual(self._main('run', path), EXIT_INPUT)

    def test_pinned_override_needs_k2_method(self):
        path = self._spec({'name': 'k3', 'points': [[0, 0], [1, 1]],
                           'method': 'one-hot-K3'})
        self.assertEqual(self._main('run', path, '--pinned', 'true'),
                         EXIT_INPUT)

    def test_oversized_register_is_size_error(self):
        path = self._spec({
            'name': 'big', 'n_points': 8, 'seed': 0, 'method': 'one-hot-K3',
        })
        self.assertEqual(self._main('run', path), EXIT_SIZE)

    def test_argparser_rejects_unknown_preset(self):
        with self.assertRaises(SystemExit):
            with redirect_stdout(io.StringIO()):
                build_argparser().parse_args(['preset', 'fig9'])

    def test_argparser_parses_emit_list(self):
        args = build_argparser().parse_args(
            ['preset', 'fig1', '--emit', 'csv,svg', '--mode', 'split'])
        self.assertEqual(args.emit, ('csv', 'svg'))
        self.assertEqual(args.mode, 'split')


if __name__ == '__main__':
    unittest.main()
