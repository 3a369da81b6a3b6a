# -*- coding: utf-8 -*-
# Copyright (C) 2023 The sliceforge authors
#
# SPDX-License-Identifier: GPL-3.0-or-later
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
# pylint: disable=invalid-name, protected-access

import json
import tempfile
import unittest

from io import StringIO
from pathlib import Path
from unittest.mock import patch

from sliceforge.__version__ import __version__
from sliceforge.cli import main
from sliceforge.terminal import _set_terminal
from sliceforge.terminal.terminal import Terminal

SMALL_CONFIG = """\
[sliceforge]
radii = 80
directions = 8
angles = 16
step = 0.1
"""


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name)
        self.config = self.path / 'sliceforge.toml'
        self.config.write_text(SMALL_CONFIG, encoding='utf-8')

    def tearDown(self):
        self.tmp.cleanup()
        _set_terminal(Terminal())

    def run_cli(self, *args):
        with patch('sys.stdout', new_callable=StringIO) as stdout, patch(
            'sys.stderr', new_callable=StringIO
        ) as stderr:
            code = main(
                leave=False, args=['--config', str(self.config), *args]
            )
        return code, stdout.getvalue(), stderr.getvalue()


class ParserTestCase(CliTestCase):
    @patch('sys.stdout', new_callable=StringIO)
    def test_version(self, mock_stdout):
        with self.assertRaises(SystemExit) as cm:
            main(leave=False, args=['--version'])

        self.assertEqual(cm.exception.code, 0)
        self.assertIn(__version__, mock_stdout.getvalue())

    @patch('sys.stderr', new_callable=StringIO)
    def test_missing_subcommand(self, _mock_stderr):
        with self.assertRaises(SystemExit) as cm:
            main(leave=False, args=[])

        self.assertEqual(cm.exception.code, 2)

    @patch('sys.stderr', new_callable=StringIO)
    def test_unknown_suite(self, mock_stderr):
        with self.assertRaises(SystemExit) as cm:
            main(leave=False, args=['verify', '--suite', 'nonsense'])

        self.assertEqual(cm.exception.code, 2)
        self.assertIn('nonsense', mock_stderr.getvalue())

    def test_leave_exits(self):
        with patch('sys.stdout', new_callable=StringIO), patch(
            'sys.stderr', new_callable=StringIO
        ), self.assertRaises(SystemExit) as cm:
            main(
                args=[
                    '--config',
                    str(self.config),
                    'verify',
                    '--suite',
                    'clifford',
                    '--trials',
                    '5',
                ]
            )

        self.assertEqual(cm.exception.code, 0)


class ConfigHandlingTestCase(CliTestCase):
    def test_unknown_key(self):
        self.config.write_text('[sliceforge]\nfoo = 1\n', encoding='utf-8')

        code, stdout, stderr = self.run_cli('verify', '--suite', 'clifford')

        self.assertEqual(code, 2)
        self.assertEqual(stdout, '')
        self.assertIn('foo', stderr)

    def test_missing_config(self):
        self.config = self.path / 'missing.toml'

        code, _, stderr = self.run_cli('verify', '--suite', 'clifford')

        self.assertEqual(code, 2)
        self.assertIn('missing.toml', stderr)

    def test_non_positive_tolerance(self):
        self.config.write_text(
            '[sliceforge]\nidentity_tolerance = 0.0\n', encoding='utf-8'
        )

        code, _, _ = self.run_cli('verify', '--suite', 'operators')

        self.assertEqual(code, 2)


class VerifyTestCase(CliTestCase):
    def test_clifford(self):
        code, stdout, _ = self.run_cli(
            'verify', '--suite', 'clifford', '--trials', '20'
        )

        self.assertEqual(code, 0)
        document = json.loads(stdout)
        self.assertIs(document['pass'], True)
        lemmas = [
            report['lemma']
            for report in document['suites']['clifford']['reports']
        ]
        self.assertEqual(
            lemmas,
            [
                'clifford-associativity',
                'clifford-anticommutation',
                'imaginary-units',
                'paravector-conjugate',
                'paravector-inverse',
                'clifford-submultiplicative',
            ],
        )

    def test_proximate_order(self):
        code, stdout, _ = self.run_cli(
            'verify',
            '--suite',
            'proximate-order',
            '--family',
            'constant',
            '--rho',
            '1',
        )

        self.assertEqual(code, 0)
        reports = json.loads(stdout)['suites']['proximate-order']['reports']
        self.assertEqual(len(reports), 8)
        self.assertTrue(all(report['pass'] for report in reports))

    def test_star_norm(self):
        code, stdout, _ = self.run_cli(
            'verify', '--suite', 'star-norm', '--n', '3', '--trials', '2'
        )

        self.assertEqual(code, 0)
        (report,) = json.loads(stdout)['suites']['star-norm']['reports']
        self.assertEqual(report['params']['n'], 3)
        self.assertEqual(report['grid']['trials'], 2)
        self.assertAlmostEqual(report['details']['bound'], 2 ** 3.5)

    def test_operators(self):
        code, stdout, _ = self.run_cli(
            'verify', '--suite', 'operators', '--trials', '3'
        )

        self.assertEqual(code, 0)
        reports = json.loads(stdout)['suites']['operators']['reports']
        self.assertEqual(
            [report['lemma'] for report in reports],
            ['representation-identity'] * 4
            + [
                'reconstruction-round-trip',
                'telescoping',
                'growth-domination',
            ],
        )

    def test_cauchy(self):
        code, stdout, _ = self.run_cli(
            'verify', '--suite', 'cauchy', '--trials', '5'
        )

        self.assertEqual(code, 0)
        self.assertIs(json.loads(stdout)['suites']['cauchy']['pass'], True)

    def test_monomial_norm(self):
        code, stdout, _ = self.run_cli(
            'verify',
            '--suite',
            'monomial-norm',
            '--family',
            'constant',
            '--rho',
            '1',
        )

        self.assertEqual(code, 0)
        reports = json.loads(stdout)['suites']['monomial-norm']['reports']
        self.assertEqual(
            [report['lemma'] for report in reports],
            ['monomial-norm'] * 3
            + ['derivative-norm'] * 2
            + ['logshift-equivalence'],
        )
        self.assertTrue(all(report['pass'] for report in reports))

    def test_type(self):
        _, stdout, _ = self.run_cli('verify', '--suite', 'type')

        reports = json.loads(stdout)['suites']['type']['reports']
        self.assertEqual(
            [report['lemma'] for report in reports],
            ['type-estimate'] * 3 + ['polynomial-type', 'classification'],
        )
        for report, sigma0 in zip(reports, (0.5, 1.0, 2.0)):
            self.assertEqual(report['params']['sigma0'], sigma0)
            self.assertAlmostEqual(
                report['empirical_constant'], sigma0, delta=0.1 * sigma0
            )
            self.assertIsNotNone(report['details']['agreement'])
        self.assertIs(reports[3]['pass'], True)
        self.assertEqual(reports[3]['empirical_constant'], 0.0)

    def test_certificates(self):
        code, stdout, _ = self.run_cli('verify', '--suite', 'certificates')

        self.assertEqual(code, 0)
        reports = json.loads(stdout)['suites']['certificates']['reports']
        self.assertEqual(
            [report['lemma'] for report in reports],
            [
                'class-D',
                'class-D0',
                'certificate-stability',
                'continuity-estimate',
            ],
        )
        class_d = reports[0]
        self.assertIs(class_d['pass'], True)
        self.assertEqual(class_d['details']['inconclusive'], 1)
        first = class_d['details']['certificates'][0]
        self.assertEqual(first['status'], 'inconclusive')
        self.assertIsNone(first['C'])
        self.assertGreater(first['log_C'], 709.0)
        self.assertIs(first['extrapolated'], True)
        for certificate in reports[1]['details']['certificates']:
            self.assertEqual(certificate['status'], 'pass')
            self.assertIsNotNone(certificate['C'])

    def test_superosc(self):
        code, stdout, _ = self.run_cli('verify', '--suite', 'superosc')

        self.assertEqual(code, 0)
        reports = json.loads(stdout)['suites']['superosc']['reports']
        self.assertEqual(
            [report['lemma'] for report in reports],
            ['superoscillation-convergence', 'operator-evolution'],
        )
        self.assertEqual(
            reports[0]['details']['decreasing'],
            {'1.0': True, '2.0': True, '4.0': True},
        )

    def test_all_is_deterministic(self):
        args = ('--seed', '5', 'verify', '--suite', 'all', '--trials', '3')

        _, first, _ = self.run_cli(*args)
        _, second, _ = self.run_cli(*args)

        self.assertEqual(first, second)
        document = json.loads(first)
        self.assertEqual(
            sorted(document['suites']),
            [
                'cauchy',
                'certificates',
                'clifford',
                'monomial-norm',
                'operators',
                'proximate-order',
                'star-norm',
                'superosc',
                'type',
            ],
        )
        self.assertIs(
            document['pass'],
            all(suite['pass'] for suite in document['suites'].values()),
        )

    def test_deterministic(self):
        args = ('--seed', '7', 'verify', '--suite', 'clifford', '--trials', '5')

        _, first, _ = self.run_cli(*args)
        _, second, _ = self.run_cli(*args)

        self.assertEqual(first, second)
        self.assertEqual(json.loads(first)['seed'], 7)

    def test_output_file(self):
        output = self.path / 'report.json'

        code, stdout, _ = self.run_cli(
            '--output',
            str(output),
            'verify',
            '--suite',
            'clifford',
            '--trials',
            '5',
        )

        self.assertEqual(code, 0)
        self.assertEqual(stdout, '')
        self.assertIs(json.loads(output.read_text())['pass'], True)

    def test_quiet(self):
        code, _, stderr = self.run_cli(
            '--quiet', 'verify', '--suite', 'clifford', '--trials', '5'
        )

        self.assertEqual(code, 0)
        self.assertEqual(stderr, '')

    def test_status_lines(self):
        _, _, stderr = self.run_cli(
            'verify', '--suite', 'clifford', '--trials', '5'
        )

        self.assertIn('sliceforge => verify', stderr)
        self.assertIn('clifford-associativity', stderr)


if __name__ == '__main__':
    unittest.main()
