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

import unittest

from io import StringIO
from unittest.mock import MagicMock, Mock, patch

import colorful as cf

from sliceforge.terminal import (
    _set_terminal,
    bold_info,
    error,
    fail,
    info,
    ok,
    out,
    warning,
)
from sliceforge.terminal.terminal import Signs, Terminal


class TerminalTestCase(unittest.TestCase):
    def setUp(self):
        self.maxDiff = 180
        self.term = Terminal()
        self.term.get_width = MagicMock(return_value=80)

    def assertStatusLine(self, output, sign, color, msg, style=cf.reset):
        expected = style(f'{color(sign)} {msg}').styled_string + '\n'
        self.assertEqual(output, expected)

    @patch('sys.stderr', new_callable=StringIO)
    def test_error(self, mock_stderr):
        self.term.error('foo bar')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.ERROR, cf.red, 'foo bar'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_fail(self, mock_stderr):
        self.term.fail('lemma failed')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.FAIL, cf.red, 'lemma failed'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_ok(self, mock_stderr):
        self.term.ok('lemma passed')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.OK, cf.green, 'lemma passed'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_info(self, mock_stderr):
        self.term.info('foo bar')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.INFO, cf.cyan, 'foo bar'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_bold_info(self, mock_stderr):
        self.term.bold_info('suite')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.INFO, cf.cyan, 'suite', cf.bold
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_warning(self, mock_stderr):
        self.term.warning('foo bar')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.WARNING, cf.yellow, 'foo bar'
        )

    @patch('sys.stdout', new_callable=StringIO)
    @patch('sys.stderr', new_callable=StringIO)
    def test_stdout_untouched(self, mock_stderr, mock_stdout):
        self.term.print('foo')

        self.assertEqual(mock_stdout.getvalue(), '')
        self.assertNotEqual(mock_stderr.getvalue(), '')

    def test_explicit_stream(self):
        stream = StringIO()
        term = Terminal(stream=stream)
        term.get_width = MagicMock(return_value=80)

        term.print('foo bar')

        self.assertEqual(
            stream.getvalue(), cf.reset('  foo bar').styled_string + '\n'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_quiet(self, mock_stderr):
        term = Terminal(quiet=True)
        term.get_width = MagicMock(return_value=80)

        term.ok('foo')
        term.info('foo')
        term.print('foo')

        self.assertEqual(mock_stderr.getvalue(), '')
        self.assertTrue(term.quiet)

        term.error('broken')

        self.assertStatusLine(
            mock_stderr.getvalue(), Signs.ERROR, cf.red, 'broken'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_add_and_reset_indent(self, mock_stderr):
        self.term.add_indent(4)
        self.term.print('foo')

        self.assertEqual(
            mock_stderr.getvalue(), cf.reset('      foo').styled_string + '\n'
        )

        mock_stderr.truncate(0)
        mock_stderr.seek(0)

        self.term.reset_indent()
        self.term.print('bar')

        self.assertEqual(
            mock_stderr.getvalue(), cf.reset('  bar').styled_string + '\n'
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_with_indent(self, mock_stderr):
        with self.term.indent(2):
            self.term.print('foo')

        self.term.print('bar')

        self.assertEqual(
            mock_stderr.getvalue(),
            cf.reset('    foo').styled_string
            + '\n'
            + cf.reset('  bar').styled_string
            + '\n',
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_long_msg(self, mock_stderr):
        long_msg = 'x' * 78 + 'tail'

        self.term.print(long_msg)

        self.assertEqual(
            mock_stderr.getvalue(),
            cf.reset('  ' + 'x' * 78 + '\n  tail').styled_string + '\n',
        )

    @patch('sys.stderr', new_callable=StringIO)
    def test_empty_msg(self, mock_stderr):
        self.term.print('')

        self.assertEqual(
            mock_stderr.getvalue(), cf.reset('  ').styled_string + '\n'
        )


class TerminalOutputApiTestCase(unittest.TestCase):
    def setUp(self):
        self.term = Mock(spec=Terminal)
        _set_terminal(self.term)

    def tearDown(self):
        _set_terminal(Terminal())

    def test_error(self):
        error('foo bar')
        self.term.error.assert_called_with('foo bar')

    def test_fail(self):
        fail('foo bar')
        self.term.fail.assert_called_with('foo bar')

    def test_info(self):
        info('foo bar')
        self.term.info.assert_called_with('foo bar')

    def test_bold_info(self):
        bold_info('foo bar')
        self.term.bold_info.assert_called_with('foo bar')

    def test_ok(self):
        ok('foo bar')
        self.term.ok.assert_called_with('foo bar')

    def test_out(self):
        out('foo bar')
        self.term.print.assert_called_with('foo bar')

    def test_warning(self):
        warning('foo bar')
        self.term.warning.assert_called_with('foo bar')


if __name__ == '__main__':
    unittest.main()
