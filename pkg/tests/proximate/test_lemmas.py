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
# pylint: disable=invalid-name

import unittest

from sliceforge.proximate import (
    GSequence,
    LemmaGrid,
    ProximateOrder,
    check_phi_elasticity,
    check_power_ratio,
    verify_lemma_suite,
)


class GSequenceTestCase(unittest.TestCase):
    def test_supermultiplicative_constant(self):
        sequence = GSequence.compute(ProximateOrder.constant(1.0), 600)

        self.assertEqual(len(sequence), 601)
        self.assertEqual(sequence.log_values[0], 0.0)
        self.assertLessEqual(sequence.max_violation(300), 1e-9)

    def test_supermultiplicative_logshift(self):
        sequence = GSequence.compute(ProximateOrder.logshift(1.0, 0.5), 600)

        self.assertLessEqual(sequence.max_violation(300), 1e-9)

    def test_too_short(self):
        sequence = GSequence.compute(ProximateOrder.constant(1.0), 10)

        with self.assertRaises(ValueError):
            sequence.max_violation(6)


class LemmaSuiteTestCase(unittest.TestCase):
    def assertAllPass(self, reports):
        for report in reports:
            self.assertTrue(report.passed, report)

    def test_constant_orders(self):
        for rho in (1.0, 2.0):
            reports = verify_lemma_suite(ProximateOrder.constant(rho))

            self.assertEqual(len(reports), 7)
            self.assertAllPass(reports)

    def test_constant_elasticity(self):
        report = check_phi_elasticity(ProximateOrder.constant(2.0), LemmaGrid())

        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.empirical_constant, 0.5, places=6)

    def test_constant_power_ratio(self):
        report = check_power_ratio(ProximateOrder.constant(1.0), LemmaGrid())

        self.assertTrue(report.passed)
        self.assertAlmostEqual(report.empirical_constant, 2.0, places=9)

    def test_logshift(self):
        reports = verify_lemma_suite(ProximateOrder.logshift(1.0, -0.5))

        self.assertAllPass(reports)

    def test_logshift_limits(self):
        po = ProximateOrder.logshift(1.5, 0.5)
        names = (
            'phi-elasticity',
            'phi-ratio',
            'power-ratio',
            'phi-quotient-bound',
        )

        reports = {
            report.lemma: report
            for report in verify_lemma_suite(po, LemmaGrid(points=60))
        }

        for name in names:
            self.assertTrue(reports[name].passed, reports[name])

    def test_report_json(self):
        report = verify_lemma_suite(
            ProximateOrder.constant(1.0), LemmaGrid(points=20, ell_max=20)
        )[0]

        data = report.to_json()

        self.assertEqual(data['lemma'], 'sum-inequality')
        self.assertIs(data['pass'], True)
        self.assertEqual(data['params']['family'], 'constant')
        self.assertEqual(data['grid']['points'], 20)


if __name__ == '__main__':
    unittest.main()
