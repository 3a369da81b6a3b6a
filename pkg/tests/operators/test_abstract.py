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

import math
import sys
import unittest

import numpy as np

from sliceforge.operators import (
    AbstractOperator,
    InfOrderOperator,
    OperatorError,
    coefficients_from_operator,
    representation_identity_check,
    verify_reconstruction,
    verify_telescoping,
)
from sliceforge.series import SliceSeries


class AbstractOperatorTestCase(unittest.TestCase):
    def test_translation_images(self):
        T = AbstractOperator.translation(1, 2.0)

        np.testing.assert_allclose(T.image(3).coeffs[:, 0], [8, 12, 6, 1])

    def test_call_is_right_linear(self):
        f = SliceSeries.random(2, 4, np.random.default_rng(0))
        T = AbstractOperator.identity(2)

        np.testing.assert_allclose(T(f).coeffs, f.coeffs, atol=1e-15)

    def test_unknown_degree(self):
        T = AbstractOperator.identity(1, max_degree=3)

        with self.assertRaises(OperatorError):
            T.image(4)

        with self.assertRaises(OperatorError):
            T(SliceSeries.monomial(1, 5))

    def test_wrong_image(self):
        T = AbstractOperator(1, lambda k: SliceSeries.monomial(2, k), 5)

        with self.assertRaises(OperatorError):
            T.image(1)

    def test_composition_name(self):
        T = AbstractOperator.composition(
            AbstractOperator.translation(1, 0.5),
            AbstractOperator.derivative(1),
        )

        self.assertEqual(T.name, 'translation(0.5)∘derivative')
        np.testing.assert_allclose(T.image(2).coeffs[:, 0], [1.0, 2.0])

    def test_from_operator_degrees(self):
        truncated = InfOrderOperator.translation(1, 0.5, 6)
        exact = InfOrderOperator.from_constants(1, [0.0, 1.0])

        self.assertEqual(
            AbstractOperator.from_operator(truncated).max_degree, 6
        )
        self.assertEqual(
            AbstractOperator.from_operator(exact).max_degree, sys.maxsize
        )


class CoefficientsFromOperatorTestCase(unittest.TestCase):
    def test_identity(self):
        P = coefficients_from_operator(AbstractOperator.identity(2), 10)

        self.assertEqual(
            P.max_coefficient_gap(InfOrderOperator.from_constants(2, [1.0])),
            0.0,
        )
        self.assertTrue(P.truncated)

    def test_derivative(self):
        P = coefficients_from_operator(AbstractOperator.derivative(1), 8)

        self.assertLess(
            P.max_coefficient_gap(
                InfOrderOperator.from_constants(1, [0.0, 1.0])
            ),
            1e-11,
        )

    def test_translation(self):
        a = 0.5
        P = coefficients_from_operator(AbstractOperator.translation(1, a), 8)

        self.assertLess(
            P.max_coefficient_gap(InfOrderOperator.translation(1, a, 8)),
            1e-11,
        )

    def test_translation_after_derivative(self):
        a = 0.7
        T = AbstractOperator.composition(
            AbstractOperator.translation(1, a),
            AbstractOperator.derivative(1),
        )

        P = coefficients_from_operator(T, 10)

        expected = InfOrderOperator.from_constants(
            1, [0.0] + [a ** m / math.factorial(m) for m in range(10)]
        )
        self.assertLess(P.max_coefficient_gap(expected), 1e-11)

    def test_round_trip(self):
        rng = np.random.default_rng(7)
        P = InfOrderOperator([SliceSeries.random(2, 3, rng) for _ in range(5)])

        Q = coefficients_from_operator(AbstractOperator.from_operator(P), P.L)

        self.assertLess(P.max_coefficient_gap(Q), 1e-11)

    def test_reconstruction_report(self):
        rng = np.random.default_rng(8)
        P = InfOrderOperator(
            [SliceSeries.random(1, 2, rng) for _ in range(12)]
        )

        report = verify_reconstruction(P)

        self.assertEqual(report.lemma, 'reconstruction-round-trip')
        self.assertEqual(report.params, {'n': 1, 'L': 11})
        self.assertTrue(report.passed)
        self.assertLess(report.max_violation, 1e-11)

    def test_exact_degree_not_truncated(self):
        T = AbstractOperator.identity(1, max_degree=4)

        self.assertFalse(coefficients_from_operator(T, 4).truncated)

    def test_beyond_known_degrees(self):
        with self.assertRaises(OperatorError):
            coefficients_from_operator(
                AbstractOperator.identity(1, max_degree=3), 5
            )

    def test_negative_truncation(self):
        with self.assertRaises(OperatorError):
            coefficients_from_operator(AbstractOperator.identity(1), -1)


class RepresentationIdentityTestCase(unittest.TestCase):
    def test_identity(self):
        report = representation_identity_check(
            AbstractOperator.identity(2), 12, 12, trials=5
        )

        self.assertTrue(report.passed)
        self.assertEqual(report.empirical_constant, 0.0)
        self.assertEqual(report.lemma, 'representation-identity')

    def test_translation(self):
        report = representation_identity_check(
            AbstractOperator.translation(2, 0.7), 20, 12, trials=10
        )

        self.assertTrue(report.passed)
        self.assertLess(report.max_violation, 1e-10)

    def test_composition(self):
        T = AbstractOperator.composition(
            AbstractOperator.translation(1, -0.3),
            AbstractOperator.derivative(1),
        )

        report = representation_identity_check(T, 12, 12, trials=5)

        self.assertTrue(report.passed)

    def test_needs_enough_coefficients(self):
        with self.assertRaises(OperatorError):
            representation_identity_check(AbstractOperator.identity(1), 4, 6)


class TelescopingTestCase(unittest.TestCase):
    def test_sums(self):
        report = verify_telescoping(10)

        self.assertTrue(report.passed)
        self.assertEqual(report.details['sums'], [1] + [0] * 10)


if __name__ == '__main__':
    unittest.main()
