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

import numpy as np

from sliceforge.clifford import CliffordNumber
from sliceforge.operators import (
    InfOrderOperator,
    OperatorError,
    apply,
    check_growth_domination,
    normalized_order,
)
from sliceforge.proximate import ProximateOrder
from sliceforge.series import SliceSeries, slice_derivative


class InfOrderOperatorTestCase(unittest.TestCase):
    def test_from_constants(self):
        P = InfOrderOperator.from_constants(2, [1.0, 0.5, 0.25])

        self.assertEqual(P.n, 2)
        self.assertEqual(P.L, 2)
        self.assertFalse(P.truncated)
        self.assertEqual(P.rho1, ProximateOrder.constant(1.0))
        self.assertEqual(P.rho2, ProximateOrder.constant(1.0))

    def test_translation_coefficients(self):
        P = InfOrderOperator.translation(1, 2.0, 4)

        values = [u.coeffs[0, 0] for u in P.coeffs]
        np.testing.assert_allclose(values, [1.0, 2.0, 2.0, 4 / 3, 2 / 3])
        self.assertTrue(P.truncated)
        self.assertFalse(InfOrderOperator.translation(1, 0.0, 4).truncated)

    def test_empty_operator(self):
        with self.assertRaises(OperatorError):
            InfOrderOperator([])

    def test_mixed_dimensions(self):
        with self.assertRaises(OperatorError):
            InfOrderOperator(
                [SliceSeries.constant(1, 1.0), SliceSeries.constant(2, 1.0)]
            )

    def test_centered_coefficients_only(self):
        shifted = SliceSeries(1, [[1.0, 0.0]], center=1.0)

        with self.assertRaises(OperatorError):
            InfOrderOperator([shifted])

    def test_json_round_trip(self):
        rng = np.random.default_rng(3)
        P = InfOrderOperator(
            [SliceSeries.random(2, 3, rng) for _ in range(4)],
            ProximateOrder.constant(1.0),
            ProximateOrder.logshift(1.0, 0.5),
            truncated=True,
        )

        Q = InfOrderOperator.from_json(P.to_json())

        self.assertEqual(Q.L, 3)
        self.assertTrue(Q.truncated)
        self.assertEqual(Q.rho2, P.rho2)
        self.assertEqual(P.max_coefficient_gap(Q), 0.0)

    def test_malformed_json(self):
        data = InfOrderOperator.from_constants(1, [1.0, 1.0]).to_json()
        data['L'] = 5

        with self.assertRaises(OperatorError):
            InfOrderOperator.from_json(data)

        with self.assertRaises(OperatorError):
            InfOrderOperator.from_json({'n': 1})

    def test_max_coefficient_gap_pads(self):
        P = InfOrderOperator.from_constants(1, [1.0])
        Q = InfOrderOperator.from_constants(1, [1.0, 0.0, -3.0])

        self.assertEqual(P.max_coefficient_gap(Q), 3.0)


class ApplyTestCase(unittest.TestCase):
    def setUp(self):
        self.f = SliceSeries.random(2, 5, np.random.default_rng(0))

    def test_identity(self):
        P = InfOrderOperator.from_constants(2, [1.0])

        result = apply(P, self.f)

        np.testing.assert_allclose(result.coeffs, self.f.coeffs, atol=1e-15)
        self.assertFalse(result.truncated)

    def test_derivative(self):
        P = InfOrderOperator.from_constants(2, [0.0, 1.0])

        result = apply(P, self.f)
        expected = slice_derivative(self.f).padded(result.N)

        np.testing.assert_allclose(result.coeffs, expected.coeffs, atol=1e-14)

    def test_translation_of_square(self):
        a = 0.5
        P = InfOrderOperator.translation(1, a, 5)

        result = apply(P, SliceSeries.monomial(1, 2))

        np.testing.assert_allclose(
            result.coeffs[:, 0], [a * a, 2 * a, 1.0], atol=1e-15
        )
        self.assertFalse(result.truncated)

    def test_cut_operator_marks_truncated(self):
        P = InfOrderOperator.translation(1, 0.5, 2)

        result = apply(P, SliceSeries.monomial(1, 4))

        self.assertTrue(result.truncated)

    def test_right_linearity(self):
        rng = np.random.default_rng(1)
        P = InfOrderOperator([SliceSeries.random(2, 2, rng) for _ in range(4)])
        g = SliceSeries.random(2, 5, rng)
        c = CliffordNumber(2, rng.standard_normal(4))

        left = apply(P, self.f + g.times_right(c))
        right = apply(P, self.f) + apply(P, g).times_right(c)

        np.testing.assert_allclose(left.coeffs, right.coeffs, atol=1e-12)

    def test_dimension_mismatch(self):
        P = InfOrderOperator.from_constants(1, [1.0])

        with self.assertRaises(OperatorError):
            apply(P, self.f)

    def test_shifted_series(self):
        P = InfOrderOperator.from_constants(1, [1.0])

        with self.assertRaises(OperatorError):
            apply(P, SliceSeries(1, [[1.0, 0.0]], center=0.5))


class GrowthDominationTestCase(unittest.TestCase):
    def test_same_order(self):
        rho = ProximateOrder.constant(1.0)

        self.assertTrue(check_growth_domination(rho, rho).passed)

    def test_smaller_order(self):
        report = check_growth_domination(
            ProximateOrder.constant(1.0), ProximateOrder.constant(2.0)
        )

        self.assertTrue(report.passed)
        self.assertEqual(report.max_violation, 0.0)

    def test_larger_order(self):
        report = check_growth_domination(
            ProximateOrder.constant(2.0), ProximateOrder.constant(1.0)
        )

        self.assertFalse(report.passed)
        self.assertGreater(report.max_violation, 0.0)

    def test_logshift_against_constant(self):
        report = check_growth_domination(
            ProximateOrder.logshift(1.0, 0.5), ProximateOrder.constant(1.0)
        )

        self.assertTrue(report.passed)
        self.assertGreaterEqual(report.empirical_constant, 1.0)


class NormalizedOrderTestCase(unittest.TestCase):
    def test_normalized_kept(self):
        rho = ProximateOrder.constant(1.5)

        self.assertIs(normalized_order(rho), rho)

    def test_glued(self):
        rho = ProximateOrder.tabulated(
            1.0, [[1.0, 1.5], [100.0, 1.0]], r0=10.0
        )

        self.assertTrue(normalized_order(rho).normalized)


if __name__ == '__main__':
    unittest.main()
