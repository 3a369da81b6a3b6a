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

from sliceforge.clifford import (
    CliffordError,
    CliffordNumber,
    clifford_mul,
    clifford_norm,
    multiply_components,
)


def random_number(rng, n):
    return CliffordNumber(n, rng.standard_normal(1 << n))


class CliffordMulTestCase(unittest.TestCase):
    def test_e1_e2(self):
        e1 = CliffordNumber.basis(2, 1)
        e2 = CliffordNumber.basis(2, 2)

        product = clifford_mul(e1, e2)

        self.assertEqual(product.component(1, 2), 1.0)
        self.assertEqual(product.norm(), 1.0)

    def test_e2_e1_anticommutes(self):
        e1 = CliffordNumber.basis(2, 1)
        e2 = CliffordNumber.basis(2, 2)

        self.assertEqual(clifford_mul(e2, e1).component(1, 2), -1.0)
        self.assertEqual(CliffordNumber.basis(2, 2, 1).component(1, 2), -1.0)

    def test_unit_squares(self):
        for n in range(1, 5):
            for i in range(1, n + 1):
                e = CliffordNumber.basis(n, i)
                self.assertEqual(e * e, CliffordNumber.scalar(n, -1.0))

    def test_anticommutation(self):
        n = 4
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                ei = CliffordNumber.basis(n, i)
                ej = CliffordNumber.basis(n, j)
                self.assertEqual(ei * ej + ej * ei, CliffordNumber.zero(n))

    def test_identity(self):
        rng = np.random.default_rng(1)
        a = random_number(rng, 3)
        one = CliffordNumber.scalar(3, 1.0)

        self.assertEqual(one * a, a)
        self.assertEqual(a * one, a)

    def test_bivector_squares(self):
        e12 = CliffordNumber.basis(2, 1, 2)

        self.assertEqual(e12 * e12, CliffordNumber.scalar(2, -1.0))

    def test_associativity(self):
        rng = np.random.default_rng(2)
        for n in range(1, 5):
            a = rng.standard_normal((500, 1 << n))
            b = rng.standard_normal((500, 1 << n))
            c = rng.standard_normal((500, 1 << n))

            left = multiply_components(multiply_components(a, b), c)
            right = multiply_components(a, multiply_components(b, c))

            scale = np.max(np.abs(left))
            self.assertLess(np.max(np.abs(left - right)), 1e-13 * scale)

    def test_submultiplicativity(self):
        rng = np.random.default_rng(3)
        for n in range(1, 5):
            a = rng.standard_normal((10000, 1 << n))
            b = rng.standard_normal((10000, 1 << n))

            product = np.linalg.norm(multiply_components(a, b), axis=-1)
            bound = (
                2 ** (n / 2)
                * np.linalg.norm(a, axis=-1)
                * np.linalg.norm(b, axis=-1)
            )

            self.assertTrue(np.all(product <= bound * (1 + 1e-12)))

    def test_dimension_mismatch(self):
        with self.assertRaises(CliffordError):
            clifford_mul(CliffordNumber.basis(2, 1), CliffordNumber.basis(3, 1))

    def test_batch_matches_single(self):
        rng = np.random.default_rng(4)
        a = random_number(rng, 3)
        b = random_number(rng, 3)

        batch = multiply_components(
            np.stack([a.coeffs, b.coeffs]), np.stack([b.coeffs, a.coeffs])
        )

        np.testing.assert_allclose(batch[0], (a * b).coeffs)
        np.testing.assert_allclose(batch[1], (b * a).coeffs)


class CliffordNormTestCase(unittest.TestCase):
    def test_two_units(self):
        value = CliffordNumber.basis(2, 1) + CliffordNumber.basis(2, 2)

        self.assertAlmostEqual(clifford_norm(value), np.sqrt(2), places=15)

    def test_zero(self):
        self.assertEqual(clifford_norm(CliffordNumber.zero(3)), 0.0)

    def test_conjugate_of_vector(self):
        e1 = CliffordNumber.basis(2, 1)

        self.assertEqual(e1.conjugate(), -e1)
        self.assertEqual(
            CliffordNumber.scalar(2, 3.0).conjugate().scalar_part, 3
        )


class CliffordNumberTestCase(unittest.TestCase):
    def test_wrong_shape(self):
        with self.assertRaises(CliffordError):
            CliffordNumber(2, [1.0, 2.0])

    def test_dimension_too_large(self):
        with self.assertRaises(CliffordError):
            CliffordNumber.zero(9)

    def test_unknown_unit(self):
        with self.assertRaises(CliffordError):
            CliffordNumber.basis(2, 3)

    def test_immutable(self):
        value = CliffordNumber.basis(2, 1)

        with self.assertRaises(ValueError):
            value.coeffs[0] = 1.0

    def test_scalar_arithmetic(self):
        e1 = CliffordNumber.basis(1, 1)

        value = 2 * e1 + 1

        self.assertEqual(value.scalar_part, 1.0)
        self.assertEqual(value.component(1), 2.0)
        self.assertEqual((value / 2).component(1), 1.0)

    def test_json(self):
        value = CliffordNumber.basis(3, 1, 3) * 2.5 + 1.0

        data = value.to_json()

        self.assertEqual(data, {'n': 3, 'coeffs': {'0': 1.0, '5': 2.5}})
        self.assertEqual(CliffordNumber.from_json(data), value)

    def test_json_invalid_blade(self):
        with self.assertRaises(CliffordError):
            CliffordNumber.from_json({'n': 1, 'coeffs': {'4': 1.0}})

        with self.assertRaises(CliffordError):
            CliffordNumber.from_json({'coeffs': {}})


if __name__ == '__main__':
    unittest.main()
