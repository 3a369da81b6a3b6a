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

from typing import Tuple

import numpy as np

from sliceforge.clifford import CliffordNumber, Paravector, multiply_components
from sliceforge.clifford.algebra import conjugation_signs

SINGULARITY_GUARD = 1e-9
FORM_TOLERANCE = 1e-11


class QuadratureError(Exception):
    """
    Some error has occurred while evaluating a Cauchy kernel or integral
    """


def embed(points: np.ndarray, n: int) -> np.ndarray:
    """
    Components in R_n of paravectors given as rows (x0, x1, ..., xn)
    """
    points = np.atleast_2d(points)
    components = np.zeros(points.shape[:-1] + (1 << n,))
    components[..., 0] = points[..., 0]
    components[..., [1 << i for i in range(n)]] = points[..., 1:]
    return components


def inverse_paravectors(components: np.ndarray, n: int) -> np.ndarray:
    """
    p^-1 = conj(p) / |p|² for arrays of paravector components
    """
    square = np.sum(components ** 2, axis=-1, keepdims=True)
    return components * conjugation_signs(n) / square


def check_nonsingular(s_points: np.ndarray, x: Paravector) -> None:
    """
    Reject nodes s with x on the sphere [s]
    """
    s_points = np.atleast_2d(s_points)
    real_gap = np.abs(s_points[:, 0] - x.x0)
    radial_gap = np.abs(
        np.linalg.norm(s_points[:, 1:], axis=1) - np.linalg.norm(x.vec)
    )
    if np.any(real_gap + radial_gap < SINGULARITY_GUARD):
        raise QuadratureError(f'{x!r} lies on the sphere of a kernel node.')


def kernel_forms(
    s_points: np.ndarray, x: Paravector
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Both expressions of S_L^-1(s, x) for the rows s of s_points

    left:  -(x² - 2 s0 x + |s|²)^-1 (x - conj(s))
    right: (s - conj(x)) (s² - 2 x0 s + |x|²)^-1
    """
    n = x.n
    s_points = np.atleast_2d(np.asarray(s_points, dtype=float))
    s = embed(s_points, n)
    x_value = x.as_clifford().coeffs
    x_conj = x.conjugate().as_clifford().coeffs
    s_conj = s * conjugation_signs(n)
    x_square = multiply_components(x_value, x_value)
    s_square = multiply_components(s, s)
    s_norm = np.sum(s_points ** 2, axis=1)[:, None]
    x_norm = x.norm() ** 2

    scalar = np.zeros(1 << n)
    scalar[0] = 1.0

    left_factor = (
        x_square[None] - 2 * s_points[:, :1] * x_value[None] + s_norm * scalar
    )
    left = -multiply_components(
        inverse_paravectors(left_factor, n), x_value[None] - s_conj
    )

    right_factor = s_square - 2 * x.x0 * s + x_norm * scalar
    right = multiply_components(
        s - x_conj[None], inverse_paravectors(right_factor, n)
    )
    return left, right


def kernel_values(s_points: np.ndarray, x: Paravector) -> np.ndarray:
    """
    Right form of S_L^-1(s, x) for many nodes s, cross-checked against the
    left form unless Python runs optimized
    """
    check_nonsingular(s_points, x)
    left, right = kernel_forms(s_points, x)
    if __debug__:
        scale = np.maximum(
            np.linalg.norm(left, axis=-1), np.linalg.norm(right, axis=-1)
        )
        mismatch = np.linalg.norm(left - right, axis=-1)
        if np.any(mismatch > FORM_TOLERANCE * scale):
            raise QuadratureError(
                'The two forms of the Cauchy kernel disagree by '
                f'{float(np.max(mismatch / scale))!r}.'
            )
    return right


def _points(p: Paravector) -> np.ndarray:
    return np.concatenate([[p.x0], p.vec])[None]


def cauchy_kernel(s: Paravector, x: Paravector) -> CliffordNumber:
    if s.n != x.n:
        raise QuadratureError(f'Dimension mismatch: {s.n} and {x.n}.')
    return CliffordNumber(x.n, kernel_values(_points(s), x)[0])


def kernel_derivative(s: Paravector, x: Paravector, i: int) -> CliffordNumber:
    """
    ∂_{x_i} S_L^-1(s, x) in closed form, with Q = s² - 2 x0 s + |x|²

    i = 0:  (s² - 2 conj(x) s + conj(x)²) Q^-2
    i >= 1: (e_i s² - 2 x0 e_i s + |x|² e_i - 2 x_i s + 2 x_i conj(x)) Q^-2
    """
    n = x.n
    if s.n != n:
        raise QuadratureError(f'Dimension mismatch: {s.n} and {n}.')
    if not 0 <= i <= n:
        raise QuadratureError(f'Index {i} outside 0..{n}.')
    check_nonsingular(_points(s), x)

    s_value = s.as_clifford()
    x_conj = x.conjugate().as_clifford()
    s_square = s_value * s_value
    x_norm = x.norm() ** 2
    quotient = s_square - s_value * (2 * x.x0) + x_norm
    inverse = CliffordNumber(n, inverse_paravectors(quotient.coeffs, n))

    if i == 0:
        numerator = s_square - x_conj * s_value * 2.0 + x_conj * x_conj
    else:
        unit = CliffordNumber.basis(n, i)
        x_i = float(x.vec[i - 1])
        numerator = (
            unit * s_square
            - unit * s_value * (2 * x.x0)
            + unit * x_norm
            - s_value * (2 * x_i)
            + x_conj * (2 * x_i)
        )
    return numerator * inverse * inverse
