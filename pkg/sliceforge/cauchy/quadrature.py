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

import math

from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from sliceforge.clifford import (
    CliffordNumber,
    ImaginaryUnit,
    Paravector,
    multiply_components,
)
from sliceforge.growth import validity_radius
from sliceforge.proximate import ProximateOrder
from sliceforge.series import SliceSeries

from .kernel import QuadratureError, embed, kernel_values

DEFAULT_NODES = 512
MIN_NODES = 8

RHO_ONE = ProximateOrder.constant(1.0)

Evaluator = Union[SliceSeries, Callable[[Paravector], CliffordNumber]]


@dataclass(frozen=True)
class ContourSpec:
    """
    Circle |s| = radius in the plane C_j, sampled by a trapezoidal rule

    A missing unit means e_1, missing nodes mean the default for the task.
    """

    radius: float = 1.0
    j: Optional[ImaginaryUnit] = None
    nodes: Optional[int] = None

    def __post_init__(self):
        if not self.radius > 0:
            raise QuadratureError(
                f'The contour radius must be positive, got {self.radius!r}.'
            )
        if self.nodes is not None and self.nodes < MIN_NODES:
            raise QuadratureError(
                f'A contour needs at least {MIN_NODES} nodes, got {self.nodes}.'
            )

    def unit(self, n: int) -> ImaginaryUnit:
        if self.j is None:
            return ImaginaryUnit.basis(n, 1)
        if self.j.n != n:
            raise QuadratureError(
                f'The contour unit lives in R^{self.j.n}, expected R^{n}.'
            )
        return self.j


def _angles(nodes: int) -> np.ndarray:
    # counterclockwise in the (u, v) chart
    return 2 * math.pi * np.arange(nodes) / nodes


def _sample(
    f: Evaluator, n: int, u: np.ndarray, v: np.ndarray, j: ImaginaryUnit
) -> np.ndarray:
    if isinstance(f, SliceSeries):
        if f.n != n:
            raise QuadratureError(f'Dimension mismatch: {f.n} and {n}.')
        return f.evaluate_slice(u, v, j)
    return np.array([f(j.point(a, b)).coeffs for a, b in zip(u, v)])


def _check_validity(
    f: Evaluator, radius: float, po: Optional[ProximateOrder]
) -> None:
    # truncated series only represent their function inside this radius
    if not isinstance(f, SliceSeries) or not f.truncated:
        return
    limit = validity_radius(f, po if po is not None else RHO_ONE)
    if radius > limit:
        raise QuadratureError(
            f'The contour radius {radius!r} exceeds the validity radius '
            f'{limit!r} of the truncated series.'
        )


def _slice_elements(
    real: np.ndarray, imaginary: np.ndarray, j: ImaginaryUnit
) -> np.ndarray:
    """
    Components of real + j imaginary, one row per entry
    """
    points = np.concatenate(
        [real[:, None], imaginary[:, None] * j.vec[None]], axis=1
    )
    return embed(points, j.n)


def cauchy_eval(
    f: Evaluator,
    x: Paravector,
    c: ContourSpec,
    po: Optional[ProximateOrder] = None,
) -> CliffordNumber:
    """
    f(x) = (1/2π) ∫ S_L^-1(s, x) ds_j f(s) over the circle |s| = r in C_j

    With s = r e^(jθ) the measure ds_j = -j ds equals s dθ, so the
    trapezoidal rule gives the mean of S_L^-1(s, x) s f(s) over the nodes.
    A truncated series is only accepted on contours inside its validity
    radius for the order po, by default the constant order 1.
    """
    n = x.n
    if not x.norm() < c.radius:
        raise QuadratureError(
            f'{x!r} is not inside the contour of radius {c.radius!r}.'
        )
    _check_validity(f, c.radius, po)
    j = c.unit(n)
    nodes = c.nodes or DEFAULT_NODES
    thetas = _angles(nodes)
    u, v = c.radius * np.cos(thetas), c.radius * np.sin(thetas)

    s_points = np.concatenate([u[:, None], v[:, None] * j.vec[None]], axis=1)
    kernels = kernel_values(s_points, x)
    values = _sample(f, n, u, v, j)
    terms = multiply_components(
        multiply_components(kernels, embed(s_points, n)), values
    )
    return CliffordNumber(n, np.mean(terms, axis=0))


def coeff_extract(
    f: Evaluator,
    ell: int,
    c: ContourSpec = ContourSpec(),
    po: Optional[ProximateOrder] = None,
) -> CliffordNumber:
    """
    a_ℓ = (1/2π) ∫ s^(-ℓ-1) ds_j f(s), the mean of s^-ℓ f(s) over the nodes

    Without an explicit node count max(512, 4(N + ℓ)) nodes are used for a
    stored series and max(512, 4ℓ) for other evaluators.
    Truncated series are held to their validity radius as in cauchy_eval.
    """
    if ell < 0:
        raise QuadratureError(f'Negative coefficient index {ell}.')
    if isinstance(f, SliceSeries):
        n = f.n
        default = max(DEFAULT_NODES, 4 * (f.N + ell))
    else:
        if c.j is None:
            raise QuadratureError(
                'A contour unit is needed to extract from a plain evaluator.'
            )
        n = c.j.n
        default = max(DEFAULT_NODES, 4 * ell)
    _check_validity(f, c.radius, po)
    j = c.unit(n)
    nodes = c.nodes or default
    thetas = _angles(nodes)
    u, v = c.radius * np.cos(thetas), c.radius * np.sin(thetas)

    values = _sample(f, n, u, v, j)
    scale = c.radius ** -ell
    weights = _slice_elements(
        scale * np.cos(ell * thetas), -scale * np.sin(ell * thetas), j
    )
    return CliffordNumber(
        n, np.mean(multiply_components(weights, values), axis=0)
    )
