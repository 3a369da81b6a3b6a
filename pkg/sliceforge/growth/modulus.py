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

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Any, Dict, Tuple

import numpy as np

from scipy.special import logsumexp

from sliceforge.clifford import multiply_components, sphere_sample
from sliceforge.proximate import ProximateOrder, phi
from sliceforge.series import SliceSeries

VALIDITY_TOLERANCE = 1e-6
SCAN_LIMIT = 1e8
DECAY_MARGIN = 50.0
MIN_TYPE_DEGREE = 20


class GrowthError(Exception):
    """
    Some error has occurred while estimating growth quantities
    """


@dataclass(frozen=True)
class NormGrid:
    """
    Sampling of R^(n+1) used for suprema: log-spaced radii, directions j on
    the unit sphere and angles of u + jv in the upper half plane
    """

    radii: int = 400
    r_min: float = 1e-3
    directions: int = 32
    angles: int = 64
    seed: int = 0
    refine: bool = True

    def to_json(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class GrowthParams:
    po: ProximateOrder
    sigma: float

    def __post_init__(self):
        if not self.po.normalized:
            raise GrowthError(f'{self.po!r} is not normalized.')
        if not math.isfinite(self.sigma) or self.sigma < 0:
            raise GrowthError(f'σ must be nonnegative, got {self.sigma!r}.')

    def to_json(self) -> Dict[str, Any]:
        return {**self.po.to_json(), 'sigma': self.sigma}


def check_series(f: SliceSeries) -> None:
    if f.center != 0.0:
        raise GrowthError(
            f'Growth quantities need a series centered at 0, got {f.center!r}.'
        )


def log_coefficient_norms(f: SliceSeries) -> np.ndarray:
    return f.log_coefficient_norms()


def log_phi_values(po: ProximateOrder, ells: np.ndarray) -> np.ndarray:
    return np.array([math.log(phi(po, float(ell))) for ell in ells])


@lru_cache(maxsize=64)
def _direction_matrices(n: int, directions: int, seed: int) -> np.ndarray:
    """
    Right multiplication matrices B -> j B for the sampled units j
    """
    dim = 1 << n
    identity = np.eye(dim)
    left = np.stack(
        [
            multiply_components(np.eye(dim)[1 << i], identity)
            for i in range(n)
        ]
    )
    units = np.array([unit.vec for unit in sphere_sample(n, directions, seed)])
    matrices = np.tensordot(units, left, axes=(1, 0))
    matrices.setflags(write=False)
    return matrices


@lru_cache(maxsize=64)
def _angle_tables(degree: int, angles: int) -> Tuple[np.ndarray, np.ndarray]:
    thetas = np.linspace(0.0, math.pi, angles)
    arguments = np.outer(thetas, np.arange(degree + 1))
    cosines, sines = np.cos(arguments), np.sin(arguments)
    cosines.setflags(write=False)
    sines.setflags(write=False)
    return cosines, sines


def log_max_modulus(
    f: SliceSeries, r: float, grid: NormGrid = NormGrid()
) -> float:
    """
    ln max |f(x)| over the sampled points with |x| = r

    The coefficients are rescaled by the largest |a_ℓ| r^ℓ so that the sums
    stay finite for any degree.
    """
    check_series(f)
    log_norms = log_coefficient_norms(f)
    if not np.any(np.isfinite(log_norms)):
        return -math.inf

    exponents = log_norms + np.arange(f.N + 1) * math.log(r)
    shift = float(np.max(exponents))
    weights = np.exp(exponents - shift)
    with np.errstate(invalid='ignore', divide='ignore'):
        units = np.where(
            np.isfinite(log_norms)[:, None],
            f.coeffs / f.coefficient_norms()[:, None],
            0.0,
        )
    scaled = units * weights[:, None]

    cosines, sines = _angle_tables(f.N, grid.angles)
    even = cosines @ scaled
    odd = sines @ scaled
    matrices = _direction_matrices(f.n, grid.directions, grid.seed)
    values = even[None] + np.einsum('ak,pkm->pam', odd, matrices)
    largest = float(np.max(np.linalg.norm(values, axis=-1)))
    if largest == 0.0:
        return -math.inf
    return shift + math.log(largest)


def max_modulus(f: SliceSeries, r: float, grid: NormGrid = NormGrid()) -> float:
    if r <= 0:
        raise GrowthError(f'The radius must be positive, got {r!r}.')
    try:
        return math.exp(log_max_modulus(f, r, grid))
    except OverflowError:
        return math.inf


def coefficient_log_limsup(
    f: SliceSeries, po: ProximateOrder
) -> Tuple[float, Tuple[int, int]]:
    """
    max of ln(|a_ℓ|^(1/ℓ) φ(ℓ)) over the window [⌈N/2⌉, N]

    Zero coefficients are skipped. Returns -inf when the window holds none.
    """
    start = max(1, -(-f.N // 2))
    ells = np.arange(start, f.N + 1)
    log_norms = log_coefficient_norms(f)[start:]
    mask = np.isfinite(log_norms)
    if not np.any(mask):
        return -math.inf, (start, f.N)
    values = log_norms[mask] / ells[mask] + log_phi_values(po, ells[mask])
    return float(np.max(values)), (start, f.N)


def validity_radius(
    f: SliceSeries,
    po: ProximateOrder,
    tolerance: float = VALIDITY_TOLERANCE,
) -> float:
    """
    Largest radius up to which the dropped tail of a truncated series stays
    below tolerance times its largest kept term

    The tail coefficients are extrapolated as (s/φ(ℓ))^ℓ with s the window
    limsup of |a_ℓ|^(1/ℓ) φ(ℓ). Exact polynomials are valid everywhere.
    """
    check_series(f)
    if not f.truncated:
        return math.inf
    log_limsup, _ = coefficient_log_limsup(f, po)
    if not math.isfinite(log_limsup):
        return math.inf

    tail = np.arange(f.N + 1, 2 * f.N + 51)
    log_tail = tail * (log_limsup - log_phi_values(po, tail))
    log_norms = log_coefficient_norms(f)
    radii = np.geomspace(1e-3, SCAN_LIMIT, 2000)
    log_radii = np.log(radii)

    head = np.max(
        log_norms[None, :] + np.arange(f.N + 1)[None, :] * log_radii[:, None],
        axis=1,
    )
    rest = logsumexp(
        log_tail[None, :] + tail[None, :] * log_radii[:, None], axis=1
    )
    invalid = np.nonzero(rest - head > math.log(tolerance))[0]
    if invalid.size == 0:
        return float(radii[-1])
    if invalid[0] == 0:
        return float(radii[0])
    return float(radii[invalid[0] - 1])
