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

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np

from sliceforge.proximate import ProximateOrder, log_g_values
from sliceforge.series import SliceSeries

from .modulus import (
    MIN_TYPE_DEGREE,
    GrowthError,
    GrowthParams,
    NormGrid,
    check_series,
    coefficient_log_limsup,
    log_coefficient_norms,
    log_max_modulus,
    log_phi_values,
    validity_radius,
)
from .norms import norm_estimate

TYPE_CONSISTENCY = 0.05


def _require_normalized(po: ProximateOrder) -> None:
    if not po.normalized:
        raise GrowthError(f'{po!r} is not normalized.')


@dataclass(frozen=True)
class TypeEstimate:
    """
    Type of a series read off its Taylor coefficients

    ``remark_type`` is the same limsup taken in the form (|a_ℓ| G_ℓ)^(ρ/ℓ).
    """

    coefficient_limsup: float
    implied_type: float
    tail_window: Tuple[int, int]
    remark_type: float = 0.0

    @property
    def consistent(self) -> bool:
        if self.implied_type == 0.0:
            return self.remark_type == 0.0
        return (
            abs(self.remark_type / self.implied_type - 1.0) <= TYPE_CONSISTENCY
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            'coefficient_limsup': self.coefficient_limsup,
            'implied_type': self.implied_type,
            'tail_window': list(self.tail_window),
            'remark_type': self.remark_type,
        }


def coeff_type_estimate(f: SliceSeries, po: ProximateOrder) -> TypeEstimate:
    """
    limsup |a_ℓ|^(1/ℓ) φ(ℓ) approximated by its maximum over [⌈N/2⌉, N]
    and the implied type s^ρ / (eρ)

    Exact polynomials and series whose tail window holds only zeros have
    type 0. Other truncations need at least 20 terms.
    """
    check_series(f)
    _require_normalized(po)
    if not f.truncated or f.tail_vanishes():
        return TypeEstimate(0.0, 0.0, (f.N + 1, f.N))
    if f.N < MIN_TYPE_DEGREE:
        raise GrowthError(
            f'A truncated series needs N >= {MIN_TYPE_DEGREE} for a type '
            f'estimate, got N={f.N}.'
        )

    log_limsup, window = coefficient_log_limsup(f, po)
    if not math.isfinite(log_limsup):
        return TypeEstimate(0.0, 0.0, window)

    rho = po.rho
    start, end = window
    ells = np.arange(start, end + 1)
    log_norms = log_coefficient_norms(f)[start:]
    mask = np.isfinite(log_norms)
    log_g = log_g_values(po, end)[start:]
    remark = np.max(rho / ells[mask] * (log_norms[mask] + log_g[mask]))

    return TypeEstimate(
        coefficient_limsup=math.exp(log_limsup),
        implied_type=math.exp(rho * log_limsup - math.log(math.e * rho)),
        tail_window=window,
        remark_type=math.exp(remark),
    )


def remark_identity_residual(f: SliceSeries, po: ProximateOrder) -> float:
    """
    Largest relative gap between (|a_ℓ| G_ℓ)^(ρ/ℓ) and
    (|a_ℓ|^(1/ℓ) φ(ℓ))^ρ / (eρ) over all nonzero a_ℓ with ℓ >= 1
    """
    check_series(f)
    _require_normalized(po)
    if f.N == 0:
        return 0.0
    rho = po.rho
    ells = np.arange(1, f.N + 1)
    log_norms = log_coefficient_norms(f)[1:]
    mask = np.isfinite(log_norms)
    if not np.any(mask):
        return 0.0
    ells, log_norms = ells[mask], log_norms[mask]
    remark = rho / ells * (log_norms + log_g_values(po, f.N)[ells])
    coefficient = rho * (log_norms / ells + log_phi_values(po, ells))
    coefficient -= math.log(math.e * rho)
    return float(np.max(np.abs(np.expm1(remark - coefficient))))


@dataclass(frozen=True)
class GrowthTypeEstimate:
    """
    Type read off the growth of ln M(r, f) / r^ϱ(r)
    """

    value: float
    validity_radius: float
    window: Tuple[float, float]

    def to_json(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'validity_radius': self.validity_radius,
            'window': list(self.window),
        }


def growth_type_estimate(
    f: SliceSeries,
    po: ProximateOrder,
    radii: Optional[np.ndarray] = None,
    grid: NormGrid = NormGrid(),
) -> GrowthTypeEstimate:
    """
    max of ln M(r, f) / r^ϱ(r) over the last decade below the
    truncation-validity radius

    Exact polynomials are scanned on [1e7, 1e8].
    """
    check_series(f)
    _require_normalized(po)
    valid = validity_radius(f, po)
    if radii is None:
        upper = valid if math.isfinite(valid) else 1e8
        radii = np.geomspace(upper / 10, upper, 100)
    radii = np.asarray(radii, dtype=float)
    if np.any(radii <= 0):
        raise GrowthError('Radii must be positive.')

    ratios = np.array(
        [
            log_max_modulus(f, float(r), grid)
            / math.exp(po.log_power(float(r)))
            for r in radii
        ]
    )
    value = max(0.0, float(np.max(ratios)))
    return GrowthTypeEstimate(
        value, valid, (float(radii.min()), float(radii.max()))
    )


@dataclass(frozen=True)
class Classification:
    """
    Membership of a series in A_{ϱ,σ}, A_{ϱ,σ+0} and A_ϱ
    """

    type_estimate: TypeEstimate
    sigma: float
    in_space: bool
    in_space_plus_zero: bool
    finite_type: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            'type': self.type_estimate.to_json(),
            'sigma': self.sigma,
            'A_rho_sigma': self.in_space,
            'A_rho_sigma_plus_0': self.in_space_plus_zero,
            'A_rho': self.finite_type,
            **self.details,
        }


def classify(
    f: SliceSeries,
    po: ProximateOrder,
    sigma: float,
    grid: NormGrid = NormGrid(),
    tolerance: float = 1e-9,
) -> Classification:
    """
    A series belongs to A_{ϱ,σ} when its type is below σ, or equal to σ with
    a finite norm. It belongs to A_{ϱ,σ+0} when its type is at most σ.
    """
    estimate = coeff_type_estimate(f, po)
    implied = estimate.implied_type
    details = {}
    below = implied < sigma * (1 - tolerance)
    at = abs(implied - sigma) <= tolerance * max(1.0, sigma)
    in_space = below
    if at and not below:
        norm = norm_estimate(f, GrowthParams(po, sigma), grid)
        details['norm'] = norm.value
        in_space = not norm.divergent and math.isfinite(norm.log_value)
    return Classification(
        type_estimate=estimate,
        sigma=sigma,
        in_space=bool(in_space),
        in_space_plus_zero=bool(below or at),
        finite_type=math.isfinite(implied),
        details=details,
    )
