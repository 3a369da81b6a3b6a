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
from functools import lru_cache
from typing import Any, Callable, Dict, Optional

import numpy as np

from scipy.optimize import minimize_scalar
from scipy.special import logsumexp

from sliceforge.proximate import ProximateOrder
from sliceforge.series import SliceSeries

from .modulus import (
    DECAY_MARGIN,
    MIN_TYPE_DEGREE,
    SCAN_LIMIT,
    GrowthError,
    GrowthParams,
    NormGrid,
    check_series,
    coefficient_log_limsup,
    log_coefficient_norms,
    log_max_modulus,
    validity_radius,
)

MONOMIAL_GRID = np.linspace(math.log(1e-6), math.log(1e12), 2000)


@dataclass(frozen=True)
class NormEstimate:
    """
    Lower bound for ‖f‖_{ϱ,σ} found by scanning a grid

    ``divergent`` is set when the scanned objective was still growing at the
    largest radius, the value is then no estimate of the supremum.
    """

    log_value: float
    radius: float
    divergent: bool
    grid: Dict[str, Any] = field(default_factory=dict)

    @property
    def value(self) -> float:
        try:
            return math.exp(self.log_value)
        except OverflowError:
            return math.inf


def _golden_refine(
    objective: Callable[[float], float],
    points: np.ndarray,
    values: np.ndarray,
    index: int,
) -> Optional[float]:
    """
    Maximize objective around the interior grid maximum points[index]

    Returns the location in the same coordinate, or None when the bracket
    is degenerate.
    """
    if index <= 0 or index >= len(points) - 1:
        return None
    if not (
        values[index] > values[index - 1] and values[index] > values[index + 1]
    ):
        return None
    try:
        result = minimize_scalar(
            lambda s: -objective(s),
            bracket=(points[index - 1], points[index], points[index + 1]),
            method='golden',
        )
    except (ValueError, RuntimeError):
        return None
    return float(result.x)


def _log_upper_bound(
    f: SliceSeries, gp: GrowthParams, radii: np.ndarray
) -> np.ndarray:
    log_norms = log_coefficient_norms(f)
    terms = log_norms[None, :] + np.arange(f.N + 1)[None, :] * np.log(
        radii
    )[:, None]
    return logsumexp(terms, axis=1) - gp.sigma * np.exp(gp.po.log_power(radii))


def decay_radius(f: SliceSeries, gp: GrowthParams) -> float:
    """
    Radius beyond which ln Σ|a_ℓ| r^ℓ - σ r^ϱ(r) stays 50 below its maximum
    """
    radii = np.geomspace(1e-3, SCAN_LIMIT, 2000)
    bound = _log_upper_bound(f, gp, radii)
    peak = int(np.argmax(bound))
    below = np.nonzero(bound[peak:] < bound[peak] - DECAY_MARGIN)[0]
    if below.size == 0:
        return SCAN_LIMIT
    return float(radii[peak + below[0]])


def norm_estimate(
    f: SliceSeries, gp: GrowthParams, grid: NormGrid = NormGrid()
) -> NormEstimate:
    """
    Estimate ‖f‖_{ϱ,σ} = sup |f(x)| exp(-σ |x|^ϱ(|x|))

    The scan covers the origin, log-spaced radii up to the smaller of the
    truncation-validity radius and the decay radius, sampled directions j
    and angles, followed by a golden-section refinement of the radius.
    """
    check_series(f)
    log_norms = log_coefficient_norms(f)
    if f.degree == 0:
        return NormEstimate(float(log_norms[0]), 0.0, False, {'constant': True})
    if gp.sigma == 0:
        return NormEstimate(math.inf, math.inf, True, {'sigma': 0.0})

    valid = validity_radius(f, gp.po)
    r_max = max(min(valid, decay_radius(f, gp)), 10 * grid.r_min)
    radii = np.geomspace(grid.r_min, r_max, grid.radii)
    log_radii = np.log(radii)

    def objective(s: float) -> float:
        r = math.exp(s)
        return log_max_modulus(f, r, grid) - gp.sigma * math.exp(
            gp.po.log_power(r)
        )

    values = np.array([objective(s) for s in log_radii])
    best = int(np.argmax(values))
    log_value, radius = float(values[best]), float(radii[best])

    if grid.refine:
        refined = _golden_refine(objective, log_radii, values, best)
        if refined is not None and objective(refined) > log_value:
            log_value, radius = objective(refined), math.exp(refined)

    if float(log_norms[0]) > log_value:
        log_value, radius = float(log_norms[0]), 0.0

    return NormEstimate(
        log_value,
        radius,
        divergent=best == len(radii) - 1,
        grid={
            **grid.to_json(),
            'r_max': r_max,
            'validity_radius': valid,
        },
    )


@lru_cache(maxsize=4096)
def monomial_log_norm(po: ProximateOrder, sigma: float, ell: int) -> float:
    """
    ln ‖x^ℓ‖_{ϱ,σ} = sup over r of ℓ ln r - σ r^ϱ(r)

    Maximized on a grid in ln r over [1e-6, 1e12] and refined by golden
    section search. A maximum at the upper end gives +inf.
    """
    if ell < 0:
        raise GrowthError(f'Negative degree {ell}.')
    if ell == 0:
        return 0.0
    if sigma <= 0:
        return math.inf

    def objective(s: float) -> float:
        return ell * s - sigma * math.exp(po.log_power(math.exp(s)))

    values = ell * MONOMIAL_GRID - sigma * np.exp(
        po.log_power(np.exp(MONOMIAL_GRID))
    )
    best = int(np.argmax(values))
    if best == len(MONOMIAL_GRID) - 1:
        return math.inf
    value = float(values[best])
    refined = _golden_refine(objective, MONOMIAL_GRID, values, best)
    if refined is not None:
        value = max(value, objective(refined))
    return value


def monomial_log_norms(
    po: ProximateOrder, sigma: float, count: int
) -> np.ndarray:
    return np.array(
        [monomial_log_norm(po, sigma, ell) for ell in range(count + 1)]
    )


def taylor_tail_norms(f: SliceSeries, gp: GrowthParams) -> np.ndarray:
    """
    ln Σ_{ℓ >= k} |a_ℓ| ‖x^ℓ‖_{ϱ,σ} for k = 0..N+1, the last entry is -inf
    """
    check_series(f)
    if f.truncated and f.N >= MIN_TYPE_DEGREE:
        log_limsup, _ = coefficient_log_limsup(f, gp.po)
        rho = gp.po.rho
        log_type = rho * log_limsup - math.log(math.e * rho)
        if gp.sigma == 0 or log_type >= math.log(gp.sigma):
            raise GrowthError(
                f'σ={gp.sigma!r} does not exceed the type of the series.'
            )
    log_norms = log_coefficient_norms(f)
    with np.errstate(invalid='ignore'):
        terms = np.where(
            np.isfinite(log_norms),
            log_norms + monomial_log_norms(gp.po, gp.sigma, f.N),
            -math.inf,
        )
    tails = np.logaddexp.accumulate(terms[::-1])[::-1]
    return np.append(tails, -math.inf)


def taylor_tail_norm(
    f: SliceSeries, gp: GrowthParams, from_index: int
) -> float:
    if from_index < 0:
        raise GrowthError(f'Negative start index {from_index}.')
    if from_index > f.N:
        return 0.0
    return math.exp(taylor_tail_norms(f, gp)[from_index])
