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
from typing import List, Tuple

import numpy as np

from sliceforge.report import VerificationReport

from .order import ProximateOrder, eval_power, log_g_values, phi


@dataclass(frozen=True)
class GSequence:
    """
    The weights ln G_ℓ of a normalized proximate order, G_0 = 1
    """

    log_values: np.ndarray

    @classmethod
    def compute(cls, po: ProximateOrder, count: int) -> 'GSequence':
        return cls(log_g_values(po, count))

    def __len__(self) -> int:
        return len(self.log_values)

    def max_violation(self, limit: int) -> float:
        """
        max of ln G_ℓ + ln G_k - ln G_(ℓ+k) over ℓ, k <= limit
        """
        if 2 * limit >= len(self.log_values):
            raise ValueError(
                f'Need ln G_ℓ up to {2 * limit}, have {len(self) - 1}.'
            )
        indices = np.arange(limit + 1)
        pairs = self.log_values[indices][:, None] + self.log_values[indices]
        sums = self.log_values[indices[:, None] + indices[None, :]]
        return float(np.max(pairs - sums))


@dataclass(frozen=True)
class LemmaGrid:
    points: int = 200
    r_min: float = 1e-3
    r_max: float = 1e5
    epsilon: float = 0.1
    scale: float = 2.0
    tail: float = 1e8
    tail_points: int = 16
    tolerance: float = 0.02
    ell_max: int = 300
    sigma: float = 1.0
    sigma_prime: float = 0.5
    t_points: int = 200


def _params(po: ProximateOrder) -> dict:
    return po.to_json()


def _extended_grid(grid: LemmaGrid) -> Tuple[np.ndarray, int]:
    """
    The base grid followed by one more decade with the same ratio
    """
    base = np.geomspace(grid.r_min, grid.r_max, grid.points)
    ratio = base[1] / base[0]
    extra = int(math.ceil(math.log(10.0) / math.log(ratio)))
    extension = grid.r_max * ratio ** np.arange(1, extra + 1)
    return np.concatenate([base, extension]), grid.points


def _bounded_excess(
    name: str, po: ProximateOrder, grid: LemmaGrid, excess: np.ndarray
) -> VerificationReport:
    """
    Report the smallest constant covering the base grid and check that the
    extra decade does not need a larger one
    """
    size = grid.points
    constant = max(0.0, float(np.max(excess[:size, :size])))
    outer = np.ones(excess.shape, dtype=bool)
    outer[:size, :size] = False
    outer_max = float(np.max(excess[outer]))
    violation = outer_max - constant
    passed = math.isfinite(constant) and violation <= 1e-9 * max(1.0, constant)
    return VerificationReport(
        lemma=name,
        params={**_params(po), 'epsilon': grid.epsilon},
        empirical_constant=constant,
        max_violation=violation,
        passed=bool(passed),
        grid={
            'r_min': grid.r_min,
            'r_max': grid.r_max,
            'points': grid.points,
        },
    )


def check_sum_inequality(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    (r+s)^ϱ(r+s) <= 2^(ρ+ε) (r^ϱ(r) + s^ϱ(s)) + C_ε
    """
    radii, _ = _extended_grid(grid)
    powers = eval_power(po, radii)
    total = eval_power(po, radii[:, None] + radii[None, :])
    excess = total - 2 ** (po.rho + grid.epsilon) * (
        powers[:, None] + powers[None, :]
    )
    return _bounded_excess('sum-inequality', po, grid, excess)


def check_scaling_inequality(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    (sr)^ϱ(sr) <= (1+ε) s^ρ r^ϱ(r) + C_ε, rows r and columns s
    """
    radii, _ = _extended_grid(grid)
    powers = eval_power(po, radii)
    scaled = eval_power(po, radii[:, None] * radii[None, :])
    excess = scaled - (1 + grid.epsilon) * radii[None, :] ** po.rho * (
        powers[:, None]
    )
    return _bounded_excess('scaling-inequality', po, grid, excess)


def check_g_supermultiplicative(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    G_ℓ G_k <= G_(ℓ+k)
    """
    sequence = GSequence.compute(po, 2 * grid.ell_max)
    violation = sequence.max_violation(grid.ell_max)
    return VerificationReport(
        lemma='g-supermultiplicative',
        params=_params(po),
        empirical_constant=1.0,
        max_violation=violation,
        passed=violation <= 1e-9,
        grid={'ell_max': grid.ell_max},
    )


def _tail_report(
    name: str,
    po: ProximateOrder,
    grid: LemmaGrid,
    values: np.ndarray,
    limit: float,
) -> VerificationReport:
    deviation = float(np.max(np.abs(values / limit - 1.0)))
    return VerificationReport(
        lemma=name,
        params={**_params(po), 'scale': grid.scale},
        empirical_constant=float(values[-1]),
        max_violation=deviation,
        passed=deviation <= grid.tolerance,
        grid={
            'window': [grid.tail / 2, grid.tail],
            'points': grid.tail_points,
            'tolerance': grid.tolerance,
        },
        details={'limit': limit},
    )


def _log_phi_values(po: ProximateOrder, values: np.ndarray) -> np.ndarray:
    return np.array([math.log(phi(po, float(t))) for t in values])


def check_phi_elasticity(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    t φ'(t) / φ(t) -> 1/ρ
    """
    window = np.geomspace(grid.tail / 2, grid.tail, grid.tail_points)
    step = 1e-3
    upper = _log_phi_values(po, window * math.exp(step))
    lower = _log_phi_values(po, window * math.exp(-step))
    elasticity = (upper - lower) / (2 * step)
    return _tail_report(
        'phi-elasticity', po, grid, elasticity, 1.0 / po.rho
    )


def check_phi_ratio(po: ProximateOrder, grid: LemmaGrid) -> VerificationReport:
    """
    φ(st) / φ(t) -> s^(1/ρ)
    """
    window = np.geomspace(grid.tail / 2, grid.tail, grid.tail_points)
    ratio = np.exp(
        _log_phi_values(po, grid.scale * window) - _log_phi_values(po, window)
    )
    return _tail_report(
        'phi-ratio', po, grid, ratio, grid.scale ** (1.0 / po.rho)
    )


def check_power_ratio(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    (sr)^ϱ(sr) / r^ϱ(r) -> s^ρ
    """
    window = np.geomspace(grid.tail / 2, grid.tail, grid.tail_points)
    ratio = np.exp(po.log_power(grid.scale * window) - po.log_power(window))
    return _tail_report('power-ratio', po, grid, ratio, grid.scale ** po.rho)


def check_phi_quotient_bound(
    po: ProximateOrder, grid: LemmaGrid
) -> VerificationReport:
    """
    φ(t)/φ(t') <= exp(σ t/t') / (e σ' ρ)^(1/ρ) for all t, t' >= t0

    The reported constant is the smallest grid point t0 that works.
    """
    points = np.geomspace(1.0, grid.tail, grid.t_points)
    log_phi_values = _log_phi_values(po, points)
    quotient = points[:, None] / points[None, :]
    rhs = grid.sigma * quotient - math.log(
        math.e * grid.sigma_prime * po.rho
    ) / po.rho
    violation = log_phi_values[:, None] - log_phi_values[None, :] - rhs

    # largest violation over the square [i:, i:]
    suffix = np.maximum.accumulate(violation[::-1, ::-1], axis=0)
    suffix = np.maximum.accumulate(suffix, axis=1)[::-1, ::-1]
    corner = np.diag(suffix)

    admissible = np.nonzero(corner <= 0)[0]
    found = admissible.size > 0 and admissible[0] < len(points) - 1
    start = int(admissible[0]) if admissible.size else len(points) - 1
    return VerificationReport(
        lemma='phi-quotient-bound',
        params={
            **_params(po),
            'sigma': grid.sigma,
            'sigma_prime': grid.sigma_prime,
        },
        empirical_constant=float(points[start]) if found else math.inf,
        max_violation=float(corner[start]),
        passed=bool(found and grid.sigma_prime < grid.sigma),
        grid={'t_min': 1.0, 't_max': grid.tail, 'points': grid.t_points},
    )


def verify_lemma_suite(
    po: ProximateOrder, grid: LemmaGrid = LemmaGrid()
) -> List[VerificationReport]:
    """
    Run every inequality and limit check for a normalized proximate order

    Failures are reported, never raised.
    """
    checks = (
        check_sum_inequality,
        check_scaling_inequality,
        check_g_supermultiplicative,
        check_phi_elasticity,
        check_phi_ratio,
        check_power_ratio,
        check_phi_quotient_bound,
    )
    return [check(po, grid) for check in checks]
