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

from typing import Optional

import numpy as np

from scipy.special import gammaln

from sliceforge.proximate import CONSTANT, ProximateOrder, log_g_values
from sliceforge.report import VerificationReport
from sliceforge.series import SliceSeries, derivative_power, star_product

from .modulus import GrowthError, GrowthParams, NormGrid
from .norms import monomial_log_norms, norm_estimate


def star_constant(n: int) -> float:
    return 2 ** ((n + 4) / 2)


def derivative_factor(po: ProximateOrder) -> float:
    return 2 ** (po.rho + 1)


def eventual_monotone_start(values: np.ndarray, tolerance: float) -> int:
    """
    Smallest index from which the sequence never increases
    """
    increases = np.nonzero(np.diff(values) > tolerance)[0]
    return 0 if increases.size == 0 else int(increases[-1]) + 1


def verify_monomial_norm_bound(
    po: ProximateOrder, sigma: float, sigma_prime: float, ell_max: int
) -> VerificationReport:
    """
    ‖x^ℓ‖_{ϱ,σ} <= C G_ℓ / σ'^(ℓ/ρ)

    The constant is the maximum of the ratio over ℓ <= ℓ_max. The check
    passes when it is finite and the ratio no longer grows after some ℓ_0 in
    the first half of the range.
    """
    if not 0 < sigma_prime < sigma:
        raise GrowthError(f'Need 0 < σ\' < σ, got {sigma_prime!r}, {sigma!r}.')
    ells = np.arange(ell_max + 1)
    log_ratios = (
        monomial_log_norms(po, sigma, ell_max)
        + ells / po.rho * math.log(sigma_prime)
        - log_g_values(po, ell_max)
    )
    log_constant = float(np.max(log_ratios))
    start = eventual_monotone_start(log_ratios, 1e-12)
    passed = math.isfinite(log_constant) and start <= ell_max // 2
    return VerificationReport(
        lemma='monomial-norm',
        params={
            **po.to_json(),
            'sigma': sigma,
            'sigma_prime': sigma_prime,
        },
        empirical_constant=math.exp(log_constant),
        max_violation=float(np.max(np.diff(log_ratios[start:]), initial=0.0)),
        passed=bool(passed),
        grid={'ell_max': ell_max},
        details={'ell0': start},
    )


def verify_derivative_norm_bound(
    f: SliceSeries,
    po: ProximateOrder,
    sigma: float,
    ell_max: int,
    k: Optional[float] = None,
    grid: NormGrid = NormGrid(),
) -> VerificationReport:
    """
    (1/ℓ!) ‖∂^ℓ f‖_{ϱ,kσ} <= C(σ) ‖f‖_{ϱ,σ} (2kσ)^(ℓ/ρ) / G_ℓ

    k defaults to 2^(ρ+1).
    """
    k = derivative_factor(po) if k is None else k
    base = norm_estimate(f, GrowthParams(po, sigma), grid)
    scaled = GrowthParams(po, k * sigma)
    log_g = log_g_values(po, ell_max)

    log_ratios = []
    divergent = base.divergent
    for ell in range(ell_max + 1):
        estimate = norm_estimate(derivative_power(f, ell), scaled, grid)
        divergent = divergent or estimate.divergent
        log_ratios.append(
            estimate.log_value
            - gammaln(ell + 1)
            - base.log_value
            - ell / po.rho * math.log(2 * k * sigma)
            + log_g[ell]
        )
    log_ratios = np.array(log_ratios)
    with np.errstate(over='ignore'):
        constant = float(np.exp(np.max(log_ratios)))
    return VerificationReport(
        lemma='derivative-norm',
        params={**po.to_json(), 'sigma': sigma, 'k': k},
        empirical_constant=constant,
        max_violation=0.0,
        passed=bool(math.isfinite(constant) and not divergent),
        grid={**grid.to_json(), 'ell_max': ell_max},
        details={'log_ratios': log_ratios},
    )


def verify_star_norm_bound(
    f: SliceSeries,
    g: SliceSeries,
    po: ProximateOrder,
    sigma: float,
    tau: float,
    grid: NormGrid = NormGrid(),
) -> VerificationReport:
    """
    ‖f ⋆ g‖_{ϱ,σ+τ} <= 2^((n+4)/2) ‖f‖_{ϱ,σ} ‖g‖_{ϱ,τ}

    The violation is ln(lhs) - ln(rhs), negative values are slack.
    """
    left = norm_estimate(
        star_product(f, g), GrowthParams(po, sigma + tau), grid
    )
    first = norm_estimate(f, GrowthParams(po, sigma), grid)
    second = norm_estimate(g, GrowthParams(po, tau), grid)
    log_product = first.log_value + second.log_value
    violation = left.log_value - math.log(star_constant(f.n)) - log_product
    divergent = left.divergent or first.divergent or second.divergent
    if math.isfinite(log_product):
        constant = math.exp(left.log_value - log_product)
    else:
        constant = 0.0 if left.log_value == -math.inf else math.inf
    return VerificationReport(
        lemma='star-norm',
        params={**po.to_json(), 'sigma': sigma, 'tau': tau, 'n': f.n},
        empirical_constant=constant,
        max_violation=violation if math.isfinite(violation) else 0.0,
        passed=bool(not divergent and not violation > 0),
        grid=grid.to_json(),
        details={'bound': star_constant(f.n)},
    )


def verify_logshift_equivalence(
    f: SliceSeries,
    po: ProximateOrder,
    c: float,
    sigma: float,
    grid: NormGrid = NormGrid(),
    tolerance: float = 1e-6,
) -> VerificationReport:
    """
    With ϱ~ = ϱ + ln(c)/ln r for r >= r0, r^ϱ~ = c r^ϱ and so
    ‖f‖_{ϱ~,σ} = ‖f‖_{ϱ,cσ} whenever both suprema sit beyond r0
    """
    if po.family != CONSTANT:
        raise GrowthError('The log-shift comparison starts from a constant ρ.')
    if c <= 0:
        raise GrowthError(f'The factor c must be positive, got {c!r}.')
    shifted = ProximateOrder.logshift(po.rho, math.log(c))
    left = norm_estimate(f, GrowthParams(shifted, sigma), grid)
    right = norm_estimate(f, GrowthParams(po, c * sigma), grid)
    gap = abs(left.log_value - right.log_value)
    beyond = min(left.radius, right.radius) >= shifted.r0
    return VerificationReport(
        lemma='logshift-equivalence',
        params={**po.to_json(), 'c': c, 'sigma': sigma},
        empirical_constant=left.value,
        max_violation=gap,
        passed=bool(beyond and gap <= tolerance),
        grid=grid.to_json(),
        details={'shifted_norm': left.value, 'scaled_norm': right.value},
    )
