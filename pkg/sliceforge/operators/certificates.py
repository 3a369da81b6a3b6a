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
import sys

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from scipy.special import gammaln

from sliceforge.config import worker_count
from sliceforge.growth import (
    GrowthParams,
    NormGrid,
    derivative_factor,
    norm_estimate,
    star_constant,
)
from sliceforge.proximate import ProximateOrder, log_g_values
from sliceforge.report import VerificationReport
from sliceforge.series import SliceSeries, derivative_power

from .operator import (
    InfOrderOperator,
    OperatorError,
    apply,
    check_growth_domination,
    normalized_order,
)

CLASS_D = 'D'
CLASS_D0 = 'D0'

GRID_POINTS = 16
GRID_MIN = 1e-3
GRID_MAX = 1e3

# slopes of the log ratios flatter than this count as level
SLOPE_TOLERANCE = 1e-9

# constants past this do not fit a float
LOG_CONSTANT_LIMIT = math.log(sys.float_info.max)


def default_grid(
    points: int = GRID_POINTS, lower: float = GRID_MIN, upper: float = GRID_MAX
) -> np.ndarray:
    return np.geomspace(lower, upper, points)


def refine_grid(grid: Sequence[float]) -> np.ndarray:
    """
    Insert the geometric midpoint between neighbouring grid values
    """
    values = np.sort(np.asarray(grid, dtype=float))
    if values.size < 2:
        return values
    refined = np.empty(2 * values.size - 1)
    refined[0::2] = values
    refined[1::2] = np.sqrt(values[:-1] * values[1:])
    return refined


@dataclass(frozen=True)
class BoundCertificate:
    """
    ‖u_ℓ‖_{ϱ2,σ} <= C G_ℓ λ^ℓ / ℓ! on ℓ = 0..L, read in the log domain

    ``passed`` also requires the trend of the log ratios to turn down, and C
    includes the projected rise beyond L when the ratios still grow at L.
    Such certificates are marked ``extrapolated``. A bounded trend whose C
    does not fit a float is ``inconclusive`` and does not pass.
    """

    kind: str
    lam: float
    sigma: float
    log_constant: float
    max_ratio_index: int
    passed: bool
    log_ratios: Tuple[float, ...] = field(default=(), repr=False)
    extrapolated: bool = False
    inconclusive: bool = False

    @property
    def constant(self) -> float:
        with np.errstate(over='ignore'):
            return float(np.exp(self.log_constant))

    @property
    def status(self) -> str:
        if self.passed:
            return 'pass'
        return 'inconclusive' if self.inconclusive else 'fail'

    def to_json(self) -> Dict[str, Any]:
        return {
            'class': self.kind,
            'lambda': self.lam,
            'sigma': self.sigma,
            'C': self.constant,
            'log_C': self.log_constant,
            'max_ratio_index': self.max_ratio_index,
            'extrapolated': self.extrapolated,
            'status': self.status,
            'pass': self.passed,
        }


def _orders(
    P: InfOrderOperator,
    rho1: Optional[ProximateOrder],
    rho2: Optional[ProximateOrder],
) -> Tuple[ProximateOrder, ProximateOrder]:
    rho1 = normalized_order(rho1 if rho1 is not None else P.rho1)
    rho2 = rho2 if rho2 is not None else P.rho2
    if not rho2.normalized:
        raise OperatorError(f'{rho2!r} is not normalized.')
    domination = check_growth_domination(rho1, rho2)
    if not domination.passed:
        raise OperatorError(
            f'r^ϱ1 is not dominated by r^ϱ2 for {rho1!r} and {rho2!r}.'
        )
    return rho1, rho2


def _check_grid(values: Sequence[float], name: str) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.size == 0 or np.any(~(values > 0)):
        raise OperatorError(f'The {name} grid needs positive values.')
    return np.sort(values)


def log_norm_table(
    P: InfOrderOperator,
    rho2: ProximateOrder,
    sigmas: Sequence[float],
    grid: NormGrid = NormGrid(),
) -> np.ndarray:
    """
    ln ‖u_ℓ‖_{ϱ2,σ} with one row per σ; a divergent scan counts as +inf

    Rows are computed in a thread pool and collected in grid order.
    """

    def row(sigma: float) -> List[float]:
        gp = GrowthParams(rho2, float(sigma))
        values = []
        for u in P.coeffs:
            estimate = norm_estimate(u, gp, grid)
            values.append(
                math.inf if estimate.divergent else estimate.log_value
            )
        return values

    with ThreadPoolExecutor(max_workers=worker_count(len(sigmas))) as pool:
        return np.array(list(pool.map(row, sigmas)))


def log_weights(
    rho1: ProximateOrder, L: int  # pylint: disable=invalid-name
) -> np.ndarray:
    """
    ln(ℓ! / G_ℓ) for ℓ = 0..L, with G taken from the normalized ϱ1
    """
    ells = np.arange(L + 1)
    return gammaln(ells + 1) - log_g_values(rho1, L)


def _projected_rise(
    ells: np.ndarray, log_ratios: np.ndarray
) -> Tuple[bool, float, int]:
    """
    Read the tail increments of the log ratios as α + β ln ℓ

    Returns whether the ratios stay bounded, the further rise expected
    beyond the last index and the index where the projected peak sits.
    """
    last = int(ells[-1])
    if ells.size < 4:
        return True, 0.0, last
    slopes = np.diff(log_ratios) / np.diff(ells)
    middles = (ells[:-1] + ells[1:]) / 2
    count = max(2, slopes.size // 2)
    beta, alpha = np.polyfit(np.log(middles[-count:]), slopes[-count:], 1)

    if abs(beta) <= SLOPE_TOLERANCE:
        mean = float(np.mean(slopes[-count:]))
        return mean <= SLOPE_TOLERANCE, 0.0, last
    if beta > 0:
        return False, math.inf, last

    peak = math.exp(-alpha / beta)
    if peak <= last:
        return True, 0.0, last

    def primitive(s: float) -> float:
        return alpha * s + beta * (s * math.log(s) - s)

    return True, max(0.0, primitive(peak) - primitive(last)), int(round(peak))


def build_certificate(
    kind: str,
    lam: float,
    sigma: float,
    log_norms: np.ndarray,
    weights: np.ndarray,
) -> BoundCertificate:
    ells = np.arange(log_norms.size)
    with np.errstate(invalid='ignore'):
        log_ratios = log_norms + weights - ells * math.log(lam)

    if np.any(log_ratios == math.inf):
        index = int(np.argmax(log_ratios == math.inf))
        return BoundCertificate(
            kind, lam, sigma, math.inf, index, False, tuple(log_ratios)
        )

    finite = np.isfinite(log_ratios)
    if not np.any(finite):
        # the zero operator
        return BoundCertificate(kind, lam, sigma, -math.inf, 0, True, ())

    best = int(np.argmax(np.where(finite, log_ratios, -math.inf)))
    bounded, rise, peak = _projected_rise(ells[finite], log_ratios[finite])
    index = peak if rise > 0 else best
    log_constant = float(log_ratios[best]) + rise
    overflow = not log_constant <= LOG_CONSTANT_LIMIT
    return BoundCertificate(
        kind,
        lam,
        sigma,
        log_constant,
        index,
        bool(bounded) and not overflow,
        tuple(log_ratios),
        extrapolated=rise > 0,
        inconclusive=bool(bounded) and overflow,
    )


def certify_class_D(  # pylint: disable=invalid-name
    P: InfOrderOperator,
    lambdas: Optional[Sequence[float]] = None,
    sigmas: Optional[Sequence[float]] = None,
    rho1: Optional[ProximateOrder] = None,
    rho2: Optional[ProximateOrder] = None,
    grid: NormGrid = NormGrid(),
) -> List[BoundCertificate]:
    """
    For every λ the smallest σ of the grid admitting a constant C

    Without a working σ the certificate for λ fails and reports the largest
    σ tried.
    """
    rho1, rho2 = _orders(P, rho1, rho2)
    lambdas = _check_grid(
        default_grid() if lambdas is None else lambdas, 'λ'
    )
    sigmas = _check_grid(default_grid() if sigmas is None else sigmas, 'σ')
    table = log_norm_table(P, rho2, sigmas, grid)
    weights = log_weights(rho1, P.L)

    certificates = []
    for lam in lambdas:
        certificate = None
        for sigma, row in zip(sigmas, table):
            certificate = build_certificate(
                CLASS_D, float(lam), float(sigma), row, weights
            )
            if certificate.passed:
                break
        certificates.append(certificate)
    return certificates


def certify_class_D0(  # pylint: disable=invalid-name
    P: InfOrderOperator,
    sigmas: Optional[Sequence[float]] = None,
    lambdas: Optional[Sequence[float]] = None,
    rho1: Optional[ProximateOrder] = None,
    rho2: Optional[ProximateOrder] = None,
    grid: NormGrid = NormGrid(),
) -> List[BoundCertificate]:
    """
    For every σ the smallest λ of the grid admitting a constant C

    Without a working λ the certificate for σ fails and reports the largest
    λ tried.
    """
    rho1, rho2 = _orders(P, rho1, rho2)
    sigmas = _check_grid(default_grid() if sigmas is None else sigmas, 'σ')
    lambdas = _check_grid(
        default_grid() if lambdas is None else lambdas, 'λ'
    )
    table = log_norm_table(P, rho2, sigmas, grid)
    weights = log_weights(rho1, P.L)

    certificates = []
    for sigma, row in zip(sigmas, table):
        certificate = None
        for lam in lambdas:
            certificate = build_certificate(
                CLASS_D0, float(lam), float(sigma), row, weights
            )
            if certificate.passed:
                break
        certificates.append(certificate)
    return certificates


def _finer(grid: NormGrid) -> NormGrid:
    return replace(
        grid,
        radii=2 * grid.radii,
        directions=2 * grid.directions,
        angles=2 * grid.angles,
    )


def recheck(
    P: InfOrderOperator,
    certificates: Sequence[BoundCertificate],
    lambdas: Sequence[float],
    sigmas: Sequence[float],
    grid: NormGrid = NormGrid(),
) -> VerificationReport:
    """
    Certify again on refined λ/σ grids with twice the norm resolution and
    check that every grid value that passed still passes
    """
    kinds = {certificate.kind for certificate in certificates}
    if len(kinds) != 1:
        raise OperatorError('Recheck one certificate class at a time.')
    kind = kinds.pop()
    finer_lambdas, finer_sigmas = refine_grid(lambdas), refine_grid(sigmas)
    if kind == CLASS_D:
        fresh = certify_class_D(
            P, finer_lambdas, finer_sigmas, grid=_finer(grid)
        )
        by_key = {certificate.lam: certificate for certificate in fresh}
    else:
        fresh = certify_class_D0(
            P, finer_sigmas, finer_lambdas, grid=_finer(grid)
        )
        by_key = {certificate.sigma: certificate for certificate in fresh}

    lost = []
    for certificate in certificates:
        if not certificate.passed:
            continue
        key = certificate.lam if kind == CLASS_D else certificate.sigma
        again = by_key.get(key)
        if again is None or not again.passed:
            lost.append(key)

    return VerificationReport(
        lemma='certificate-stability',
        params={'class': kind, 'L': P.L, 'n': P.n},
        empirical_constant=float(len(lost)),
        max_violation=float(len(lost)),
        passed=not lost,
        grid={**_finer(grid).to_json(), 'points': len(finer_lambdas)},
        details={'lost': lost},
    )


def verify_continuity_estimate(
    P: InfOrderOperator,
    f: SliceSeries,
    tau: float,
    certificate: BoundCertificate,
    grid: NormGrid = NormGrid(),
) -> VerificationReport:
    """
    ‖P f‖_{ϱ2,σ+2^(ρ1+1)τ} <= K C C(τ) ‖f‖_{ϱ1,τ} Σ_ℓ (λ (2^(ρ1+2) τ)^(1/ρ1))^ℓ

    K = 2^((n+4)/2) is the star product constant, (λ, σ, C) come from the
    certificate and C(τ) is the smallest constant in
    ‖∂^ℓ f‖_{ϱ1,2^(ρ1+1)τ} <= C(τ) ℓ! (2^(ρ1+2)τ)^(ℓ/ρ1) / G_ℓ ‖f‖_{ϱ1,τ}
    over the degrees that enter the sum.
    """
    if not certificate.passed:
        raise OperatorError(
            'The continuity estimate needs a passed certificate.'
        )
    if not tau > 0:
        raise OperatorError(f'τ must be positive, got {tau!r}.')
    rho1 = normalized_order(P.rho1)
    rho = rho1.rho
    factor = derivative_factor(rho1)
    top = min(P.L, f.N)

    base = norm_estimate(f, GrowthParams(rho1, tau), grid)
    scaled = GrowthParams(rho1, factor * tau)
    log_g = log_g_values(rho1, top)
    log_step = math.log(2 * factor * tau) / rho
    derivative_ratios = [
        norm_estimate(derivative_power(f, ell), scaled, grid).log_value
        - gammaln(ell + 1)
        - ell * log_step
        + log_g[ell]
        - base.log_value
        for ell in range(top + 1)
    ]
    log_c_tau = float(np.max(derivative_ratios))

    image = apply(P, f)
    left = norm_estimate(
        image, GrowthParams(P.rho2, certificate.sigma + factor * tau), grid
    )
    ells = np.arange(top + 1)
    log_sum = float(
        np.logaddexp.reduce(ells * (math.log(certificate.lam) + log_step))
    )
    log_right = (
        math.log(star_constant(P.n))
        + certificate.log_constant
        + log_c_tau
        + base.log_value
        + log_sum
    )
    violation = left.log_value - log_right
    return VerificationReport(
        lemma='continuity-estimate',
        params={
            'lambda': certificate.lam,
            'sigma': certificate.sigma,
            'C': certificate.constant,
            'tau': tau,
            'n': P.n,
        },
        empirical_constant=math.exp(log_c_tau),
        max_violation=violation,
        passed=bool(not base.divergent and not violation > 1e-9),
        grid=grid.to_json(),
        details={
            'lhs': left.value,
            'rhs_log': log_right,
            'star_constant': star_constant(P.n),
        },
    )
