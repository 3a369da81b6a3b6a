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
from typing import Any, Dict, Tuple

import numpy as np

from scipy.special import gammainc

from sliceforge.clifford import CliffordNumber, ImaginaryUnit
from sliceforge.growth import GrowthError, GrowthParams, taylor_tail_norms
from sliceforge.operators import InfOrderOperator, apply
from sliceforge.proximate import ProximateOrder
from sliceforge.series import SliceSeries

from .waves import SuperoscillationError, WaveCombo, evolve, to_mp

# i^m for m mod 4 as (real, imaginary)
_I_POWERS = ((1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0))

MAX_ORDER = 500
SCAN_DEGREE = 200


def taylor_series(
    w: WaveCombo, N: int  # pylint: disable=invalid-name
) -> SliceSeries:
    """
    Σ_{j <= N} x^j c_j with c_j = Σ_k A_k (ik)^j / j!, embedded in C_{e1}

    The coefficients are summed in multiprecision and rounded afterwards.
    """
    if N < 0:
        raise SuperoscillationError(f'Negative Taylor degree {N}.')
    ctx = w.context()
    terms = w.mp_amplitudes(ctx)
    steps = [ctx.mpc(0, 1) * to_mp(ctx, k) for k in w.frequencies]
    coeffs = np.zeros((N + 1, 2))
    for j in range(N + 1):
        value = ctx.fsum(terms)
        coeffs[j] = float(value.real), float(value.imag)
        terms = [term * step / (j + 1) for term, step in zip(terms, steps)]
    truncated = any(k != 0 for k in w.frequencies)
    return SliceSeries(1, coeffs, truncated=truncated)


def evolution_operator(
    t: float, M: int  # pylint: disable=invalid-name
) -> InfOrderOperator:
    """
    U = Σ_{m <= M} (it)^m / m! ∂^(2m) with constant coefficients in C_{e1}
    """
    if M < 0:
        raise SuperoscillationError(f'Negative operator truncation {M}.')
    values = []
    for m in range(M + 1):
        size = t ** m / math.factorial(m)
        real, imag = _I_POWERS[m % 4]
        values.append(CliffordNumber(1, [size * real, size * imag]))
        if m < M:
            values.append(CliffordNumber.zero(1))
    return InfOrderOperator.from_constants(1, values, truncated=t != 0)


def evolve_via_operator(
    w: WaveCombo, t: float, M: int, N: int  # pylint: disable=invalid-name
) -> SliceSeries:
    return apply(evolution_operator(t, M), taylor_series(w, N))


def evaluate_on_line(f: SliceSeries, x: Any) -> np.ndarray:
    """
    Values of a series over R_1 at real points, read as complex numbers
    """
    components = f.evaluate_slice(
        np.asarray(x, dtype=float), 0.0, ImaginaryUnit.basis(1)
    )
    return components[..., 0] + 1j * components[..., 1]


def _exp_tail(y: float, degree: int) -> float:
    # Σ_{j > degree} y^j / j!
    if degree < 0:
        return math.exp(y)
    if y == 0:
        return 0.0
    return math.exp(y) * float(gammainc(degree + 1, y))


def truncation_bound(
    w: WaveCombo,
    t: float,
    M: int,  # pylint: disable=invalid-name
    N: int,  # pylint: disable=invalid-name
    R: float,  # pylint: disable=invalid-name
) -> float:
    """
    Bound for |evolve_via_operator(w, t, M, N)(z) - evolve(w, t)(z)| on
    |z| <= R

    With S = Σ |w_k| and K = max |k| the Taylor cut contributes
    S Σ_{m <= M} (|t| K²)^m / m! tail(KR, N - 2m) and the operator cut
    S e^(KR) tail(|t| K², M), where tail(y, d) = Σ_{j > d} y^j / j!.
    """
    if R < 0:
        raise SuperoscillationError(f'Negative radius {R!r}.')
    size, top = w.weight_sum, w.max_frequency
    step = abs(t) * top * top
    taylor = sum(
        step ** m / math.factorial(m) * _exp_tail(top * R, N - 2 * m)
        for m in range(M + 1)
    )
    operator = math.exp(top * R) * _exp_tail(step, M)
    return size * (taylor + operator)


def choose_truncations(
    w: WaveCombo,
    t: float,
    R: float,  # pylint: disable=invalid-name
    tolerance: float,
    scan_degree: int = SCAN_DEGREE,
) -> Tuple[int, int, float]:
    """
    Pick (M, N) for a window |x| <= R and return them with the bound

    M is the first order whose operator tail is below tolerance / 2. The
    Taylor degree N0 comes from the growth tail of F_n in A_{1,2K+1}, read
    on the window through the weight e^(σR), and N = 2M + N0 is raised
    until the full bound meets the tolerance.
    """
    if not tolerance > 0:
        raise SuperoscillationError(
            f'Tolerance must be positive, got {tolerance!r}.'
        )
    size, top = w.weight_sum, w.max_frequency
    step = abs(t) * top * top

    M = 0  # pylint: disable=invalid-name
    while size * math.exp(top * R) * _exp_tail(step, M) > tolerance / 2:
        M += 1  # pylint: disable=invalid-name
        if M > MAX_ORDER:
            raise SuperoscillationError(
                f'No operator truncation up to {MAX_ORDER} reaches '
                f'{tolerance!r}.'
            )

    sigma = 2 * top + 1
    try:
        tails = taylor_tail_norms(
            taylor_series(w, scan_degree),
            GrowthParams(ProximateOrder.constant(1.0), sigma),
        )
    except GrowthError as e:
        raise SuperoscillationError(
            f'Cannot bound the Taylor tail: {e}'
        ) from e
    small = np.nonzero(tails + sigma * R < math.log(tolerance / 2))[0]
    if small.size == 0 or small[0] > scan_degree:
        raise SuperoscillationError(
            f'The Taylor tail does not reach {tolerance!r} below degree '
            f'{scan_degree}.'
        )
    N = 2 * M + max(int(small[0]) - 1, 0)  # pylint: disable=invalid-name

    bound = truncation_bound(w, t, M, N, R)
    while bound > tolerance:
        N += 1  # pylint: disable=invalid-name
        if N > 2 * M + 2 * scan_degree:
            raise SuperoscillationError(
                f'No Taylor truncation reaches {tolerance!r}.'
            )
        bound = truncation_bound(w, t, M, N, R)
    return M, N, bound


@dataclass(frozen=True)
class EvolutionComparison:
    max_deviation: float
    bound: float
    tolerance: float
    M: int  # pylint: disable=invalid-name
    N: int  # pylint: disable=invalid-name
    passed: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            'max_deviation': self.max_deviation,
            'bound': self.bound,
            'tolerance': self.tolerance,
            'M': self.M,
            'N': self.N,
            'pass': self.passed,
        }


def compare_evolution(
    w: WaveCombo,
    t: float,
    M: int,  # pylint: disable=invalid-name
    N: int,  # pylint: disable=invalid-name
    x_grid: Any,
    tolerance: float = 1e-8,
) -> EvolutionComparison:
    """
    Largest distance on x_grid between the operator evolution and the
    closed form, checked against the truncation bound plus tolerance for
    rounding
    """
    x = np.asarray(x_grid, dtype=float)
    if x.size == 0:
        raise SuperoscillationError('Empty comparison grid.')
    series = evolve_via_operator(w, t, M, N)
    exact = evolve(w, t).evaluate(x)
    deviation = float(np.max(np.abs(evaluate_on_line(series, x) - exact)))
    bound = truncation_bound(w, t, M, N, float(np.max(np.abs(x))))
    return EvolutionComparison(
        deviation,
        bound,
        tolerance,
        M,
        N,
        bool(deviation <= bound + tolerance),
    )
