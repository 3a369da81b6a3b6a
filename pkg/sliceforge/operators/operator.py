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

from typing import Any, Dict, Optional, Sequence

import numpy as np

from sliceforge.proximate import (
    ProximateOrder,
    ProximateOrderError,
    normalize,
)
from sliceforge.report import VerificationReport
from sliceforge.series import (
    SeriesError,
    SliceSeries,
    derivative_power,
    star_product,
)

DOMINATION_RADII = np.geomspace(1.0, 1e8, 400)


class OperatorError(Exception):
    """
    Some error has occurred while building or applying an operator
    """


def default_order() -> ProximateOrder:
    return ProximateOrder.constant(1.0)


def normalized_order(po: ProximateOrder) -> ProximateOrder:
    """
    ϱ̂, the normalization of ϱ glued at its own r0
    """
    if po.normalized:
        return po
    return normalize(po, po.r0)


class InfOrderOperator:
    """
    P = Σ_{ℓ <= L} u_ℓ ⋆ ∂^ℓ, acting from A_{ϱ1} to A_{ϱ2}

    ``truncated`` records that the coefficient sequence of the operator
    continues beyond L.
    """

    def __init__(
        self,
        coeffs: Sequence[SliceSeries],
        rho1: Optional[ProximateOrder] = None,
        rho2: Optional[ProximateOrder] = None,
        *,
        truncated: bool = False,
    ):
        if not coeffs:
            raise OperatorError('An operator needs at least one coefficient.')
        n = coeffs[0].n
        for ell, u in enumerate(coeffs):
            if u.n != n:
                raise OperatorError(
                    f'Coefficient u_{ell} lives in R_{u.n}, expected R_{n}.'
                )
            if u.center != 0.0:
                raise OperatorError(
                    f'Coefficient u_{ell} must be centered at 0, '
                    f'got {u.center!r}.'
                )
        self.n = n
        self.coeffs = tuple(coeffs)
        self.rho1 = rho1 if rho1 is not None else default_order()
        self.rho2 = rho2 if rho2 is not None else default_order()
        self.truncated = bool(truncated)

    @property
    def L(self) -> int:  # pylint: disable=invalid-name
        return len(self.coeffs) - 1

    @classmethod
    def from_constants(
        cls,
        n: int,
        values: Sequence[Any],
        rho1: Optional[ProximateOrder] = None,
        rho2: Optional[ProximateOrder] = None,
        *,
        truncated: bool = False,
    ) -> 'InfOrderOperator':
        """
        An operator whose coefficients u_ℓ are constants (floats or Clifford
        numbers)
        """
        return cls(
            [SliceSeries.constant(n, value) for value in values],
            rho1,
            rho2,
            truncated=truncated,
        )

    @classmethod
    def translation(
        cls, n: int, a: float, L: int  # pylint: disable=invalid-name
    ) -> 'InfOrderOperator':
        """
        f(x) -> f(x + a) with u_ℓ = a^ℓ / ℓ!
        """
        return cls.from_constants(
            n,
            [a ** ell / math.factorial(ell) for ell in range(L + 1)],
            truncated=a != 0,
        )

    def max_coefficient_gap(self, other: 'InfOrderOperator') -> float:
        """
        Largest coefficient-wise distance between the u_ℓ of two operators
        """
        if other.n != self.n:
            raise OperatorError(f'Dimension mismatch: {self.n} and {other.n}.')
        count = max(self.L, other.L) + 1
        gap = 0.0
        for ell in range(count):
            first = self.coeffs[ell] if ell <= self.L else None
            second = other.coeffs[ell] if ell <= other.L else None
            if first is None:
                first = SliceSeries.constant(self.n, 0.0)
            if second is None:
                second = SliceSeries.constant(self.n, 0.0)
            difference = first - second
            gap = max(gap, float(np.max(np.abs(difference.coeffs))))
        return gap

    def __repr__(self) -> str:
        return (
            f'InfOrderOperator(n={self.n}, L={self.L}, rho1={self.rho1!r}, '
            f'rho2={self.rho2!r}, truncated={self.truncated})'
        )

    def to_json(self) -> Dict[str, Any]:
        data = {
            'n': self.n,
            'L': self.L,
            'coeffs': [u.to_json() for u in self.coeffs],
            'rho1': self.rho1.to_json(),
            'rho2': self.rho2.to_json(),
        }
        if self.truncated:
            data['truncated'] = True
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'InfOrderOperator':
        try:
            coeffs = [SliceSeries.from_json(item) for item in data['coeffs']]
            rho1 = ProximateOrder.from_json(data['rho1'])
            rho2 = ProximateOrder.from_json(data['rho2'])
            n = int(data['n'])
            L = int(data['L'])  # pylint: disable=invalid-name
        except (
            KeyError,
            TypeError,
            ValueError,
            SeriesError,
            ProximateOrderError,
        ) as e:
            raise OperatorError(f'Malformed operator: {e}') from e
        if len(coeffs) != L + 1:
            raise OperatorError(
                f'Declared L={L} but found {len(coeffs)} coefficients.'
            )
        operator = cls(
            coeffs, rho1, rho2, truncated=data.get('truncated', False)
        )
        if operator.n != n:
            raise OperatorError('Coefficient dimension differs from n.')
        return operator


def apply(P: InfOrderOperator, f: SliceSeries) -> SliceSeries:
    """
    Σ_{ℓ <= min(L, N_f)} u_ℓ ⋆ ∂^ℓ f

    The sum is exact since ∂^ℓ f vanishes for ℓ > N_f. Cutting an operator
    with a longer coefficient sequence marks the result as truncated.
    """
    if f.n != P.n:
        raise OperatorError(f'Dimension mismatch: R_{P.n} and R_{f.n}.')
    if f.center != 0.0:
        raise OperatorError(
            f'Operators act on series centered at 0, got {f.center!r}.'
        )
    result = None
    for ell in range(min(P.L, f.N) + 1):
        term = star_product(P.coeffs[ell], derivative_power(f, ell))
        result = term if result is None else result + term
    truncated = result.truncated or (P.truncated and f.degree > P.L)
    return SliceSeries(P.n, result.coeffs, truncated=truncated)


def check_growth_domination(
    po1: ProximateOrder,
    po2: ProximateOrder,
    radii: np.ndarray = DOMINATION_RADII,
    tolerance: float = 1e-9,
) -> VerificationReport:
    """
    r^ϱ1(r) = O(r^ϱ2(r)) read on a log grid: the log ratio over the upper
    half of the radii may not exceed its maximum over the lower half
    """
    log_ratio = po1.log_power(radii) - po2.log_power(radii)
    half = len(radii) // 2
    head = float(np.max(log_ratio[:half]))
    tail = float(np.max(log_ratio[half:]))
    with np.errstate(over='ignore'):
        constant = float(np.exp(max(head, tail)))
    return VerificationReport(
        lemma='growth-domination',
        params={'rho1': po1.to_json(), 'rho2': po2.to_json()},
        empirical_constant=constant,
        max_violation=max(0.0, tail - head),
        passed=bool(tail <= head + tolerance),
        grid={
            'r_min': float(radii[0]),
            'r_max': float(radii[-1]),
            'count': len(radii),
        },
    )
