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

from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from sliceforge.clifford import CliffordNumber
from sliceforge.proximate import ProximateOrder
from sliceforge.report import VerificationReport
from sliceforge.series import SliceSeries, star_product

from .operator import InfOrderOperator, OperatorError, apply

DEFAULT_MAX_DEGREE = 64


@dataclass(frozen=True)
class AbstractOperator:
    """
    A right linear operator T known through its images T(x^k), k <= max_degree
    """

    n: int
    action: Callable[[int], SliceSeries]
    max_degree: int
    name: str = 'T'

    def image(self, k: int) -> SliceSeries:
        if not 0 <= k <= self.max_degree:
            raise OperatorError(
                f'{self.name} is known on degrees 0..{self.max_degree}, '
                f'got {k}.'
            )
        result = self.action(k)
        if result.n != self.n or result.center != 0.0:
            raise OperatorError(
                f'{self.name}(x^{k}) must be a series over R_{self.n} '
                'centered at 0.'
            )
        return result

    def __call__(self, f: SliceSeries) -> SliceSeries:
        """
        T(Σ x^m a_m) = Σ T(x^m) a_m
        """
        if f.n != self.n:
            raise OperatorError(f'Dimension mismatch: R_{self.n} and R_{f.n}.')
        result = SliceSeries.constant(self.n, 0.0)
        for m, coefficient in enumerate(f.coefficients()):
            if not np.any(coefficient.coeffs):
                continue
            result = result + self.image(m).times_right(coefficient)
        return result

    @classmethod
    def identity(
        cls, n: int, max_degree: int = DEFAULT_MAX_DEGREE
    ) -> 'AbstractOperator':
        return cls(
            n,
            lambda k: SliceSeries.monomial(n, k),
            max_degree,
            name='identity',
        )

    @classmethod
    def translation(
        cls, n: int, a: float, max_degree: int = DEFAULT_MAX_DEGREE
    ) -> 'AbstractOperator':
        """
        f(x) -> f(x + a) for a real shift a, T(x^k) = (x + a)^k
        """

        def action(k: int) -> SliceSeries:
            return SliceSeries.scalar_polynomial(
                n, [math.comb(k, m) * a ** (k - m) for m in range(k + 1)]
            )

        return cls(n, action, max_degree, name=f'translation({a!r})')

    @classmethod
    def derivative(
        cls, n: int, max_degree: int = DEFAULT_MAX_DEGREE
    ) -> 'AbstractOperator':
        def action(k: int) -> SliceSeries:
            if k == 0:
                return SliceSeries.constant(n, 0.0)
            return SliceSeries.scalar_polynomial(n, [0.0] * (k - 1) + [k])

        return cls(n, action, max_degree, name='derivative')

    @classmethod
    def composition(
        cls, outer: 'AbstractOperator', inner: 'AbstractOperator'
    ) -> 'AbstractOperator':
        """
        outer ∘ inner, known on the degrees where inner is known
        """
        if outer.n != inner.n:
            raise OperatorError(
                f'Dimension mismatch: R_{outer.n} and R_{inner.n}.'
            )
        return cls(
            inner.n,
            lambda k: outer(inner.image(k)),
            inner.max_degree,
            name=f'{outer.name}∘{inner.name}',
        )

    @classmethod
    def from_operator(
        cls, P: InfOrderOperator, max_degree: Optional[int] = None
    ) -> 'AbstractOperator':
        """
        The action of P on monomials, exact up to degree L for a truncated P
        and on every degree otherwise
        """
        if max_degree is None:
            max_degree = P.L if P.truncated else sys.maxsize
        return cls(
            P.n,
            lambda k: apply(P, SliceSeries.monomial(P.n, k)),
            max_degree,
            name='P',
        )


def _negated_power(n: int, power: int) -> SliceSeries:
    # (-x)^power
    return SliceSeries.monomial(
        n, power, CliffordNumber.scalar(n, (-1.0) ** power)
    )


def coefficients_from_operator(
    T: AbstractOperator,
    L: int,  # pylint: disable=invalid-name
    rho1: Optional[ProximateOrder] = None,
    rho2: Optional[ProximateOrder] = None,
) -> InfOrderOperator:
    """
    u_ℓ = (1/ℓ!) Σ_{k <= ℓ} C(ℓ, k) T(x^k) ⋆ (-x)^(ℓ-k) for ℓ = 0..L

    The binomial sum is accumulated before the division by ℓ!, so the
    alternating sums that telescope to zero do so exactly. The result is
    marked truncated when T is known beyond degree L.
    """
    if L < 0:
        raise OperatorError(f'Negative truncation {L}.')
    if L > T.max_degree:
        raise OperatorError(
            f'{T.name} is known up to degree {T.max_degree}, need {L}.'
        )
    images = [T.image(k) for k in range(L + 1)]

    coeffs: List[SliceSeries] = []
    for ell in range(L + 1):
        total = SliceSeries.constant(T.n, 0.0)
        for k in range(ell + 1):
            term = star_product(images[k], _negated_power(T.n, ell - k))
            total = total + term * math.comb(ell, k)
        coeffs.append(total * (1 / math.factorial(ell)))
    return InfOrderOperator(coeffs, rho1, rho2, truncated=L < T.max_degree)


def representation_identity_check(
    T: AbstractOperator,
    L: int,  # pylint: disable=invalid-name
    M: int,  # pylint: disable=invalid-name
    *,
    trials: int = 20,
    seed: int = 0,
    tolerance: float = 1e-10,
) -> VerificationReport:
    """
    Compare apply(P, f) with T(f) for random Clifford polynomials f of
    degree M, where P is rebuilt from T with L coefficients

    Errors are measured coefficient-wise relative to max(1, max |T(f)|).
    """
    if M > T.max_degree:
        raise OperatorError(
            f'{T.name} is known up to degree {T.max_degree}, need {M}.'
        )
    if L < M:
        raise OperatorError(f'Need L >= M, got L={L} and M={M}.')
    P = coefficients_from_operator(T, L)
    rng = np.random.default_rng(seed)

    errors = []
    for _ in range(trials):
        f = SliceSeries.random(T.n, M, rng)
        expected = T(f)
        actual = apply(P, f)
        degree = max(expected.N, actual.N)
        difference = (
            actual.padded(degree).coeffs - expected.padded(degree).coeffs
        )
        scale = max(1.0, float(np.max(np.abs(expected.coeffs))))
        errors.append(float(np.max(np.abs(difference))) / scale)

    worst = max(errors) if errors else 0.0
    return VerificationReport(
        lemma='representation-identity',
        params={'operator': T.name, 'n': T.n, 'L': L, 'M': M},
        empirical_constant=worst,
        max_violation=worst,
        passed=bool(worst <= tolerance),
        grid={'trials': trials, 'seed': seed},
        details={'tolerance': tolerance},
    )


def verify_reconstruction(
    P: InfOrderOperator, tolerance: float = 1e-11
) -> VerificationReport:
    """
    Rebuild the coefficients of P from its own action on monomials and
    compare them with the stored u_ℓ
    """
    Q = coefficients_from_operator(AbstractOperator.from_operator(P), P.L)
    gap = P.max_coefficient_gap(Q)
    return VerificationReport(
        lemma='reconstruction-round-trip',
        params={'n': P.n, 'L': P.L},
        empirical_constant=gap,
        max_violation=gap,
        passed=bool(gap <= tolerance),
        details={'tolerance': tolerance},
    )


def verify_telescoping(max_order: int = 30) -> VerificationReport:
    """
    Σ_{ℓ <= d} (-1)^ℓ C(d, ℓ) = δ_{d,0} for d = 0..max_order, in integers
    """
    sums = [
        sum((-1) ** ell * math.comb(d, ell) for ell in range(d + 1))
        for d in range(max_order + 1)
    ]
    deviations = [
        abs(value - (1 if d == 0 else 0)) for d, value in enumerate(sums)
    ]
    return VerificationReport(
        lemma='telescoping',
        params={'max_order': max_order},
        empirical_constant=float(max(deviations)),
        max_violation=float(max(deviations)),
        passed=not any(deviations),
        details={'sums': sums},
    )
