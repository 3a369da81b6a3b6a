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

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

import numpy as np

from mpmath.ctx_mp import MPContext

from sliceforge.clifford import CliffordNumber

# digits kept beyond the cancellation of the binomial amplitudes
GUARD_DIGITS = 30


class SuperoscillationError(Exception):
    """
    Some error has occurred while building or evolving a wave combination
    """


@dataclass(frozen=True)
class WaveCombo:
    """
    ψ(z) = Σ_k w_k exp(i (k z - k² time)), a finite sum of plane waves

    Weights and frequencies are exact rationals. ``time`` is the free
    evolution applied so far, so the amplitude of a term is w_k e^(-i k² time).
    """

    weights: Tuple[Fraction, ...]
    frequencies: Tuple[Fraction, ...]
    n_param: int
    a_param: float
    time: float = 0.0

    def __post_init__(self):
        if len(self.weights) != len(self.frequencies):
            raise SuperoscillationError(
                f'{len(self.weights)} weights for '
                f'{len(self.frequencies)} frequencies.'
            )
        if not self.weights:
            raise SuperoscillationError('A wave combination needs a term.')

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def max_frequency(self) -> float:
        return float(max(abs(k) for k in self.frequencies))

    @property
    def weight_sum(self) -> float:
        """
        Σ |w_k|, the size of the largest possible cancellation
        """
        return float(sum(abs(w) for w in self.weights))

    def precision(self) -> int:
        """
        Decimal digits that survive the cancellation Σ |w_k| -> O(1)
        """
        size = self.weight_sum
        lost = math.ceil(math.log10(size)) if size > 1 else 0
        return GUARD_DIGITS + lost

    def context(self) -> MPContext:
        # one context per call keeps evaluations thread safe
        ctx = MPContext()
        ctx.dps = self.precision()
        return ctx

    def mp_amplitudes(self, ctx: MPContext) -> List[Any]:
        """
        w_k e^(-i k² time) in the precision of ctx
        """
        return [
            to_mp(ctx, w) * _phase(ctx, k * k, self.time)
            for w, k in zip(self.weights, self.frequencies)
        ]

    def amplitudes(self) -> np.ndarray:
        ctx = self.context()
        return np.array([complex(value) for value in self.mp_amplitudes(ctx)])

    @property
    def terms(self) -> List[Tuple[CliffordNumber, float]]:
        """
        (amplitude, frequency) pairs with the amplitude in C_{e1} ⊂ R_1
        """
        return [
            (CliffordNumber(1, [value.real, value.imag]), float(k))
            for value, k in zip(self.amplitudes(), self.frequencies)
        ]

    def amplitude_sum(self) -> complex:
        ctx = self.context()
        return complex(ctx.fsum(self.mp_amplitudes(ctx)))

    @property
    def _evenly_spaced(self) -> bool:
        # frequencies 1 - 2j/n for j = 0..n
        count = len(self.frequencies) - 1
        return count > 0 and self.frequencies == tuple(
            1 - Fraction(2 * j, count) for j in range(count + 1)
        )

    def _values(self, ctx: MPContext, points: Sequence[complex]) -> List[Any]:
        amplitudes = self.mp_amplitudes(ctx)
        values = []
        if self._evenly_spaced:
            # e^(iz) Σ_j A_j q^j with q = e^(-2iz/n)
            count = len(amplitudes) - 1
            for z in points:
                z = ctx.mpc(z)
                q = ctx.expj(-2 * z / count)
                values.append(
                    ctx.expj(z) * ctx.polyval(amplitudes[::-1], q)
                )
            return values
        for z in points:
            z = ctx.mpc(z)
            values.append(
                ctx.fsum(
                    amplitude * _wave(ctx, k, z)
                    for amplitude, k in zip(amplitudes, self.frequencies)
                )
            )
        return values

    def evaluate(self, z: Any) -> Any:
        """
        ψ at a real or complex point or at an array of them
        """
        points = np.asarray(z, dtype=complex)
        ctx = self.context()
        values = self._values(ctx, points.ravel())
        result = np.array([complex(value) for value in values])
        if points.ndim == 0:
            return complex(result[0])
        return result.reshape(points.shape)

    def deviation(self, z: Any, a: float, t: float) -> np.ndarray:
        """
        |ψ(z) - exp(i (a z - a² t))| with the difference taken in
        multiprecision
        """
        points = np.asarray(z, dtype=complex)
        ctx = self.context()
        values = self._values(ctx, points.ravel())
        a_mp = ctx.mpf(a)
        result = np.array(
            [
                float(
                    abs(
                        value
                        - _wave(ctx, a_mp, ctx.mpc(point))
                        * _phase(ctx, a_mp * a_mp, t)
                    )
                )
                for value, point in zip(values, points.ravel())
            ]
        )
        return result.reshape(points.shape)


def to_mp(ctx: MPContext, value: Fraction) -> Any:
    """
    An exact rational rounded to the precision of ctx
    """
    return ctx.mpf(value.numerator) / value.denominator


def _wave(ctx: MPContext, k: Any, z: Any) -> Any:
    if isinstance(k, Fraction):
        k = to_mp(ctx, k)
    return ctx.expj(k * z)


def _phase(ctx: MPContext, k_squared: Any, t: float) -> Any:
    # e^(-i k² t)
    if isinstance(k_squared, Fraction):
        k_squared = to_mp(ctx, k_squared)
    return ctx.expj(-k_squared * ctx.mpf(t))


def build_Fn(  # pylint: disable=invalid-name
    n: int, a: float, *, allow_boundary: bool = False
) -> WaveCombo:
    """
    F_n(x, a) = Σ_k C(n, k) ((1 + a)/2)^(n-k) ((1 - a)/2)^k e^(i(1 - 2k/n)x)

    ``allow_boundary`` admits a = 1, where F_n(x, 1) = e^(ix).
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise SuperoscillationError(f'n must be a positive integer, got {n!r}.')
    if not math.isfinite(a):
        raise SuperoscillationError(f'a must be finite, got {a!r}.')
    if a < 1 or (a == 1 and not allow_boundary):
        raise SuperoscillationError(
            f'Superoscillations need a > 1, got {a!r}.'
        )
    exact = Fraction(a)
    plus, minus = (1 + exact) / 2, (1 - exact) / 2
    weights = tuple(
        math.comb(n, k) * plus ** (n - k) * minus ** k for k in range(n + 1)
    )
    frequencies = tuple(1 - Fraction(2 * k, n) for k in range(n + 1))
    return WaveCombo(weights, frequencies, n, float(a))


def evolve(w: WaveCombo, t: float) -> WaveCombo:
    """
    Free evolution by U = Σ (it)^m/m! ∂^(2m): e^(ikx) -> e^(-ik²t) e^(ikx)
    """
    if not math.isfinite(t):
        raise SuperoscillationError(f't must be finite, got {t!r}.')
    return replace(w, time=w.time + float(t))


def plane_wave_limit(z: Any, a: float, t: float) -> Any:
    """
    exp(i (a z - a² t)), the limit of the evolved F_n
    """
    return np.exp(1j * (a * np.asarray(z, dtype=complex) - a * a * t))
