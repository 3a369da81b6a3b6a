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
# pylint: disable=protected-access

import math

from numbers import Real
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from scipy.special import comb, gammaln

from sliceforge.clifford import (
    CliffordError,
    CliffordNumber,
    ImaginaryUnit,
    Paravector,
    decompose,
    multiply_components,
)
from sliceforge.clifford.algebra import check_dimension


class SeriesError(Exception):
    """
    Some error has occurred while handling a slice series
    """


def _dimension(n: int) -> int:
    try:
        return check_dimension(n)
    except CliffordError as e:
        raise SeriesError(str(e)) from e


class SliceSeries:
    """
    A left slice monogenic function f(x) = Σ_ℓ (x - c)^ℓ a_ℓ

    The Clifford coefficients a_0..a_N stand to the right of the powers and
    the center c is real. ``truncated`` marks series cut off from an entire
    function with a nonzero tail, as opposed to exact polynomials.
    """

    __slots__ = ('_n', '_coeffs', '_center', '_truncated')

    def __init__(
        self,
        n: int,
        coeffs: Any,
        *,
        center: float = 0.0,
        truncated: bool = False,
    ):
        self._n = _dimension(n)
        values = np.array(coeffs, dtype=float)
        if values.ndim != 2 or values.shape[1] != 1 << self._n:
            raise SeriesError(
                f'Coefficients for n={self._n} need the shape '
                f'(N + 1, {1 << self._n}), got {values.shape}.'
            )
        if values.shape[0] == 0:
            raise SeriesError('A series needs at least one coefficient.')
        values.setflags(write=False)
        self._coeffs = values
        self._center = float(center)
        self._truncated = bool(truncated)

    @classmethod
    def from_coefficients(
        cls,
        coefficients: Sequence[CliffordNumber],
        *,
        center: float = 0.0,
        truncated: bool = False,
    ) -> 'SliceSeries':
        if not coefficients:
            raise SeriesError('A series needs at least one coefficient.')
        n = coefficients[0].n
        if any(coefficient.n != n for coefficient in coefficients):
            raise SeriesError('All coefficients must live in the same R_n.')
        return cls(
            n,
            [coefficient.coeffs for coefficient in coefficients],
            center=center,
            truncated=truncated,
        )

    @classmethod
    def constant(
        cls, n: int, value: Union[CliffordNumber, float] = 1.0
    ) -> 'SliceSeries':
        if not isinstance(value, CliffordNumber):
            value = CliffordNumber.scalar(n, float(value))
        return cls(n, [value.coeffs])

    @classmethod
    def monomial(
        cls,
        n: int,
        ell: int,
        coefficient: Optional[CliffordNumber] = None,
    ) -> 'SliceSeries':
        if ell < 0:
            raise SeriesError(f'Negative degree {ell}.')
        if coefficient is None:
            coefficient = CliffordNumber.scalar(n, 1.0)
        coeffs = np.zeros((ell + 1, 1 << _dimension(n)))
        coeffs[ell] = coefficient.coeffs
        return cls(n, coeffs)

    @classmethod
    def scalar_polynomial(
        cls, n: int, values: Sequence[float]
    ) -> 'SliceSeries':
        coeffs = np.zeros((len(values), 1 << _dimension(n)))
        coeffs[:, 0] = values
        return cls(n, coeffs)

    @classmethod
    def exponential(cls, n: int, sigma0: float, N: int) -> 'SliceSeries':
        """
        Truncation of e^(σ0 x) = Σ σ0^ℓ x^ℓ / ℓ! at degree N
        """
        ells = np.arange(N + 1)
        if sigma0 == 0:
            values = (ells == 0).astype(float)
        else:
            values = np.exp(
                ells * math.log(abs(sigma0)) - gammaln(ells + 1)
            ) * np.sign(sigma0) ** ells
        coeffs = np.zeros((N + 1, 1 << _dimension(n)))
        coeffs[:, 0] = values
        return cls(n, coeffs, truncated=sigma0 != 0)

    @classmethod
    def random(
        cls, n: int, N: int, rng: np.random.Generator
    ) -> 'SliceSeries':
        return cls(n, rng.standard_normal((N + 1, 1 << _dimension(n))))

    @property
    def n(self) -> int:
        return self._n

    @property
    def N(self) -> int:  # pylint: disable=invalid-name
        return self._coeffs.shape[0] - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def center(self) -> float:
        return self._center

    @property
    def truncated(self) -> bool:
        return self._truncated

    @property
    def degree(self) -> int:
        nonzero = np.nonzero(np.any(self._coeffs != 0, axis=1))[0]
        return int(nonzero[-1]) if nonzero.size else 0

    def coefficient(self, ell: int) -> CliffordNumber:
        if ell > self.N:
            return CliffordNumber.zero(self._n)
        return CliffordNumber(self._n, self._coeffs[ell])

    def coefficients(self) -> List[CliffordNumber]:
        return [CliffordNumber(self._n, row) for row in self._coeffs]

    def coefficient_norms(self) -> np.ndarray:
        # hypot keeps tiny coefficients from underflowing when squared
        return np.hypot.reduce(np.abs(self._coeffs), axis=1)

    def log_coefficient_norms(self) -> np.ndarray:
        """
        ln |a_ℓ| with -inf for vanishing (or underflowed) coefficients
        """
        with np.errstate(divide='ignore'):
            return np.log(self.coefficient_norms())

    def tail_vanishes(self) -> bool:
        """
        True when a_ℓ = 0 for all ℓ in [⌈N/2⌉, N], ℓ >= 1
        """
        start = max(1, -(-self.N // 2))
        return not np.any(self._coeffs[start:])

    def padded(self, N: int) -> 'SliceSeries':  # pylint: disable=invalid-name
        if N <= self.N:
            return self
        coeffs = np.zeros((N + 1, 1 << self._n))
        coeffs[: self.N + 1] = self._coeffs
        return self._like(coeffs)

    def _like(self, coeffs: np.ndarray, **kwargs) -> 'SliceSeries':
        options = {'center': self._center, 'truncated': self._truncated}
        options.update(kwargs)
        return SliceSeries(self._n, coeffs, **options)

    def _check_compatible(self, other: 'SliceSeries') -> None:
        if other.n != self._n:
            raise SeriesError(
                f'Dimension mismatch: R_{self._n} and R_{other.n}.'
            )
        if other.center != self._center:
            raise SeriesError(
                f'Series centered at {self._center!r} and {other.center!r}.'
            )

    def __add__(self, other: 'SliceSeries') -> 'SliceSeries':
        if not isinstance(other, SliceSeries):
            return NotImplemented
        self._check_compatible(other)
        N = max(self.N, other.N)  # pylint: disable=invalid-name
        return self.padded(N)._like(
            self.padded(N).coeffs + other.padded(N).coeffs,
            truncated=self._truncated or other.truncated,
        )

    def __sub__(self, other: 'SliceSeries') -> 'SliceSeries':
        if not isinstance(other, SliceSeries):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> 'SliceSeries':
        return self._like(-self._coeffs)

    def __mul__(self, other: Real) -> 'SliceSeries':
        if not isinstance(other, Real):
            return NotImplemented
        return self._like(self._coeffs * float(other))

    __rmul__ = __mul__

    def times_right(self, constant: CliffordNumber) -> 'SliceSeries':
        """
        The series Σ x^ℓ (a_ℓ c) for a Clifford constant c
        """
        if constant.n != self._n:
            raise SeriesError(
                f'Dimension mismatch: R_{self._n} and R_{constant.n}.'
            )
        return self._like(multiply_components(self._coeffs, constant.coeffs))

    def slice_parts(
        self, u: Any, v: Any
    ) -> Tuple[np.ndarray, np.ndarray]:
        """
        Return f_0(u, v) and f_1(u, v) with f(u + jv) = f_0 + j f_1

        u and v broadcast against each other, the results carry a trailing
        axis of 2^n components.
        """
        z = np.asarray(u, dtype=float) - self._center + 1j * np.asarray(
            v, dtype=float
        )
        powers = np.empty((self.N + 1,) + z.shape, dtype=complex)
        powers[0] = 1.0
        for ell in range(1, self.N + 1):
            powers[ell] = powers[ell - 1] * z
        even = np.tensordot(powers.real, self._coeffs, axes=(0, 0))
        odd = np.tensordot(powers.imag, self._coeffs, axes=(0, 0))
        return even, odd

    def evaluate_slice(self, u: Any, v: Any, j: ImaginaryUnit) -> np.ndarray:
        """
        Components of f(u + jv), vectorized over u and v
        """
        even, odd = self.slice_parts(u, v)
        return even + multiply_components(j.as_clifford().coeffs, odd)

    def evaluate(self, x: Paravector) -> CliffordNumber:
        if x.n != self._n:
            raise SeriesError(
                f'Cannot evaluate a series over R_{self._n} at a point '
                f'of R^{x.n + 1}.'
            )
        u, v, j = decompose(x)
        return CliffordNumber(self._n, self.evaluate_slice(u, v, j))

    def __call__(self, x: Paravector) -> CliffordNumber:
        return self.evaluate(x)

    def __repr__(self) -> str:
        return (
            f'SliceSeries(n={self._n}, N={self.N}, center={self._center!r}, '
            f'truncated={self._truncated})'
        )

    def to_json(self) -> Dict[str, Any]:
        data = {
            'n': self._n,
            'N': self.N,
            'coeffs': [
                coefficient.to_json() for coefficient in self.coefficients()
            ],
        }
        if self._center != 0.0:
            data['center'] = self._center
        data['truncated'] = self._truncated
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'SliceSeries':
        """
        Read the series document; without a truncated key the series is
        a truncation exactly when its coefficient tail is nonzero
        """
        try:
            n = data['n']
            N = int(data['N'])  # pylint: disable=invalid-name
            coefficients = [
                CliffordNumber.from_json(item) for item in data['coeffs']
            ]
        except (KeyError, TypeError, ValueError, CliffordError) as e:
            raise SeriesError(f'Malformed slice series: {e}') from e
        if len(coefficients) != N + 1:
            raise SeriesError(
                f'Declared N={N} but found {len(coefficients)} coefficients.'
            )
        if any(coefficient.n != n for coefficient in coefficients):
            raise SeriesError('Coefficient dimension differs from n.')
        f = cls(
            n,
            [coefficient.coeffs for coefficient in coefficients],
            center=data.get('center', 0.0),
            truncated=bool(data.get('truncated', False)),
        )
        if 'truncated' not in data and not f.tail_vanishes():
            # plain coefficient files: a nonzero tail means a truncation
            return f._like(f.coeffs, truncated=True)
        return f


def evaluate(f: SliceSeries, x: Paravector) -> CliffordNumber:
    return f.evaluate(x)


def slice_derivative(f: SliceSeries) -> SliceSeries:
    """
    ∂_S f with coefficients ℓ a_ℓ; a constant has the zero series as
    derivative
    """
    if f.N == 0:
        return f._like(np.zeros_like(f.coeffs))
    factors = np.arange(1, f.N + 1, dtype=float)[:, None]
    return f._like(f.coeffs[1:] * factors)


def derivative_power(f: SliceSeries, order: int) -> SliceSeries:
    """
    ∂_S^k f, computed in one step with falling factorials
    """
    if order < 0:
        raise SeriesError(f'Negative derivative order {order}.')
    if order == 0:
        return f
    if order > f.N:
        return f._like(np.zeros((1, 1 << f.n)))
    ells = np.arange(order, f.N + 1)
    try:
        factors = np.array([float(math.perm(int(ell), order)) for ell in ells])
    except OverflowError:
        factors = np.exp(gammaln(ells + 1) - gammaln(ells - order + 1))
    return f._like(
        f.coeffs[order:] * factors[:, None]
    )


def star_product(f: SliceSeries, g: SliceSeries) -> SliceSeries:
    """
    Cauchy product of the coefficient sequences, truncation N_f + N_g
    """
    if f.n != g.n:
        raise SeriesError(f'Dimension mismatch: R_{f.n} and R_{g.n}.')
    if f.center != g.center:
        raise SeriesError('Star products need series with the same center.')
    products = multiply_components(f.coeffs[:, None, :], g.coeffs[None, :, :])
    index = np.add.outer(np.arange(f.N + 1), np.arange(g.N + 1))
    result = np.zeros((f.N + g.N + 1, 1 << f.n))
    np.add.at(result, index.ravel(), products.reshape(-1, 1 << f.n))
    return SliceSeries(
        f.n,
        result,
        center=f.center,
        truncated=f.truncated or g.truncated,
    )


def components(
    f: SliceSeries, u: float, v: float, j: ImaginaryUnit
) -> Tuple[CliffordNumber, CliffordNumber]:
    """
    f_0 = (f(u+jv) + f(u-jv)) / 2 and f_1 = -j (f(u+jv) - f(u-jv)) / 2
    """
    plus = f.evaluate_slice(u, v, j)
    minus = f.evaluate_slice(u, -v, j)
    even = (plus + minus) / 2
    odd = multiply_components(-j.as_clifford().coeffs, (plus - minus) / 2)
    return CliffordNumber(f.n, even), CliffordNumber(f.n, odd)


def taylor_recenter(f: SliceSeries, a: float) -> SliceSeries:
    """
    Re-expand f around the real point a

    b_k = Σ_{ℓ >= k} C(ℓ, k) (a - c)^(ℓ - k) a_ℓ where c is the old center.
    """
    shift = float(a) - f.center
    if shift == 0.0:
        return f._like(f.coeffs, center=float(a))
    ells = np.arange(f.N + 1)
    exponents = ells[None, :] - ells[:, None]
    transform = np.where(
        exponents >= 0,
        comb(ells[None, :], ells[:, None]) * shift ** np.maximum(exponents, 0),
        0.0,
    )
    return f._like(transform @ f.coeffs, center=float(a))


def cauchy_riemann_residual(
    f: SliceSeries, u: float, v: float, step: float = 1e-4
) -> Tuple[float, float]:
    """
    Central difference norms of ∂_u f_0 - ∂_v f_1 and ∂_v f_0 + ∂_u f_1
    """
    offsets = np.array([-step, step])
    even_u, odd_u = f.slice_parts(u + offsets, v)
    even_v, odd_v = f.slice_parts(u, v + offsets)
    du_even = (even_u[1] - even_u[0]) / (2 * step)
    du_odd = (odd_u[1] - odd_u[0]) / (2 * step)
    dv_even = (even_v[1] - even_v[0]) / (2 * step)
    dv_odd = (odd_v[1] - odd_v[0]) / (2 * step)
    return (
        float(np.linalg.norm(du_even - dv_odd)),
        float(np.linalg.norm(dv_even + du_odd)),
    )


def unit_spread(
    f: SliceSeries, x0: float, units: Sequence[ImaginaryUnit]
) -> float:
    """
    Largest distance between the values f(x0) computed on different slices
    """
    values = np.array([f.evaluate_slice(x0, 0.0, j) for j in units])
    return float(np.max(np.linalg.norm(values - values[0], axis=1)))
