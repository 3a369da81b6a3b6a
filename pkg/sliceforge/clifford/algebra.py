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

from functools import lru_cache
from numbers import Real
from typing import Any, Dict, Tuple, Union

import numpy as np

MAX_DIMENSION = 8


class CliffordError(Exception):
    """
    Some error has occurred in the Clifford arithmetic
    """


def check_dimension(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise CliffordError(f'Dimension must be an integer, got {n!r}.')
    if n < 1 or n > MAX_DIMENSION:
        raise CliffordError(
            f'Dimension {n} outside the supported range 1..{MAX_DIMENSION}.'
        )
    return int(n)


def blade_sign(a: int, b: int) -> float:
    """
    Sign of the basis product e_A e_B = ±e_{A xor B} for the bitmasks a and b

    Indices inside a blade are kept in increasing order. The sign collects
    one factor -1 per transposition needed to sort the concatenated indices
    and one factor -1 per unit occurring in both blades (e_i² = -1).
    """
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += bin(shifted & b).count('1')
        shifted >>= 1
    swaps += bin(a & b).count('1')
    return -1.0 if swaps & 1 else 1.0


@lru_cache(maxsize=None)
def multiplication_table(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Return the arrays (partner, sign) of shape (2^n, 2^n)

    The product of the blades i and partner[i, k] is sign[i, k] * e_k, so the
    k-th component of a product ab is sum_i sign[i, k] a_i b_partner[i, k].
    """
    n = check_dimension(n)
    dim = 1 << n
    blades = np.arange(dim)
    partner = blades[:, None] ^ blades[None, :]
    sign = np.empty((dim, dim))
    for i in range(dim):
        for k in range(dim):
            sign[i, k] = blade_sign(i, int(partner[i, k]))

    partner.setflags(write=False)
    sign.setflags(write=False)
    return partner, sign


def dimension_of(components: np.ndarray) -> int:
    size = components.shape[-1]
    n = size.bit_length() - 1
    if size != 1 << n:
        raise CliffordError(f'{size} is not a valid number of components.')
    return check_dimension(n)


def multiply_components(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """
    Clifford product of component arrays of shape (..., 2^n)

    Leading axes broadcast like any numpy binary operation.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[-1] != b.shape[-1]:
        raise CliffordError(
            f'Dimension mismatch: {a.shape[-1]} and {b.shape[-1]} components.'
        )
    partner, sign = multiplication_table(dimension_of(a))
    return np.einsum('...i,...ik,ik->...k', a, b[..., partner], sign)


@lru_cache(maxsize=None)
def conjugation_signs(n: int) -> np.ndarray:
    grades = np.array([bin(blade).count('1') for blade in range(1 << n)])
    signs = np.where((grades * (grades + 1) // 2) % 2 == 0, 1.0, -1.0)
    signs.setflags(write=False)
    return signs


class CliffordNumber:
    """
    Element of the real Clifford algebra R_n

    The component with index A is the coefficient of e_A where bit i - 1 of
    A marks e_i. Instances are immutable.
    """

    __slots__ = ('_n', '_coeffs')

    def __init__(self, n: int, coeffs: Any = None):
        self._n = check_dimension(n)
        dim = 1 << self._n
        if coeffs is None:
            values = np.zeros(dim)
        else:
            values = np.array(coeffs, dtype=float)
            if values.shape != (dim,):
                raise CliffordError(
                    f'Expected {dim} components for n={n}, '
                    f'got shape {values.shape}.'
                )
        values.setflags(write=False)
        self._coeffs = values

    @classmethod
    def zero(cls, n: int) -> 'CliffordNumber':
        return cls(n)

    @classmethod
    def scalar(cls, n: int, value: float) -> 'CliffordNumber':
        coeffs = np.zeros(1 << check_dimension(n))
        coeffs[0] = value
        return cls(n, coeffs)

    @classmethod
    def basis(cls, n: int, *indices: int) -> 'CliffordNumber':
        """
        The product e_{i1} e_{i2} ... of the given units, in the given order
        """
        result = cls.scalar(n, 1.0)
        for index in indices:
            if index < 1 or index > n:
                raise CliffordError(f'e_{index} does not exist for n={n}.')
            unit = np.zeros(1 << n)
            unit[1 << (index - 1)] = 1.0
            result = result * cls(n, unit)
        return result

    @property
    def n(self) -> int:
        return self._n

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def scalar_part(self) -> float:
        return float(self._coeffs[0])

    def component(self, *indices: int) -> float:
        mask = 0
        for index in indices:
            mask |= 1 << (index - 1)
        return float(self._coeffs[mask])

    def norm(self) -> float:
        return float(np.linalg.norm(self._coeffs))

    def conjugate(self) -> 'CliffordNumber':
        signs = conjugation_signs(self._n)
        return CliffordNumber(self._n, self._coeffs * signs)

    def is_close(
        self, other: 'CliffordNumber', tolerance: float = 1e-12
    ) -> bool:
        self._check_same_dimension(other)
        return bool(
            np.max(np.abs(self._coeffs - other.coeffs), initial=0.0)
            <= tolerance
        )

    def _check_same_dimension(self, other: 'CliffordNumber') -> None:
        if other.n != self._n:
            raise CliffordError(
                f'Dimension mismatch: R_{self._n} and R_{other.n}.'
            )

    def __add__(self, other: Union['CliffordNumber', Real]):
        if isinstance(other, Real):
            return self + CliffordNumber.scalar(self._n, float(other))
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        self._check_same_dimension(other)
        return CliffordNumber(self._n, self._coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other: Union['CliffordNumber', Real]):
        if isinstance(other, Real):
            return self + (-float(other))
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        self._check_same_dimension(other)
        return CliffordNumber(self._n, self._coeffs - other.coeffs)

    def __rsub__(self, other: Real):
        return (-self) + other

    def __neg__(self) -> 'CliffordNumber':
        return CliffordNumber(self._n, -self._coeffs)

    def __mul__(self, other: Union['CliffordNumber', Real]):
        if isinstance(other, Real):
            return CliffordNumber(self._n, self._coeffs * float(other))
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        return clifford_mul(self, other)

    def __rmul__(self, other: Real):
        if isinstance(other, Real):
            return CliffordNumber(self._n, self._coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other: Real):
        if not isinstance(other, Real):
            return NotImplemented
        return CliffordNumber(self._n, self._coeffs / float(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CliffordNumber):
            return NotImplemented
        return self._n == other.n and bool(
            np.array_equal(self._coeffs, other.coeffs)
        )

    __hash__ = None

    def __repr__(self) -> str:
        terms = []
        for blade, value in enumerate(self._coeffs):
            if value == 0.0:
                continue
            units = ''.join(
                f'e{i + 1}' for i in range(self._n) if blade & (1 << i)
            )
            terms.append(f'{value!r}{"*" + units if units else ""}')
        return f'CliffordNumber(n={self._n}, {" + ".join(terms) or "0"})'

    def to_json(self) -> Dict[str, Any]:
        return {
            'n': self._n,
            'coeffs': {
                str(blade): float(value)
                for blade, value in enumerate(self._coeffs)
                if value != 0.0
            },
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'CliffordNumber':
        try:
            n = check_dimension(data['n'])
            items = data['coeffs'].items()
        except (KeyError, TypeError, AttributeError) as e:
            raise CliffordError(f'Malformed Clifford number: {data!r}') from e

        coeffs = np.zeros(1 << n)
        for key, value in items:
            try:
                blade = int(key)
            except ValueError as e:
                raise CliffordError(f'Invalid blade key {key!r}.') from e
            if blade < 0 or blade >= 1 << n:
                raise CliffordError(f'Blade {blade} out of range for n={n}.')
            coeffs[blade] = float(value)
        return cls(n, coeffs)


def clifford_mul(a: CliffordNumber, b: CliffordNumber) -> CliffordNumber:
    if a.n != b.n:
        raise CliffordError(f'Dimension mismatch: R_{a.n} and R_{b.n}.')
    return CliffordNumber(a.n, multiply_components(a.coeffs, b.coeffs))


def clifford_norm(a: CliffordNumber) -> float:
    return a.norm()
