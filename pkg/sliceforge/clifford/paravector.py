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

from numbers import Real
from typing import Any, List, Tuple, Union

import numpy as np

from .algebra import (
    MAX_DIMENSION,
    CliffordError,
    CliffordNumber,
    check_dimension,
)

UNIT_TOLERANCE = 1e-12


def _vector(values: Any) -> np.ndarray:
    vec = np.array(values, dtype=float)
    if vec.ndim != 1 or not 1 <= vec.size <= MAX_DIMENSION:
        raise CliffordError(
            f'A vector part needs 1..{MAX_DIMENSION} components, '
            f'got shape {vec.shape}.'
        )
    vec.setflags(write=False)
    return vec


def _embed(n: int, x0: float, vec: np.ndarray) -> np.ndarray:
    coeffs = np.zeros(1 << n)
    coeffs[0] = x0
    coeffs[[1 << i for i in range(n)]] = vec
    return coeffs


class Paravector:
    """
    A point x = x0 + x_1 e_1 + ... + x_n e_n of R^{n+1}
    """

    __slots__ = ('_x0', '_vec')

    def __init__(self, x0: float, vec: Any):
        self._x0 = float(x0)
        self._vec = _vector(vec)

    @classmethod
    def real(cls, n: int, value: float) -> 'Paravector':
        return cls(value, np.zeros(check_dimension(n)))

    @classmethod
    def from_clifford(
        cls, value: CliffordNumber, tolerance: float = 1e-12
    ) -> 'Paravector':
        vector_blades = [1 << i for i in range(value.n)]
        rest = np.delete(value.coeffs, [0] + vector_blades)
        if rest.size and np.max(np.abs(rest)) > tolerance:
            raise CliffordError(f'{value!r} is not a paravector.')
        return cls(value.coeffs[0], value.coeffs[vector_blades])

    @property
    def n(self) -> int:
        return self._vec.size

    @property
    def x0(self) -> float:
        return self._x0

    @property
    def vec(self) -> np.ndarray:
        return self._vec

    def as_clifford(self) -> CliffordNumber:
        return CliffordNumber(self.n, _embed(self.n, self._x0, self._vec))

    def conjugate(self) -> 'Paravector':
        return Paravector(self._x0, -self._vec)

    def norm(self) -> float:
        return float(np.hypot(self._x0, np.linalg.norm(self._vec)))

    def __add__(self, other: Union['Paravector', Real]) -> 'Paravector':
        if isinstance(other, Real):
            return Paravector(self._x0 + float(other), self._vec)
        if not isinstance(other, Paravector):
            return NotImplemented
        return Paravector(self._x0 + other.x0, self._vec + other.vec)

    __radd__ = __add__

    def __sub__(self, other: Union['Paravector', Real]) -> 'Paravector':
        if isinstance(other, Real):
            return Paravector(self._x0 - float(other), self._vec)
        if not isinstance(other, Paravector):
            return NotImplemented
        return Paravector(self._x0 - other.x0, self._vec - other.vec)

    def __neg__(self) -> 'Paravector':
        return Paravector(-self._x0, -self._vec)

    def __mul__(self, other: Any):
        if isinstance(other, Real):
            return Paravector(self._x0 * float(other), self._vec * float(other))
        if isinstance(other, Paravector):
            return self.as_clifford() * other.as_clifford()
        if isinstance(other, CliffordNumber):
            return self.as_clifford() * other
        return NotImplemented

    def __rmul__(self, other: Real):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        return f'Paravector({self._x0!r}, {self._vec.tolist()!r})'


class ImaginaryUnit:
    """
    A unit vector j of R^n, as a vector grade element of R_n it squares to -1
    """

    __slots__ = ('_vec',)

    def __init__(self, vec: Any):
        vec = _vector(vec)
        length = float(np.linalg.norm(vec))
        if abs(length - 1.0) > UNIT_TOLERANCE:
            raise CliffordError(
                f'An imaginary unit needs length 1, got {length!r}.'
            )
        self._vec = vec

    @classmethod
    def from_vector(cls, vec: Any) -> 'ImaginaryUnit':
        vec = np.array(vec, dtype=float)
        length = float(np.linalg.norm(vec))
        if length == 0.0:
            raise CliffordError('Cannot normalize the zero vector.')
        return cls(vec / length)

    @classmethod
    def basis(cls, n: int, index: int = 1) -> 'ImaginaryUnit':
        n = check_dimension(n)
        if index < 1 or index > n:
            raise CliffordError(f'e_{index} does not exist for n={n}.')
        vec = np.zeros(n)
        vec[index - 1] = 1.0
        return cls(vec)

    @property
    def n(self) -> int:
        return self._vec.size

    @property
    def vec(self) -> np.ndarray:
        return self._vec

    def as_clifford(self) -> CliffordNumber:
        return CliffordNumber(self.n, _embed(self.n, 0.0, self._vec))

    def point(self, u: float, v: float) -> Paravector:
        """
        The paravector u + jv of the complex plane C_j
        """
        return Paravector(u, v * self._vec)

    def __neg__(self) -> 'ImaginaryUnit':
        return ImaginaryUnit(-self._vec)

    def __repr__(self) -> str:
        return f'ImaginaryUnit({self._vec.tolist()!r})'


def paravector_inverse(p: Paravector) -> Paravector:
    square = p.x0 ** 2 + float(np.dot(p.vec, p.vec))
    if square == 0.0:
        raise CliffordError('The zero paravector has no inverse.')
    return Paravector(p.x0 / square, -p.vec / square)


def decompose(x: Paravector) -> Tuple[float, float, ImaginaryUnit]:
    """
    Split x into u + jv with v >= 0

    For real x the unit j is e_1.
    """
    v = float(np.linalg.norm(x.vec))
    if v == 0.0:
        return x.x0, 0.0, ImaginaryUnit.basis(x.n, 1)
    return x.x0, v, ImaginaryUnit.from_vector(x.vec / v)


def sphere_sample(n: int, count: int, seed: int = 0) -> List[ImaginaryUnit]:
    """
    Deterministic sample of the unit sphere of R^n

    The axes ±e_1, ..., ±e_n always come first. For n = 2 the remaining points
    are equally spaced on the circle, for larger n they are drawn from a seeded
    normal distribution and projected to the sphere.
    """
    n = check_dimension(n)
    if count < 1:
        raise CliffordError(f'Sample size must be positive, got {count}.')

    axes = []
    for index in range(1, n + 1):
        unit = ImaginaryUnit.basis(n, index)
        axes.extend([unit, -unit])
    if n == 1:
        return axes

    if n == 2:
        total = max(4, 4 * -(-count // 4))
        angles = 2 * np.pi * np.arange(total) / total
        circle = [
            ImaginaryUnit.from_vector([np.cos(angle), np.sin(angle)])
            for angle in angles
        ]
        # exact axes in place of the rounded quarter points
        return axes + [
            point for index, point in enumerate(circle) if index % (total // 4)
        ]

    rng = np.random.default_rng(seed)
    extra = max(0, count - len(axes))
    points = rng.standard_normal((extra, n))
    return axes + [ImaginaryUnit.from_vector(point) for point in points]
