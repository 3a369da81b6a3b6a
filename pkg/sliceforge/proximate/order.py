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
from functools import lru_cache
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np

from scipy.interpolate import PchipInterpolator
from scipy.optimize import bisect

CONSTANT = 'constant'
LOGSHIFT = 'logshift'
TABLE = 'table'

FAMILIES = (CONSTANT, LOGSHIFT, TABLE)

DERIVATIVE_STEP = 1e-6
MAX_BRACKET_DOUBLINGS = 200
LOGSHIFT_R0 = math.e ** 2
# relative distance of the last tabulated value from the limit order
TABLE_TAIL_TOLERANCE = 0.1

ArrayLike = Union[float, Sequence[float], np.ndarray]


class ProximateOrderError(Exception):
    """
    Some error has occurred while handling a proximate order
    """


@dataclass(frozen=True)
class Gluing:
    """
    Sine gluing below r0 that turns a proximate order into a normalized one
    """

    r0: float
    value: float
    slope: float

    def __call__(self, rho: float, r: np.ndarray) -> np.ndarray:
        return self.value - (rho / 4) * np.sin(
            4 * self.slope / rho * (self.r0 - r)
        )


def _as_float(value: Any, name: str) -> float:
    try:
        result = float(value)
    except (TypeError, ValueError) as e:
        raise ProximateOrderError(f'{name} must be a real number.') from e
    if not math.isfinite(result):
        raise ProximateOrderError(f'{name} must be finite, got {result!r}.')
    return result


class ProximateOrder:
    """
    A proximate order ϱ(r) with limit ρ

    Supported families are the constant order, the log-shift
    ϱ(r) = ρ + b / ln r on [r0, ∞) and tabulated values interpolated
    monotonically in ln r. Instances are immutable and hashable.
    """

    def __init__(
        self,
        family: str,
        rho: float,
        *,
        b: float = 0.0,
        r0: float = 1.0,
        table: Optional[Sequence[Sequence[float]]] = None,
        gluing: Optional[Gluing] = None,
    ):
        if family not in FAMILIES:
            raise ProximateOrderError(
                f'Unknown family {family!r}. Use one of {", ".join(FAMILIES)}.'
            )
        self.family = family
        self.rho = _as_float(rho, 'rho')
        if self.rho <= 0:
            raise ProximateOrderError(
                f'The order rho must be positive, got {self.rho!r}.'
            )
        self.b = _as_float(b, 'b')
        self.r0 = _as_float(r0, 'r0')
        if self.r0 <= 0:
            raise ProximateOrderError(f'r0 must be positive, got {self.r0!r}.')
        if family == LOGSHIFT and self.r0 <= 1:
            raise ProximateOrderError(
                f'The log-shift family needs r0 > 1, got {self.r0!r}.'
            )

        self.table: Tuple[Tuple[float, float], ...] = ()
        self._interpolator = None
        if family == TABLE:
            self.table = self._check_table(table, self.rho)
            log_r = np.log([r for r, _ in self.table])
            self._log_range = (log_r[0], log_r[-1])
            self._interpolator = PchipInterpolator(
                log_r, [value for _, value in self.table]
            )

        self.gluing = gluing

    @staticmethod
    def _check_table(
        table: Optional[Sequence[Sequence[float]]], rho: float
    ) -> Tuple[Tuple[float, float], ...]:
        if table is None or len(table) < 2:
            raise ProximateOrderError('A table needs at least two rows.')
        try:
            rows = tuple((float(r), float(value)) for r, value in table)
        except (TypeError, ValueError) as e:
            raise ProximateOrderError('Table rows must be [r, value].') from e
        radii = [r for r, _ in rows]
        if radii[0] <= 0 or any(b <= a for a, b in zip(radii, radii[1:])):
            raise ProximateOrderError(
                'Table radii must be positive and strictly increasing.'
            )
        last = rows[-1][1]
        if not abs(last - rho) <= TABLE_TAIL_TOLERANCE * rho:
            raise ProximateOrderError(
                f'The table ends at {last!r}, too far from the order {rho!r}.'
            )
        return rows

    @classmethod
    def constant(cls, rho: float) -> 'ProximateOrder':
        return cls(CONSTANT, rho)

    @classmethod
    def logshift(
        cls, rho: float, b: float, r0: float = LOGSHIFT_R0
    ) -> 'ProximateOrder':
        """
        ϱ(r) = ρ + b / ln r on [r0, ∞), normalized below r0

        The derivative at r0 is known in closed form, so the gluing is exact.
        """
        raw = cls(LOGSHIFT, rho, b=b, r0=r0)
        log_r0 = math.log(raw.r0)
        gluing = Gluing(
            raw.r0, raw.rho + raw.b / log_r0, -raw.b / (raw.r0 * log_r0 ** 2)
        )
        return cls(LOGSHIFT, rho, b=b, r0=r0, gluing=gluing)

    @classmethod
    def tabulated(
        cls, rho: float, table: Sequence[Sequence[float]], r0: float = 1.0
    ) -> 'ProximateOrder':
        return cls(TABLE, rho, table=table, r0=r0)

    @property
    def normalized(self) -> bool:
        return self.family == CONSTANT or self.gluing is not None

    def _key(self) -> Tuple:
        return (
            self.family,
            self.rho,
            self.b,
            self.r0,
            self.table,
            self.gluing,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProximateOrder):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        if self.family == CONSTANT:
            return f'ProximateOrder.constant({self.rho!r})'
        if self.family == LOGSHIFT:
            return (
                f'ProximateOrder.logshift({self.rho!r}, {self.b!r}, '
                f'{self.r0!r})'
            )
        return (
            f'ProximateOrder(table, rho={self.rho!r}, '
            f'normalized={self.normalized})'
        )

    def _base(self, r: np.ndarray) -> np.ndarray:
        if self.family == CONSTANT:
            return np.full_like(r, self.rho)
        if self.family == LOGSHIFT:
            return self.rho + self.b / np.log(r)
        log_r = np.clip(np.log(r), *self._log_range)
        return self._interpolator(log_r)

    def value(self, r: ArrayLike) -> ArrayLike:
        """
        Evaluate ϱ(r) for a scalar or an array of positive radii
        """
        radii = np.asarray(r, dtype=float)
        flat = np.atleast_1d(radii).ravel()
        if np.any(flat <= 0):
            raise ProximateOrderError('ϱ(r) is only defined for r > 0.')

        result = np.empty_like(flat)
        glued = (
            flat < self.gluing.r0
            if self.gluing is not None
            else np.zeros(flat.shape, dtype=bool)
        )
        if self.family == LOGSHIFT and np.any(~glued & (flat <= 1.0)):
            raise ProximateOrderError(
                'The log-shift family is only defined above r = 1.'
            )
        result[~glued] = self._base(flat[~glued])
        if np.any(glued):
            result[glued] = self.gluing(self.rho, flat[glued])

        if radii.ndim == 0:
            return float(result[0])
        return result.reshape(radii.shape)

    def derivative(self, r: ArrayLike) -> ArrayLike:
        radii = np.asarray(r, dtype=float)
        step = radii * DERIVATIVE_STEP
        return (self.value(radii + step) - self.value(radii - step)) / (
            2 * step
        )

    def log_power(self, r: ArrayLike) -> ArrayLike:
        """
        ln(r^ϱ(r)) = ϱ(r) ln r
        """
        radii = np.asarray(r, dtype=float)
        if np.any(radii <= 0):
            raise ProximateOrderError(
                f'r^ϱ(r) needs r > 0, got {np.min(radii)!r}.'
            )
        result = np.asarray(self.value(radii)) * np.log(radii)
        return float(result) if radii.ndim == 0 else result

    def is_normalized(self, grid: Optional[np.ndarray] = None) -> bool:
        """
        Grid scan for strict increase of r^ϱ(r) and its vanishing at 0+
        """
        if grid is None:
            grid = np.geomspace(1e-3, 1e6, 2000)
        values = self.log_power(grid)
        return bool(
            np.all(np.diff(values) > 0) and self.value(float(grid[0])) > 0
        )

    def check_proximate(
        self, grid: Optional[np.ndarray] = None
    ) -> Dict[str, bool]:
        """
        Check ϱ(r) -> ρ and ϱ'(r) r ln r -> 0 beyond the gluing radius
        """
        if grid is None:
            start = max(self.r0, self.gluing.r0 if self.gluing else 0.0, 2.0)
            grid = np.geomspace(start, 1e8, 64)
        distance = np.abs(self.value(grid) - self.rho)
        drift = np.abs(self.derivative(grid) * grid * np.log(grid))
        tolerance = 1e-9
        return {
            'converges': bool(np.all(np.diff(distance) <= tolerance)),
            'derivative_vanishes': bool(np.all(np.diff(drift) <= tolerance)),
        }

    def to_json(self) -> Dict[str, Any]:
        data = {
            'family': self.family,
            'rho': self.rho,
            'b': self.b,
            'r0': self.gluing.r0 if self.gluing else self.r0,
            'table': [list(row) for row in self.table],
        }
        if self.family == TABLE:
            data['normalized'] = self.normalized
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> 'ProximateOrder':
        try:
            family = data['family']
            rho = data['rho']
        except (KeyError, TypeError) as e:
            raise ProximateOrderError(
                f'Malformed proximate order: {data!r}'
            ) from e
        if family == CONSTANT:
            return cls.constant(rho)
        if family == LOGSHIFT:
            return cls.logshift(
                rho, data.get('b', 0.0), data.get('r0', LOGSHIFT_R0)
            )
        po = cls.tabulated(rho, data.get('table'), data.get('r0', 1.0))
        if data.get('normalized', True):
            return normalize(po, po.r0)
        return po


def eval_power(po: ProximateOrder, r: ArrayLike) -> ArrayLike:
    """
    r^ϱ(r), computed as exp(ϱ(r) ln r)
    """
    return np.exp(po.log_power(r))


def normalize(po: ProximateOrder, r0: float) -> ProximateOrder:
    """
    Replace ϱ on (0, r0] by ϱ(r0) - (ρ/4) sin(4 ϱ'(r0) (r0 - r) / ρ)

    The result equals ϱ on [r0, ∞). For ϱ'(r0) = 0 the glued part is the
    constant ϱ(r0).
    """
    r0 = _as_float(r0, 'r0')
    if r0 <= 0:
        raise ProximateOrderError(f'r0 must be positive, got {r0!r}.')
    if po.family == CONSTANT:
        return po
    if po.family == LOGSHIFT and r0 <= 1:
        raise ProximateOrderError(
            f'The log-shift family needs r0 > 1, got {r0!r}.'
        )
    if po.gluing is not None:
        if r0 == po.gluing.r0:
            return po
        if r0 < po.gluing.r0:
            raise ProximateOrderError(
                f'Cannot glue at {r0!r} below the existing gluing radius '
                f'{po.gluing.r0!r}.'
            )

    gluing = Gluing(r0, po.value(r0), float(po.derivative(r0)))
    return ProximateOrder(
        po.family, po.rho, b=po.b, r0=r0, table=po.table or None, gluing=gluing
    )


def _require_normalized(po: ProximateOrder) -> None:
    if not po.normalized:
        raise ProximateOrderError(
            'The operation needs a normalized proximate order.'
        )


def phi(po: ProximateOrder, t: float) -> float:
    """
    Inverse of r -> r^ϱ(r), found by bisection in ln r
    """
    _require_normalized(po)
    t = _as_float(t, 't')
    if t <= 0:
        raise ProximateOrderError(f'φ(t) needs t > 0, got {t!r}.')
    return math.exp(_log_phi(po, t))


@lru_cache(maxsize=65536)
def _log_phi(po: ProximateOrder, t: float) -> float:
    target = math.log(t)

    def mismatch(s: float) -> float:
        return po.log_power(math.exp(s)) - target

    low, high = min(target, 0.0), max(target, 0.0)
    step = math.log(2.0)
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if mismatch(high) >= 0:
            break
        high += step
    else:
        raise ProximateOrderError(f'Could not bracket φ({t!r}).')
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if mismatch(low) <= 0:
            break
        low -= step
    else:
        raise ProximateOrderError(f'Could not bracket φ({t!r}).')

    if mismatch(low) == 0:
        return low
    if mismatch(high) == 0:
        return high
    return bisect(mismatch, low, high, xtol=1e-15, rtol=1e-15, maxiter=500)


@lru_cache(maxsize=256)
def log_g_values(po: ProximateOrder, count: int) -> np.ndarray:
    """
    ln G_ℓ for ℓ = 0..count with G_ℓ = φ(ℓ)^ℓ / (eρ)^(ℓ/ρ)
    """
    _require_normalized(po)
    values = np.zeros(count + 1)
    shift = (1 + math.log(po.rho)) / po.rho
    for ell in range(1, count + 1):
        values[ell] = ell * _log_phi(po, float(ell)) - ell * shift
    values.setflags(write=False)
    return values


def log_G(po: ProximateOrder, ell: int) -> float:
    if ell < 0:
        raise ProximateOrderError(f'ℓ must be nonnegative, got {ell}.')
    if ell == 0:
        return 0.0
    return float(log_g_values(po, int(ell))[ell])
