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

import csv
import io

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from sliceforge.config import worker_count
from sliceforge.report import VerificationReport

from .waves import (
    SuperoscillationError,
    WaveCombo,
    build_Fn,
    evolve,
    plane_wave_limit,
)

DEFAULT_WINDOW = 5.0
DEFAULT_STEP = 1e-2
DEFAULT_IMAG_LEVELS = (-2.0, -1.0, 0.0, 1.0, 2.0)
CSV_COLUMNS = ('n', 't', 'B', 'd_n')


def default_x_grid(
    window: float = DEFAULT_WINDOW, step: float = DEFAULT_STEP
) -> np.ndarray:
    if not window > 0 or not step > 0:
        raise SuperoscillationError(
            f'Window and step must be positive, got {window!r} and {step!r}.'
        )
    return np.linspace(-window, window, int(round(2 * window / step)) + 1)


def imag_levels(extent: float, count: int = 5) -> Tuple[float, ...]:
    """
    Heights of the horizontal lines of the complex rectangle |Im z| <= extent
    """
    if extent == 0:
        return (0.0,)
    return tuple(float(v) for v in np.linspace(-extent, extent, count))


def b_scan(a: float) -> Tuple[float, ...]:
    return tuple(sorted({1.0, float(a), 2.0 * a}))


@dataclass(frozen=True)
class ConvergenceRow:
    n: int
    t: float
    B: float  # pylint: disable=invalid-name
    d_n: float

    def to_json(self) -> Dict[str, Any]:
        return {'n': self.n, 't': self.t, 'B': self.B, 'd_n': self.d_n}


@dataclass(frozen=True)
class ConvergenceTable:
    """
    d_n = max_z |ψ_n(z, t) - e^(i(az - a²t))| e^(-B|z|) per n and B
    """

    a: float
    t: float
    rows: Tuple[ConvergenceRow, ...]

    @property
    def b_values(self) -> List[float]:
        return sorted({row.B for row in self.rows})

    def values(self, B: float) -> List[float]:  # pylint: disable=invalid-name
        return [row.d_n for row in self.rows if row.B == B]

    def n_values(self) -> List[int]:
        seen: List[int] = []
        for row in self.rows:
            if row.n not in seen:
                seen.append(row.n)
        return seen

    def check(self) -> VerificationReport:
        """
        d_n has to decrease strictly with n for every B

        A run of exact zeros (F_n equal to the plane wave) counts as
        converged.
        """
        decreasing, rises = {}, []
        for B in self.b_values:  # pylint: disable=invalid-name
            values = np.array(self.values(B))
            steps = np.diff(values)
            settled = (values[:-1] == 0.0) & (values[1:] == 0.0)
            decreasing[str(B)] = bool(np.all((steps < 0) | settled))
            rises.append(
                float(np.max(np.where(settled, 0.0, steps), initial=0.0))
            )
        return VerificationReport(
            lemma='superoscillation-convergence',
            params={'a': self.a, 't': self.t, 'n': self.n_values()},
            empirical_constant=max(
                self.values(B)[-1] for B in self.b_values
            ),
            max_violation=max(rises),
            passed=all(decreasing.values()),
            details={'decreasing': decreasing},
        )

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer, fieldnames=CSV_COLUMNS, lineterminator='\n'
        )
        writer.writeheader()
        for row in self.rows:
            writer.writerow(
                {
                    'n': row.n,
                    't': repr(row.t),
                    'B': repr(row.B),
                    'd_n': repr(row.d_n),
                }
            )
        return buffer.getvalue()

    def write_csv(self, path: Path) -> None:
        path.write_text(self.to_csv(), encoding='utf-8')

    def to_json(self) -> Dict[str, Any]:
        return {
            'a': self.a,
            't': self.t,
            'rows': [row.to_json() for row in self.rows],
        }


def _as_list(values: Union[float, Iterable[float]]) -> List[float]:
    if isinstance(values, (int, float)):
        return [float(values)]
    return [float(value) for value in values]


def convergence_measure(
    n_list: Sequence[int],
    a: float,
    t: float,
    B: Union[float, Iterable[float]],  # pylint: disable=invalid-name
    x_grid: Any,
    levels: Sequence[float] = DEFAULT_IMAG_LEVELS,
    *,
    allow_boundary: bool = False,
) -> ConvergenceTable:
    """
    Weighted distance of the evolved F_n to the plane wave limit on the
    points x + iy, x in x_grid and y in levels

    The deviations of each n are computed once in a worker thread and
    weighted for every B; rows come back ordered by n_list, then by B.
    """
    if not n_list:
        raise SuperoscillationError('No values of n given.')
    weights_b = _as_list(B)
    if not weights_b or any(not b > 0 for b in weights_b):
        raise SuperoscillationError(f'B must be positive, got {B!r}.')
    x = np.asarray(x_grid, dtype=float)
    if x.size == 0:
        raise SuperoscillationError('Empty x grid.')
    points = (x[None, :] + 1j * np.asarray(levels, float)[:, None]).ravel()
    moduli = np.abs(points)
    combos = [build_Fn(n, a, allow_boundary=allow_boundary) for n in n_list]

    def measure(w: WaveCombo) -> List[float]:
        deviations = evolve(w, t).deviation(points, a, t)
        return [
            float(np.max(deviations * np.exp(-b * moduli))) for b in weights_b
        ]

    with ThreadPoolExecutor(max_workers=worker_count(len(combos))) as pool:
        results = list(pool.map(measure, combos))

    rows = tuple(
        ConvergenceRow(n, float(t), b, d)
        for n, values in zip(n_list, results)
        for b, d in zip(weights_b, values)
    )
    return ConvergenceTable(float(a), float(t), rows)


def plot_data(w: WaveCombo, t: float, a: float, x_grid: Any) -> Dict[str, Any]:
    """
    Real and imaginary parts of the evolved combination and of its limit
    """
    x = np.asarray(x_grid, dtype=float)
    psi = evolve(w, t).evaluate(x)
    limit = plane_wave_limit(x, a, t)
    return {
        'x': x.tolist(),
        're_psi': psi.real.tolist(),
        'im_psi': psi.imag.tolist(),
        're_limit': limit.real.tolist(),
        'im_limit': limit.imag.tolist(),
    }
