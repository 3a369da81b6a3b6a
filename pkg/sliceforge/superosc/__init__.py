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

"""
Superoscillating plane wave combinations F_n(x, a), their free evolution in
closed form and through the infinite order operator Σ (it)^m/m! ∂^(2m), and
their convergence to the plane wave e^(i(ax - a²t))
"""

from .convergence import (
    ConvergenceRow,
    ConvergenceTable,
    b_scan,
    convergence_measure,
    default_x_grid,
    imag_levels,
    plot_data,
)
from .evolution import (
    EvolutionComparison,
    choose_truncations,
    compare_evolution,
    evaluate_on_line,
    evolution_operator,
    evolve_via_operator,
    taylor_series,
    truncation_bound,
)
from .waves import (
    SuperoscillationError,
    WaveCombo,
    build_Fn,
    evolve,
    plane_wave_limit,
)

__all__ = [
    'ConvergenceRow',
    'ConvergenceTable',
    'EvolutionComparison',
    'SuperoscillationError',
    'WaveCombo',
    'b_scan',
    'build_Fn',
    'choose_truncations',
    'compare_evolution',
    'convergence_measure',
    'default_x_grid',
    'evaluate_on_line',
    'evolution_operator',
    'evolve',
    'evolve_via_operator',
    'imag_levels',
    'plane_wave_limit',
    'plot_data',
    'taylor_series',
    'truncation_bound',
]
