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
Slice monogenic functions as power series with Clifford coefficients
"""

from .series import (
    SeriesError,
    SliceSeries,
    cauchy_riemann_residual,
    components,
    derivative_power,
    evaluate,
    slice_derivative,
    star_product,
    taylor_recenter,
    unit_spread,
)

__all__ = [
    'SeriesError',
    'SliceSeries',
    'cauchy_riemann_residual',
    'components',
    'derivative_power',
    'evaluate',
    'slice_derivative',
    'star_product',
    'taylor_recenter',
    'unit_spread',
]
