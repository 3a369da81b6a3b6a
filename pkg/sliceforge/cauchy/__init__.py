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
The slice Cauchy kernel, contour quadrature and coefficient extraction
"""

from .kernel import (
    QuadratureError,
    cauchy_kernel,
    kernel_derivative,
    kernel_forms,
    kernel_values,
)
from .quadrature import ContourSpec, cauchy_eval, coeff_extract

__all__ = [
    'ContourSpec',
    'QuadratureError',
    'cauchy_eval',
    'cauchy_kernel',
    'coeff_extract',
    'kernel_derivative',
    'kernel_forms',
    'kernel_values',
]
