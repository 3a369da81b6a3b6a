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
Arithmetic in the real Clifford algebra R_n (e_i² = -1) and on paravectors
"""

from .algebra import (
    MAX_DIMENSION,
    CliffordError,
    CliffordNumber,
    clifford_mul,
    clifford_norm,
    multiply_components,
    multiplication_table,
)
from .paravector import (
    ImaginaryUnit,
    Paravector,
    decompose,
    paravector_inverse,
    sphere_sample,
)

__all__ = [
    'MAX_DIMENSION',
    'CliffordError',
    'CliffordNumber',
    'ImaginaryUnit',
    'Paravector',
    'clifford_mul',
    'clifford_norm',
    'decompose',
    'multiply_components',
    'multiplication_table',
    'paravector_inverse',
    'sphere_sample',
]
