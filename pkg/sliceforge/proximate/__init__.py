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
Proximate orders ϱ(r), their normalization, the inverse φ and the weights G_ℓ
"""

from .lemmas import (
    GSequence,
    LemmaGrid,
    check_g_supermultiplicative,
    check_phi_elasticity,
    check_phi_quotient_bound,
    check_phi_ratio,
    check_power_ratio,
    check_scaling_inequality,
    check_sum_inequality,
    verify_lemma_suite,
)
from .order import (
    CONSTANT,
    FAMILIES,
    LOGSHIFT,
    TABLE,
    Gluing,
    ProximateOrder,
    ProximateOrderError,
    eval_power,
    log_G,
    log_g_values,
    normalize,
    phi,
)

__all__ = [
    'CONSTANT',
    'FAMILIES',
    'LOGSHIFT',
    'TABLE',
    'Gluing',
    'GSequence',
    'LemmaGrid',
    'ProximateOrder',
    'ProximateOrderError',
    'check_g_supermultiplicative',
    'check_phi_elasticity',
    'check_phi_quotient_bound',
    'check_phi_ratio',
    'check_power_ratio',
    'check_scaling_inequality',
    'check_sum_inequality',
    'eval_power',
    'log_G',
    'log_g_values',
    'normalize',
    'phi',
    'verify_lemma_suite',
]
