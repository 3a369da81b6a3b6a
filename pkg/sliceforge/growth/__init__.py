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
Growth norms ‖·‖_{ϱ,σ}, maximum modulus, type estimates and the norm
inequalities of the spaces A_{ϱ,σ}
"""

from .bounds import (
    derivative_factor,
    star_constant,
    verify_derivative_norm_bound,
    verify_logshift_equivalence,
    verify_monomial_norm_bound,
    verify_star_norm_bound,
)
from .modulus import (
    GrowthError,
    GrowthParams,
    NormGrid,
    log_max_modulus,
    max_modulus,
    validity_radius,
)
from .norms import (
    NormEstimate,
    decay_radius,
    monomial_log_norm,
    monomial_log_norms,
    norm_estimate,
    taylor_tail_norm,
    taylor_tail_norms,
)
from .types import (
    Classification,
    GrowthTypeEstimate,
    TypeEstimate,
    classify,
    coeff_type_estimate,
    growth_type_estimate,
    remark_identity_residual,
)

__all__ = [
    'Classification',
    'GrowthError',
    'GrowthParams',
    'GrowthTypeEstimate',
    'NormEstimate',
    'NormGrid',
    'TypeEstimate',
    'classify',
    'coeff_type_estimate',
    'decay_radius',
    'derivative_factor',
    'growth_type_estimate',
    'log_max_modulus',
    'max_modulus',
    'monomial_log_norm',
    'monomial_log_norms',
    'norm_estimate',
    'remark_identity_residual',
    'star_constant',
    'taylor_tail_norm',
    'taylor_tail_norms',
    'validity_radius',
    'verify_derivative_norm_bound',
    'verify_logshift_equivalence',
    'verify_monomial_norm_bound',
    'verify_star_norm_bound',
]
