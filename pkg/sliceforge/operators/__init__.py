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
Infinite order differential operators Σ u_ℓ ⋆ ∂^ℓ, their reconstruction from
an abstract operator and the class certificates for D and D0
"""

from .abstract import (
    AbstractOperator,
    coefficients_from_operator,
    representation_identity_check,
    verify_reconstruction,
    verify_telescoping,
)
from .certificates import (
    CLASS_D,
    CLASS_D0,
    LOG_CONSTANT_LIMIT,
    BoundCertificate,
    build_certificate,
    certify_class_D,
    certify_class_D0,
    default_grid,
    log_norm_table,
    log_weights,
    recheck,
    refine_grid,
    verify_continuity_estimate,
)
from .operator import (
    InfOrderOperator,
    OperatorError,
    apply,
    check_growth_domination,
    normalized_order,
)

__all__ = [
    'CLASS_D',
    'CLASS_D0',
    'LOG_CONSTANT_LIMIT',
    'AbstractOperator',
    'BoundCertificate',
    'InfOrderOperator',
    'OperatorError',
    'apply',
    'build_certificate',
    'certify_class_D',
    'certify_class_D0',
    'check_growth_domination',
    'coefficients_from_operator',
    'default_grid',
    'log_norm_table',
    'log_weights',
    'normalized_order',
    'recheck',
    'refine_grid',
    'representation_identity_check',
    'verify_continuity_estimate',
    'verify_reconstruction',
    'verify_telescoping',
]
