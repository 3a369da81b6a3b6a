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

import json
import math

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable

import numpy as np


def json_safe(value: Any) -> Any:
    """
    Convert numpy scalars and arrays to plain Python values

    Non-finite floats become None because JSON has no representation for
    them.
    """
    if isinstance(value, dict):
        return {str(key): json_safe(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(item) for item in value]
    if isinstance(value, np.ndarray):
        return [json_safe(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def dump_json(data: Any) -> str:
    return json.dumps(json_safe(data), sort_keys=True, indent=2) + '\n'


@dataclass(frozen=True)
class VerificationReport:
    """
    Outcome of one numerical check of an inequality or a limit
    """

    lemma: str
    params: Dict[str, Any]
    empirical_constant: float
    max_violation: float
    passed: bool
    grid: Dict[str, Any] = field(default_factory=dict)
    details: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        data = {
            'lemma': self.lemma,
            'params': self.params,
            'empirical_constant': self.empirical_constant,
            'max_violation': self.max_violation,
            'pass': self.passed,
            'grid': self.grid,
        }
        if self.details:
            data['details'] = self.details
        return json_safe(data)


def all_passed(reports: Iterable[VerificationReport]) -> bool:
    return all(report.passed for report in reports)
