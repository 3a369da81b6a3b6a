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

from argparse import Namespace
from typing import Any, Dict, Iterable, List

from sliceforge.config import RunConfig
from sliceforge.growth import NormGrid
from sliceforge.proximate import LOGSHIFT, ProximateOrder
from sliceforge.report import VerificationReport, all_passed
from sliceforge.terminal import fail, ok


def proximate_order(args: Namespace) -> ProximateOrder:
    if args.family == LOGSHIFT:
        return ProximateOrder.logshift(args.rho, args.b)
    return ProximateOrder.constant(args.rho)


def norm_grid(config: RunConfig) -> NormGrid:
    return NormGrid(
        radii=config['radii'],
        directions=config['directions'],
        angles=config['angles'],
        seed=config['seed'],
    )


def announce(reports: Iterable[VerificationReport]) -> List[VerificationReport]:
    """
    Print one status line per report
    """
    reports = list(reports)
    for report in reports:
        message = (
            f'{report.lemma}: constant {report.empirical_constant:.6g}, '
            f'violation {report.max_violation:.3g}'
        )
        if report.passed:
            ok(message)
        else:
            fail(message)
    return reports


def reports_document(
    reports: Iterable[VerificationReport], **extra: Any
) -> Dict[str, Any]:
    reports = list(reports)
    return {
        **extra,
        'reports': [report.to_json() for report in reports],
        'pass': all_passed(reports),
    }
