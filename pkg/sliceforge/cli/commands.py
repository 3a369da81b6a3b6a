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

from argparse import Namespace
from typing import Any, Dict, Optional, Tuple

from sliceforge.config import RunConfig
from sliceforge.growth import coeff_type_estimate, growth_type_estimate
from sliceforge.operators import (
    AbstractOperator,
    OperatorError,
    coefficients_from_operator,
    representation_identity_check,
)
from sliceforge.report import dump_json
from sliceforge.series import SliceSeries
from sliceforge.superosc import (
    ConvergenceTable,
    b_scan,
    build_Fn,
    convergence_measure,
    default_x_grid,
    imag_levels,
    plot_data,
)
from sliceforge.terminal import fail, info, ok

from .helper import announce, norm_grid, proximate_order


def estimate(
    config: RunConfig, args: Namespace
) -> Tuple[bool, Dict[str, Any]]:
    """
    Type of a stored series from its coefficients and from its growth
    """
    data = json.loads(config.input.read_text(encoding='utf-8'))
    f = SliceSeries.from_json(data)
    po = proximate_order(args)
    tolerance = config['type_tolerance']

    coefficients = coeff_type_estimate(f, po)
    growth = growth_type_estimate(f, po, grid=norm_grid(config))
    implied = coefficients.implied_type

    agreement: Optional[float] = None
    if implied > 0:
        agreement = growth.value / implied
        agrees = abs(agreement - 1.0) <= tolerance
    else:
        agrees = growth.value <= tolerance

    info(f'implied type {implied:.6g}, growth type {growth.value:.6g}')
    if coefficients.consistent:
        ok('order-consistency')
    else:
        fail('order-consistency')
    if agrees:
        ok('estimators agree')
    else:
        fail('estimators disagree')

    passed = bool(coefficients.consistent and agrees)
    return passed, {
        'command': 'estimate',
        'order': po.to_json(),
        'order-consistency': coefficients.consistent,
        'implied_type': implied,
        'growth_type': growth.value,
        'agreement': agreement,
        'coefficients': coefficients.to_json(),
        'growth': growth.to_json(),
        'pass': passed,
    }


def builtin_operator(name: str, n: int, a: float) -> AbstractOperator:
    if name == 'identity':
        return AbstractOperator.identity(n)
    if name == 'translate':
        return AbstractOperator.translation(n, a)
    if name == 'derivative':
        return AbstractOperator.derivative(n)
    if name == 'compose':
        return AbstractOperator.composition(
            AbstractOperator.translation(n, a), AbstractOperator.derivative(n)
        )
    raise OperatorError(f'Unknown operator {name!r}.')


def extract(config: RunConfig, args: Namespace) -> Tuple[bool, Dict[str, Any]]:
    """
    Coefficients u_ℓ of a built-in operator and the representation check

    Without --M the test degree is capped at L.
    """
    L, M = config['L'], config['M']  # pylint: disable=invalid-name
    if args.M is None:
        M = min(M, L)  # pylint: disable=invalid-name
    T = builtin_operator(args.op, config['n'], args.a)

    P = coefficients_from_operator(T, L)
    report = representation_identity_check(
        T,
        L,
        M,
        trials=config['trials'],
        seed=config['seed'],
        tolerance=config['identity_tolerance'],
    )
    info(f'{T.name}: {P.L + 1} coefficients')
    announce([report])
    return report.passed, {
        'command': 'extract',
        'operator': P.to_json(),
        'report': report.to_json(),
        'pass': report.passed,
    }


def superosc(
    config: RunConfig, args: Namespace
) -> Tuple[bool, Dict[str, Any]]:
    """
    Convergence of the evolved F_n to the plane wave for B in {1, a, 2a}
    and the requested --B

    The CSV file holds the rows of --B only, the JSON report every B.
    """
    w = build_Fn(max(args.orders), args.a, allow_boundary=args.allow_boundary)
    x_grid = default_x_grid(config['window'], config['step'])
    table = convergence_measure(
        args.orders,
        args.a,
        args.t,
        sorted(set(b_scan(args.a)) | {args.B}),
        x_grid,
        imag_levels(config['imag_extent']),
        allow_boundary=args.allow_boundary,
    )
    (report,) = announce([table.check()])

    selected = ConvergenceTable(
        table.a, table.t, tuple(row for row in table.rows if row.B == args.B)
    )
    for row in selected.rows:
        info(f'n={row.n} d_n={row.d_n:.6g}')
    if args.csv:
        selected.write_csv(args.csv)
        info(f'Wrote {args.csv}')
    if args.plot:
        args.plot.write_text(
            dump_json(plot_data(w, args.t, args.a, x_grid)), encoding='utf-8'
        )
        info(f'Wrote {args.plot}')

    return report.passed, {
        'command': 'superosc',
        'table': table.to_json(),
        'csv': [row.to_json() for row in selected.rows],
        'report': report.to_json(),
        'pass': report.passed,
    }
