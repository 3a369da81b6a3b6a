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

from argparse import ArgumentParser, ArgumentTypeError, Namespace
from pathlib import Path
from typing import List, Optional, Sequence

from sliceforge.__version__ import __version__
from sliceforge.proximate import CONSTANT, LOGSHIFT

from .commands import estimate, extract, superosc
from .verify import SUITES, verify

OPERATORS = ('identity', 'translate', 'derivative', 'compose')


def positive_int_list(value: str) -> List[int]:
    try:
        values = [int(item) for item in value.split(',') if item.strip()]
    except ValueError:
        raise ArgumentTypeError(
            f'Expected a comma separated list of integers, got {value!r}.'
        ) from None
    if not values or any(item < 1 for item in values):
        raise ArgumentTypeError(
            f'Expected positive integers, got {value!r}.'
        )
    return values


def _order_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False)
    parser.add_argument(
        '--family',
        choices=(CONSTANT, LOGSHIFT),
        default=CONSTANT,
        help='Proximate order family. Default: %(default)s',
    )
    parser.add_argument(
        '--rho',
        type=float,
        default=1.0,
        help='Order ρ of the proximate order. Default: %(default)s',
    )
    parser.add_argument(
        '--b',
        type=float,
        default=-0.5,
        help='Shift b of ϱ(r) = ρ + b/ln r (logshift family). '
        'Default: %(default)s',
    )
    return parser


def initialize_default_parser() -> ArgumentParser:
    parser = ArgumentParser(
        description='Entire slice monogenic functions of proximate order.',
        prog='sliceforge',
    )
    parser.add_argument(
        '--version',
        action='version',
        version=f'%(prog)s {__version__}',
    )
    parser.add_argument(
        '--quiet',
        '-q',
        action='store_true',
        help='Only print errors to the terminal',
    )
    parser.add_argument(
        '--config',
        type=Path,
        help='TOML file with settings. A pyproject.toml contributes its '
        '[tool.sliceforge] table.',
    )
    parser.add_argument(
        '--seed',
        type=int,
        help='Seed of every random choice of the run',
    )
    parser.add_argument(
        '--output',
        '-o',
        type=Path,
        help='Write the JSON report to this file instead of stdout',
    )

    subparsers = parser.add_subparsers(
        title='subcommands',
        description='valid subcommands',
        help='additional help',
        dest='command',
    )
    subparsers.required = True
    order_parser = _order_parser()

    verify_parser = subparsers.add_parser('verify', parents=[order_parser])
    verify_parser.set_defaults(func=verify)
    verify_parser.add_argument(
        '--suite',
        choices=tuple(SUITES) + ('all',),
        default='all',
        help='Verification suite to run. Default: %(default)s',
    )
    verify_parser.add_argument(
        '--n',
        type=int,
        help='Dimension n of the Clifford algebra R_n',
    )
    verify_parser.add_argument(
        '--trials',
        type=int,
        help='Number of random trials of the sampled checks',
    )

    estimate_parser = subparsers.add_parser(
        'estimate', parents=[order_parser]
    )
    estimate_parser.set_defaults(func=estimate)
    estimate_parser.add_argument(
        '--input',
        '-i',
        type=Path,
        required=True,
        help='SliceSeries JSON file',
    )

    extract_parser = subparsers.add_parser('extract')
    extract_parser.set_defaults(func=extract)
    extract_parser.add_argument(
        '--op',
        choices=OPERATORS,
        required=True,
        help='Built-in operator. compose is translate after derivative.',
    )
    extract_parser.add_argument(
        '--a',
        type=float,
        default=1.0,
        help='Shift of translate and compose. Default: %(default)s',
    )
    extract_parser.add_argument(
        '--L',
        type=int,
        dest='L',
        help='Number of operator coefficients minus one',
    )
    extract_parser.add_argument(
        '--M',
        type=int,
        dest='M',
        help='Degree of the random test polynomials',
    )
    extract_parser.add_argument(
        '--n',
        type=int,
        help='Dimension n of the Clifford algebra R_n',
    )
    extract_parser.add_argument(
        '--trials',
        type=int,
        help='Number of random test polynomials',
    )

    superosc_parser = subparsers.add_parser('superosc')
    superosc_parser.set_defaults(func=superosc)
    superosc_parser.add_argument(
        '--a',
        type=float,
        default=2.0,
        help='Superoscillation frequency a > 1. Default: %(default)s',
    )
    superosc_parser.add_argument(
        '--t',
        type=float,
        default=0.3,
        help='Evolution time. Default: %(default)s',
    )
    superosc_parser.add_argument(
        '--n',
        type=positive_int_list,
        dest='orders',
        default=[5, 10, 20, 40, 80],
        help='Comma separated orders n of F_n. Default: 5,10,20,40,80',
    )
    superosc_parser.add_argument(
        '--B',
        type=float,
        dest='B',
        default=1.0,
        help='Weight e^(-B|z|) of the CSV table. Default: %(default)s',
    )
    superosc_parser.add_argument(
        '--allow-boundary',
        action='store_true',
        help='Allow a = 1',
    )
    superosc_parser.add_argument(
        '--csv',
        type=Path,
        help='Write the convergence table for --B to this CSV file',
    )
    superosc_parser.add_argument(
        '--plot',
        type=Path,
        help='Write plot data of the largest n to this JSON file',
    )
    return parser


def parse(args: Optional[Sequence[str]] = None) -> Namespace:
    parser = initialize_default_parser()
    return parser.parse_args(args)
