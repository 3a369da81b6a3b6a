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
import sys

from argparse import Namespace
from typing import Optional, Sequence

from sliceforge.cauchy import QuadratureError
from sliceforge.clifford import CliffordError
from sliceforge.config import ConfigError, RunConfig
from sliceforge.growth import GrowthError
from sliceforge.operators import OperatorError
from sliceforge.proximate import ProximateOrderError
from sliceforge.report import dump_json
from sliceforge.series import SeriesError
from sliceforge.superosc import SuperoscillationError
from sliceforge.terminal import _set_terminal, error
from sliceforge.terminal.terminal import Terminal

from .parser import parse

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# errors of bad input, as opposed to failed checks
USAGE_ERRORS = (
    CliffordError,
    ConfigError,
    GrowthError,
    OperatorError,
    ProximateOrderError,
    QuadratureError,
    SeriesError,
    SuperoscillationError,
    json.JSONDecodeError,
    OSError,
)

OVERRIDES = ('seed', 'n', 'N', 'L', 'M', 'trials')


def build_config(args: Namespace) -> RunConfig:
    return RunConfig.build(
        args.command,
        {key: getattr(args, key, None) for key in OVERRIDES},
        config_path=args.config,
        input_path=getattr(args, 'input', None),
        output_path=args.output,
        quiet=args.quiet,
    )


def write_report(document: dict, config: RunConfig) -> None:
    text = dump_json(document)
    if config.output is None:
        sys.stdout.write(text)
    else:
        config.output.write_text(text, encoding='utf-8')


def main(leave: bool = True, args: Optional[Sequence[str]] = None):
    parsed_args = parse(args)
    term = Terminal(quiet=parsed_args.quiet)
    _set_terminal(term)

    term.bold_info(f'sliceforge => {parsed_args.command}')

    with term.indent():
        try:
            config = build_config(parsed_args)
            passed, document = parsed_args.func(config, parsed_args)
            write_report(document, config)
        except USAGE_ERRORS as e:
            error(str(e))
            return sys.exit(EXIT_USAGE) if leave else EXIT_USAGE

    code = EXIT_PASS if passed else EXIT_FAIL
    return sys.exit(code) if leave else code


if __name__ == '__main__':
    main()
