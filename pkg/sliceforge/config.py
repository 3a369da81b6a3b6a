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

import os

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import tomlkit

from tomlkit.exceptions import ParseError

THREADS_VARIABLE = 'SLICEFORGE_THREADS'

# Every default of a run, grouped by the module that consumes it. Keys
# ending in "tolerance" must stay positive.
DEFAULTS: Dict[str, Any] = {
    # reproducibility
    'seed': 0,
    # Clifford dimension and truncations
    'n': 2,
    'N': 200,
    'L': 20,
    'M': 12,
    'trials': 200,
    # sampling of sup norms over R^(n+1)
    'radii': 400,
    'directions': 32,
    'angles': 64,
    # proximate order lemma grids
    'lemma_points': 200,
    'ell_max': 300,
    # λ/σ grids of the operator certificates
    'grid_points': 16,
    'grid_min': 1e-3,
    'grid_max': 1e3,
    # contour quadrature
    'nodes': 512,
    # superoscillation window [-window, window] sampled with step
    'window': 5.0,
    'step': 1e-2,
    'imag_extent': 2.0,
    # tolerances
    'identity_tolerance': 1e-10,
    'reconstruction_tolerance': 1e-11,
    'quadrature_tolerance': 1e-9,
    'evolution_tolerance': 1e-8,
    'type_tolerance': 0.1,
    'logshift_tolerance': 1e-6,
}


class ConfigError(Exception):
    """
    Some error has occurred while reading the configuration
    """


def _plain(value: Any) -> Any:
    # tomlkit items wrap python values
    if hasattr(value, 'unwrap'):
        return value.unwrap()
    return value


def check_settings(settings: Mapping[str, Any]) -> Dict[str, Any]:
    unknown = sorted(set(settings) - set(DEFAULTS))
    if unknown:
        raise ConfigError(f'Unknown configuration keys: {", ".join(unknown)}.')

    checked = {}
    for key, value in settings.items():
        value = _plain(value)
        default = DEFAULTS[key]
        if isinstance(default, int) and not isinstance(value, int):
            raise ConfigError(f'{key} must be an integer, got {value!r}.')
        if isinstance(default, float):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f'{key} must be a number, got {value!r}.')
            value = float(value)
        if key.endswith('tolerance') and not value > 0:
            raise ConfigError(f'{key} must be positive, got {value!r}.')
        checked[key] = value
    return checked


def load_config(path: Path) -> Dict[str, Any]:
    """
    Read settings from a TOML file

    A pyproject.toml contributes its [tool.sliceforge] table, other files
    their [sliceforge] table or, without one, the whole document.
    """
    if not path.exists():
        raise ConfigError(f'{str(path)} file not found.')

    try:
        document = tomlkit.parse(path.read_text(encoding='utf-8'))
    except ParseError as e:
        raise ConfigError(f'Could not parse {str(path)}: {e}') from e

    if path.name == 'pyproject.toml':
        if 'tool' in document and 'sliceforge' in document['tool']:
            return check_settings(document['tool']['sliceforge'])
        return {}
    if 'sliceforge' in document:
        return check_settings(document['sliceforge'])
    return check_settings(document)


def worker_count(tasks: int) -> int:
    """
    Number of threads for independent grid work, capped by SLICEFORGE_THREADS
    """
    value = os.environ.get(THREADS_VARIABLE)
    cap = os.cpu_count() or 1
    if value:
        try:
            cap = int(value)
        except ValueError:
            raise ConfigError(
                f'{THREADS_VARIABLE} must be an integer, got {value!r}.'
            ) from None
        if cap < 1:
            raise ConfigError(f'{THREADS_VARIABLE} must be at least 1.')
    return max(1, min(cap, tasks))


@dataclass
class RunConfig:
    command: str
    settings: Dict[str, Any] = field(default_factory=lambda: dict(DEFAULTS))
    input: Optional[Path] = None
    output: Optional[Path] = None
    quiet: bool = False

    def __getitem__(self, key: str) -> Any:
        return self.settings[key]

    @classmethod
    def build(
        cls,
        command: str,
        overrides: Mapping[str, Any],
        *,
        config_path: Optional[Path] = None,
        input_path: Optional[Path] = None,
        output_path: Optional[Path] = None,
        quiet: bool = False,
    ) -> 'RunConfig':
        """
        Merge DEFAULTS, the configuration file and the command line flags,
        later sources win
        """
        settings = dict(DEFAULTS)
        if config_path is not None:
            settings.update(load_config(config_path))
        settings.update(
            check_settings(
                {
                    key: value
                    for key, value in overrides.items()
                    if value is not None
                }
            )
        )
        return cls(
            command,
            settings,
            input=input_path,
            output=output_path,
            quiet=quiet,
        )
