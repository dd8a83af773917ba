#
#  This file is part of bettipy.
#
#  bettipy is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  bettipy is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with bettipy; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
#
"""Experiment configuration files.

An experiment is a JSON document validated by :class:`ExperimentConfig`::

    {"schema": 1, "scenario": "circle_vs_disk", "test": "one_sample",
     "null": "circle_vonmises", "alt": "disk", "hypothesis": [1, 1],
     "regime": "critical", "alpha": 0.05, "r": 100,
     "n_list": [20, 50, 100, 150, 200], "seed": 0}

Distributions are given as preset names or parameter dicts (see
:func:`bettipy.sampler.parse_spec`).

The simulation study ships as bundled experiments, see :func:`experiments`.
"""

import json
import os
from typing import List, Literal, Optional

from pydantic import (BaseModel, ConfigDict, Field, ValidationError,
                      field_validator, model_validator)

from .pointfunc import SCALING_MODES
from .sampler import DistributionSpec, parse_spec, InvalidSpecError
from .statfunc import ThresholdRule, REGIMES, QUANTILE_MODES

__all__ = ['ExperimentConfig', 'ConfigError', 'load_config', 'SCHEMA_VERSION',
           'experiments', 'experiment_path', 'DATAPATH']

SCHEMA_VERSION = 1

DATAPATH = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data',
                        'experiments')


class ConfigError(ValueError):
    """Raised for an invalid experiment configuration.

    Attributes
    ----------
    violations : list of str
      One ``field: message`` line per violated constraint.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super(ConfigError, self).__init__(
            'invalid configuration:\n  ' + '\n  '.join(self.violations))


class ExperimentConfig(BaseModel):
    """A power experiment: distributions, test settings and outputs."""
    model_config = ConfigDict(frozen=True, extra='forbid',
                              populate_by_name=True)

    schema_version: Literal[SCHEMA_VERSION] = Field(SCHEMA_VERSION,
                                                    alias='schema')
    scenario: str = Field(min_length=1)
    test: Literal['one_sample', 'two_sample'] = 'two_sample'
    null: DistributionSpec
    alt: Optional[DistributionSpec] = None
    hypothesis: Optional[List[int]] = None
    regime: Literal[REGIMES] = 'critical'
    d: Optional[int] = Field(None, ge=1)
    tau: float = Field(1., gt=0)
    alpha: float = Field(0.05, gt=0, lt=1)
    r: int = Field(100, ge=1)
    n_list: List[int] = Field(default_factory=lambda: [20, 50, 100, 150, 200],
                              min_length=1)
    seed: int = 0
    scaling: Literal[SCALING_MODES] = 'per_point_norm'
    quantile: Literal[QUANTILE_MODES] = 'one_minus_half_alpha'
    methods: List[Literal['betti', 'robinson', 'landscape', 'permutation']] = \
        Field(default_factory=lambda: ['betti'], min_length=1)
    n_perm: int = Field(30, ge=1)
    max_threshold: float = Field(4., ge=0)
    dim: int = Field(1, ge=0)
    grid_size: int = Field(1000, ge=1)
    baseline_r: int = Field(10, ge=1)
    baseline_scaling: Literal[SCALING_MODES] = 'none'
    reps: int = Field(50, ge=1)
    output: Optional[str] = None
    plot: Optional[str] = None

    @field_validator('null', 'alt', mode='before')
    @classmethod
    def _parse_distribution(cls, value):
        if value is None:
            return value
        try:
            return parse_spec(value)
        except InvalidSpecError as e:
            raise ValueError('; '.join(e.violations))

    @field_validator('n_list')
    @classmethod
    def _check_n_list(cls, value):
        if any(n < 1 for n in value):
            raise ValueError('sample sizes must be >= 1')
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError('sample sizes must be strictly increasing')
        return value

    @field_validator('hypothesis')
    @classmethod
    def _check_hypothesis(cls, value):
        if value is not None and any(b < 0 for b in value):
            raise ValueError('Betti numbers must be nonnegative')
        return value

    @model_validator(mode='after')
    def _check_consistency(self):
        problems = []
        if (self.alt is not None
                and self.null.ambient_dim != self.alt.ambient_dim):
            problems.append('null and alt live in dimensions %d and %d'
                            % (self.null.ambient_dim, self.alt.ambient_dim))
        if self.test == 'one_sample':
            if self.hypothesis is None:
                problems.append('hypothesis is required for a one-sample test')
            elif len(self.hypothesis) != self.betti_dim:
                problems.append('hypothesis must have length %d'
                                % self.betti_dim)
            if any(m != 'betti' for m in self.methods):
                problems.append('baselines are two-sample tests only')
        if self.regime == 'supercritical' and min(self.n_list) < 2:
            problems.append('the supercritical rule needs sample sizes >= 2')
        if problems:
            raise ValueError('; '.join(problems))
        return self

    @property
    def betti_dim(self):
        """Length of the Betti vectors (the ambient dimension by default)."""
        return self.d if self.d is not None else self.null.ambient_dim

    def rule(self):
        """The :class:`~bettipy.statfunc.ThresholdRule` of the experiment."""
        return ThresholdRule(self.regime, self.null.ambient_dim, self.tau,
                             betti_dim=self.betti_dim)


def _violations(error):
    out = []
    for err in error.errors(include_url=False):
        loc = '.'.join(str(x) for x in err['loc'])
        msg = err['msg']
        if msg.startswith('Value error, '):
            msg = msg[len('Value error, '):]
        for part in msg.split('; '):
            out.append('%s: %s' % (loc, part) if loc else part)
    return out


def experiments():
    """Names of the bundled experiments.

    Examples
    --------
    >>> 'torus_vs_sphere' in experiments()
    True
    """
    return sorted(os.path.splitext(f)[0] for f in os.listdir(DATAPATH)
                  if f.endswith('.json'))


def experiment_path(name):
    """File name of the bundled experiment *name*."""
    if name not in experiments():
        raise ValueError('unknown experiment %r, expected one of %s'
                         % (name, ', '.join(experiments())))
    return os.path.join(DATAPATH, name + '.json')


def load_config(source):
    """Reads and validates an experiment configuration.

    Parameters
    ----------
    source : str or dict
      A JSON file name, or the already decoded document.
      A bundled experiment name is accepted when no such file exists.

    Returns
    -------
    config : ExperimentConfig

    Raises
    ------
    ConfigError
      listing every violated constraint, each prefixed with its field.

    Examples
    --------
    >>> try:
    ...     load_config({'scenario': 's', 'null': 'circle', 'alt': 'disk',
    ...                  'alpha': 1.5})
    ... except ConfigError as e:
    ...     print(e.violations)
    ['alpha: Input should be less than 1']
    """
    if isinstance(source, dict):
        data = source
    else:
        if not os.path.exists(source) and source in experiments():
            source = experiment_path(source)
        with open(source) as f:
            try:
                data = json.load(f)
            except ValueError as e:
                raise ConfigError(['%s: not valid JSON (%s)' % (source, e)])
    if not isinstance(data, dict):
        raise ConfigError(['the configuration must be a JSON object'])
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(_violations(e))
