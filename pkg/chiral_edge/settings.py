#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright 2026 The chiral-edge developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Run Settings
============
**Experiment configuration**

This module provides the run configuration shared by every subcommand and the
environment overrides read by the numerical modules.
"""

import json
import os

from .exceptions import ConfigurationError

DEFAULT_REL_TOL = 1e-6
DEFAULT_BUDGET = 10 ** 7
DEFAULT_WORKERS = 1
BUDGET_ENV = 'CHIRAL_EDGE_BUDGET'

COMMANDS = ('sample', 'trace', 'bes', 'ldp', 'kernel-check', 'gauss-check')
FORMATS = ('csv', 'json')


def evaluation_budget():
    """ Quadrature evaluation budget.

    Returns
    -------
    budget : int
        Value of the `CHIRAL_EDGE_BUDGET` environment variable if set,
        otherwise `DEFAULT_BUDGET`.
    """
    value = os.environ.get(BUDGET_ENV)
    if value is None or value.strip() == '':
        return DEFAULT_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise ConfigurationError('{} must be an integer, got {!r}'
                                 .format(BUDGET_ENV, value))
    if budget <= 0:
        raise ConfigurationError('{} must be positive'.format(BUDGET_ENV))
    return budget


class RunConfig(object):
    """ Run configuration

    Provides a validated, serializable description of one experiment so the
    output it produces is self-describing.

    Parameters
    ----------
    command : string
        Subcommand name, one of `COMMANDS`.

    n : list of int
        Matrix half-sizes. Sweeps use every value, single-point commands the
        first one.

    v : int
        Rectangularity (number of zero modes).

    t_min, t_max, t_step : float
        Threshold grid.

    replicates : int
        Monte Carlo replicates, 0 to skip sampling where it is optional.

    seed : int
        Master seed. Required for any command that samples.

    rel_tol : float
        Relative tolerance of the quadratures.

    workers : int
        Parallel worker processes. Never changes the output.

    out : string
        Output path, None for stdout.

    format : string
        'csv' or 'json'.

    synthetic_sn : list of float
        Directly imposed values of s_n for the Berry-Esseen sweep.

    alpha : list of float
        Values of lim v/n for the large deviation table. `inf` is allowed.

    d_n : float
        Moderate deviation scale, None for n^(-1/4).

    q : float
        Distance to the edge used by kernel-check, None for sqrt(log n/s_n).
    """

    _fields = ('command', 'n', 'v', 't_min', 't_max', 't_step', 'replicates',
               'seed', 'rel_tol', 'workers', 'out', 'format', 'synthetic_sn',
               'alpha', 'd_n', 'q')

    def __init__(self, command='trace', n=(200,), v=0, t_min=-1.0, t_max=2.0,
                 t_step=1.0, replicates=0, seed=None, rel_tol=DEFAULT_REL_TOL,
                 workers=DEFAULT_WORKERS, out=None, format='csv',
                 synthetic_sn=(), alpha=(0.0,), d_n=None, q=None):
        if command not in COMMANDS:
            raise ConfigurationError('Unknown command {!r}'.format(command))
        self.command = command

        if isinstance(n, int):
            n = (n,)
        self.n = [int(value) for value in n]
        if not self.n or min(self.n) < 1:
            raise ConfigurationError('n must hold positive integers')

        if int(v) < 0:
            raise ConfigurationError('v must be a non-negative integer')
        self.v = int(v)

        if t_step <= 0 or t_max < t_min:
            raise ConfigurationError('t grid needs t_min <= t_max and '
                                     't_step > 0')
        self.t_min = float(t_min)
        self.t_max = float(t_max)
        self.t_step = float(t_step)

        if int(replicates) < 0:
            raise ConfigurationError('replicates must be non-negative')
        self.replicates = int(replicates)

        if seed is None and self.replicates > 0:
            raise ConfigurationError('Sampling requires an explicit --seed')
        self.seed = None if seed is None else int(seed)

        if not 1e-10 < rel_tol < 1e-2:
            raise ConfigurationError('rel_tol must lie in (1e-10, 1e-2)')
        self.rel_tol = float(rel_tol)

        if int(workers) < 1:
            raise ConfigurationError('workers must be at least 1')
        self.workers = int(workers)

        self.out = out

        if format not in FORMATS:
            raise ConfigurationError('Format must be either csv or json')
        self.format = format

        self.synthetic_sn = [float(value) for value in synthetic_sn]
        self.alpha = [float(value) for value in alpha]
        if any(value < 0 for value in self.alpha):
            raise ConfigurationError('alpha must be non-negative')

        if d_n is not None and not 0 < d_n < 1:
            raise ConfigurationError('d_n must lie in (0, 1)')
        self.d_n = d_n

        if q is not None and q <= 0:
            raise ConfigurationError('q must be positive')
        self.q = q

    @property
    def t_grid(self):
        from .utils import t_grid
        return t_grid(self.t_min, self.t_max, self.t_step)

    def __getitem__(self, key):
        if key not in self._fields:
            raise KeyError(key)
        return getattr(self, key)

    def __setitem__(self, key, value):
        if key not in self._fields:
            raise KeyError(key)
        values = self.to_dict()
        values[key] = value
        self.__init__(**values)

    def __eq__(self, other):
        if not isinstance(other, RunConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __str__(self):
        return '<Run Config: {} n={} v={}>'.format(self.command, self.n,
                                                   self.v)

    def to_dict(self):
        values = dict((key, getattr(self, key)) for key in self._fields)
        values['n'] = list(self.n)
        values['synthetic_sn'] = list(self.synthetic_sn)
        values['alpha'] = list(self.alpha)
        return values

    def to_json(self):
        """ Single-line JSON form used in output headers.

        Infinite alpha values are written as the string "inf".
        """
        values = self.to_dict()
        values['alpha'] = [value if value != float('inf') else 'inf'
                           for value in values['alpha']]
        return json.dumps(values, sort_keys=True, allow_nan=False)

    @classmethod
    def from_dict(cls, values):
        values = dict(values)
        if 'alpha' in values:
            values['alpha'] = [float(value) for value in values['alpha']]
        return cls(**values)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))
