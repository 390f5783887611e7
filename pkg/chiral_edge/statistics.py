#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright 2026 The chiral-edge developers

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
chiral_edge.statistics
======================
**Empirical distributions and the Berry-Esseen harness**

The rightmost eigenvalue statistic X_n converges to the Gumbel law with

    sup_x |P(X_n <= x) - exp(-exp(-x))|
        = 25 (log log s_n)^2 / (16 e log s_n) (1 + o(1)).

`be_measured_asymptotic` evaluates the deterministic mechanism behind this
rate, the Gumbel defect produced by the trace asymptotics, on a threshold
grid. It needs no sampling, so s_n may be set far beyond samplable sizes.
"""

import math
from collections import namedtuple

import numpy as np
from scipy import stats
from scipy.stats import qmc

from .exceptions import DomainError
from .quadrature import trace_asymptotic
from .scaling import compute_constants
from .special_functions import gumbel_cdf, gumbel_ppf

#: Largest spacing allowed in a Berry-Esseen threshold grid.
MAX_GRID_STEP = 0.01

BerryEsseen = namedtuple('BerryEsseen', 'sup_distance argmax_t')


class EcdfSummary(namedtuple('EcdfSummary', 'sorted_values count')):
    """ Empirical distribution of a finite sample. """
    __slots__ = ()

    @classmethod
    def from_values(cls, values):
        values = np.sort(np.asarray(values, dtype=float).ravel())
        if values.size == 0:
            raise DomainError('An empirical distribution needs at least '
                              'one value')
        if np.any(np.isnan(values)):
            raise DomainError('Sample contains NaN')
        return cls(values, int(values.size))

    def __call__(self, x):
        """ Fraction of values <= x. """
        found = np.searchsorted(self.sorted_values, x, side='right')
        return found / float(self.count)


def ks_distance(e, cdf):
    """ Kolmogorov-Smirnov distance between a sample and a distribution.

    Parameters
    ----------
    e : EcdfSummary

    cdf : callable
        Vectorized distribution function.

    Returns
    -------
    distance : float
        Largest gap between the empirical and the given distribution,
        taking both one-sided limits at every jump.
    """
    if e.count < 1:
        raise DomainError('Empty sample')
    return float(stats.kstest(e.sorted_values, cdf).statistic)


def gumbel_reference_sample(count):
    """ Low-discrepancy stand-in for an exact Gumbel sample.

    Gumbel quantiles of the unscrambled van der Corput sequence, skipping
    its leading zero.
    """
    if count < 1:
        raise DomainError('count must be positive')
    sequence = qmc.Halton(d=1, scramble=False)
    sequence.fast_forward(1)
    return gumbel_ppf(sequence.random(count)[:, 0])


def _log_log(s_n):
    log_log = math.log(math.log(s_n))
    if not log_log > 0:
        raise DomainError('log log s_n must be positive')
    return log_log


def be_leading_term(p, s_n=None):
    """ Leading Berry-Esseen term 25 (log log s_n)^2 / (16 e log s_n).

    Parameters
    ----------
    p : EnsembleParams

    s_n : float, optional
        Synthetic effective size.
    """
    s_n = compute_constants(p, s_n).s_n
    return 25.0 * _log_log(s_n) ** 2 / (16.0 * math.e * math.log(s_n))


def be_leading_term_radius(p):
    """ Leading Berry-Esseen term (log log s~)^2 / (2 e log s~) of the
    spectral radius statistic, s~ = n(n+v)/(2n+v).
    """
    s_tilde = compute_constants(p).s_tilde
    if not s_tilde > math.e:
        raise DomainError('The spectral radius scaling needs s~ > e')
    return _log_log(s_tilde) ** 2 / (2.0 * math.e * math.log(s_tilde))


def be_grid(p, s_n=None, step=MAX_GRID_STEP):
    """ Threshold grid from -log(log n)/4 to log log s_n.

    With a synthetic s_n the left end uses n = s_n / 2.
    """
    k = compute_constants(p, s_n)
    n = p.n if s_n is None else 0.5 * k.s_n
    if not n > 1:
        raise DomainError('The grid needs n > 1')
    left = -0.25 * math.log(math.log(n)) if n > math.e else 0.0
    right = math.log(math.log(k.s_n))
    if not right > left:
        raise DomainError('Empty Berry-Esseen window')
    count = int(math.ceil((right - left) / step)) + 1
    return np.linspace(left, right, count)


def be_measured_asymptotic(p, grid=None, s_n=None, mode='exact'):
    """ Grid supremum of the Gumbel defect of the trace asymptotics.

    Parameters
    ----------
    p : EnsembleParams

    grid : array_like, optional
        Increasing thresholds with spacing at most `MAX_GRID_STEP`;
        `be_grid(p, s_n)` by default.

    s_n : float, optional
        Synthetic effective size.

    mode : {'exact', 'linearized'}
        'exact' takes |exp(-Tr(t)) - exp(-exp(-t))| with the large-n trace.
        'linearized' takes exp(-exp(-t) - t) (t - c_n)^2 / log s_n, its
        first-order expansion in 1 / log s_n.

    Returns
    -------
    result : BerryEsseen
        Supremum over the grid and the threshold attaining it.
    """
    if grid is None:
        grid = be_grid(p, s_n)
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size < 2 or not np.all(np.isfinite(grid)):
        raise DomainError('The grid must hold at least two finite points')
    steps = np.diff(grid)
    if np.any(steps <= 0) or np.max(steps) > MAX_GRID_STEP * (1.0 + 1e-9):
        raise DomainError('The grid must increase in steps of at most {}'
                          .format(MAX_GRID_STEP))
    k = compute_constants(p, s_n)
    if mode == 'exact':
        defect = np.abs(np.exp(-trace_asymptotic(p, grid, s_n))
                        - gumbel_cdf(grid))
    elif mode == 'linearized':
        defect = np.exp(-np.exp(-grid) - grid) * (grid - k.c_n) ** 2 \
            / math.log(k.s_n)
    else:
        raise DomainError('Unknown mode {!r}'.format(mode))
    best = int(np.argmax(defect))
    return BerryEsseen(float(defect[best]), float(grid[best]))


def be_measured_empirical(run):
    """ Kolmogorov-Smirnov distance of a Monte Carlo run to the Gumbel law.
    """
    return ks_distance(EcdfSummary.from_values(run.x_values), gumbel_cdf)


def mc_standard_error(p_hat, replicates):
    """ Standard error sqrt(p (1 - p) / N) of a Monte Carlo frequency. """
    if replicates < 1:
        raise DomainError('replicates must be positive')
    if not 0 <= p_hat <= 1:
        raise DomainError('p_hat must be a probability')
    return math.sqrt(p_hat * (1.0 - p_hat) / replicates)
