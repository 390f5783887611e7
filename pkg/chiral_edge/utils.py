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
chiral_edge.utils
=================
**Numeric formatting and quadrature helpers**

This module provides the round-trip float formatting used by every output
file, threshold grids, and Gauss-Legendre panel rules.
"""

import math
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from .exceptions import DomainError

SIGNIFICANT_DIGITS = 17


def format_float(value):
    """ Convert a float to its round-trip safe text form.

    Parameters
    ----------
    value : float
        Value to format. NaN and infinities are written as 'nan', 'inf' and
        '-inf'.

    Returns
    -------
    value : string
        The value with 17 significant digits.
    """
    value = float(value)
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return '{0:.{1}g}'.format(value, SIGNIFICANT_DIGITS)


def parse_float(value):
    """ Inverse of `format_float`. Empty fields are read as NaN.
    """
    value = value.strip()
    if value == '':
        return float('nan')
    return float(value)


def t_grid(t_min, t_max, t_step):
    """ Evenly spaced threshold grid including both ends.

    Parameters
    ----------
    t_min, t_max : float
        Grid ends, `t_min <= t_max`.

    t_step : float
        Positive spacing. The last point is `t_max` whenever the span is a
        multiple of the step up to rounding.

    Returns
    -------
    grid : numpy.ndarray
    """
    if t_step <= 0 or t_max < t_min:
        raise DomainError('Grid needs t_min <= t_max and a positive step')
    count = int(math.floor((t_max - t_min) / t_step + 1e-9)) + 1
    return t_min + t_step * np.arange(count)


@lru_cache(maxsize=32)
def _leggauss(order):
    nodes, weights = leggauss(order)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(breaks, order):
    """ Composite Gauss-Legendre rule.

    Parameters
    ----------
    breaks : array_like
        Increasing panel boundaries.

    order : int
        Nodes per panel.

    Returns
    -------
    nodes, weights : numpy.ndarray
        Concatenated nodes and weights over all panels.
    """
    breaks = np.asarray(breaks, dtype=float)
    if breaks.ndim != 1 or breaks.size < 2 or np.any(np.diff(breaks) <= 0):
        raise DomainError('Panel boundaries must be strictly increasing')
    x, w = _leggauss(int(order))
    half = 0.5 * np.diff(breaks)
    mid = 0.5 * (breaks[1:] + breaks[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights
