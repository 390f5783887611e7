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
chiral_edge.deviations
======================
**Large and moderate deviations of the rightmost eigenvalue**

For alpha = lim v/n and t > 1

    (1/n) log P((n/(n+v))^(1/4) max Re sigma_i >= t) -> -J_alpha(t),

and on the scale 1 + t d_n with sqrt(log n / n) << d_n << 1 the rate becomes
8 (1 + alpha) t^2 / (2 + alpha). The empirical counterparts replace the
probability by the expected number of eigenvalues beyond the threshold,
which is the kernel trace over the half-plane.
"""

import math
from collections import namedtuple

import numpy as np

from .exceptions import DomainError
from .quadrature import log_trace_threshold
from .settings import DEFAULT_REL_TOL


class AlphaParam(namedtuple('AlphaParam', 'alpha')):
    """ Limiting ratio alpha = lim v/n in [0, inf]. """
    __slots__ = ()

    def __new__(cls, alpha):
        alpha = float(alpha)
        if math.isnan(alpha) or alpha < 0:
            raise DomainError('alpha must lie in [0, inf], got {!r}'
                              .format(alpha))
        return super(AlphaParam, cls).__new__(cls, alpha)

    @classmethod
    def from_params(cls, p):
        return cls(p.v / float(p.n))

    @property
    def is_infinite(self):
        return math.isinf(self.alpha)


def _alpha(a):
    return a if isinstance(a, AlphaParam) else AlphaParam(a)


def rate_J(a, t):
    """ Large deviation rate J_alpha(t) of the upper tail.

    Parameters
    ----------
    a : AlphaParam or float

    t : float or array_like
        Thresholds beyond the edge, t > 1.

    Returns
    -------
    rate : float or numpy.ndarray
        -2(1 + log t^2) + 4(1+a)t^4/(a + R) - a log((a + R)/(2(1+a))) with
        R = sqrt(a^2 + 4(1+a)t^4), and t^4 - 1 - 4 log t for a = inf.
    """
    a = _alpha(a)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 1):
        raise DomainError('rate_J is defined for t > 1')
    log_t = np.log(t)
    t4 = t ** 4
    if a.is_infinite:
        rate = t4 - 1.0 - 4.0 * log_t
    else:
        alpha = a.alpha
        root = np.sqrt(alpha * alpha + 4.0 * (1.0 + alpha) * t4)
        # R - alpha without cancellation
        excess = 4.0 * (1.0 + alpha) * t4 / (alpha + root)
        rate = (-2.0 - 4.0 * log_t + excess
                - alpha * np.log1p((excess - 2.0) / (2.0 * (1.0 + alpha))))
    return float(rate) if rate.ndim == 0 else rate


def rate_moderate(a, t):
    """ Moderate deviation rate 8 (1 + alpha) t^2 / (2 + alpha).

    Equals 4 t^2 at alpha = 0 and 8 t^2 at alpha = inf.
    """
    a = _alpha(a)
    t = np.asarray(t, dtype=float)
    if np.any(t <= 0):
        raise DomainError('rate_moderate is defined for t > 0')
    if a.is_infinite:
        coefficient = 8.0
    else:
        coefficient = 8.0 * (1.0 + a.alpha) / (2.0 + a.alpha)
    rate = coefficient * t * t
    return float(rate) if rate.ndim == 0 else rate


def _edge(p):
    return ((p.n + p.v) / float(p.n)) ** 0.25


def empirical_ldp(p, t, rel_tol=DEFAULT_REL_TOL):
    """ -(1/n) log of the expected number of eigenvalues with
    Re sigma >= ((n+v)/n)^(1/4) t.

    Tends to rate_J(v/n, t) with an O(log n / n) defect.
    """
    if not t > 1:
        raise DomainError('empirical_ldp is defined for t > 1')
    result = log_trace_threshold(p, _edge(p) * t, rel_tol)
    return -result.log_value / p.n


def empirical_moderate(p, t, d_n=None, rel_tol=DEFAULT_REL_TOL):
    """ -(1/(n d_n^2)) log of the expected number of eigenvalues with
    Re sigma >= ((n+v)/n)^(1/4) (1 + t d_n).

    Parameters
    ----------
    p : EnsembleParams

    t : float
        Positive threshold on the moderate scale.

    d_n : float, optional
        Scale in (0, 1), n^(-1/4) by default.

    Returns
    -------
    rate : float
        Tends to rate_moderate(v/n, t).
    """
    if not t > 0:
        raise DomainError('empirical_moderate is defined for t > 0')
    if d_n is None:
        d_n = p.n ** -0.25
    if not 0 < d_n < 1:
        raise DomainError('d_n must lie in (0, 1)')
    result = log_trace_threshold(p, _edge(p) * (1.0 + t * d_n), rel_tol)
    return -result.log_value / (p.n * d_n * d_n)


def log_tail_estimate(p, t):
    """ Closed-form log of the expected number of eigenvalues beyond
    ((n+v)/n)^(1/4) t, up to an O(log n) error.

    For v <= log n this is 2n(1 + log t^2) - 2 sqrt(n(n+v)) t^2
    + 2v log t - log(n) / 2. Larger v use the Bessel uniform expansion with
    u = 2 t^2 sqrt(n(n+v)) / v.
    """
    if not t > 1:
        raise DomainError('log_tail_estimate is defined for t > 1')
    n, v = float(p.n), float(p.v)
    log_t = math.log(t)
    geometric = math.sqrt(n * (n + v))
    if v <= math.log(n):
        return (2.0 * n + (4.0 * n + 2.0 * v) * log_t
                - 2.0 * geometric * t * t - 0.5 * math.log(n))
    u = 2.0 * t * t * geometric / v
    root = math.hypot(1.0, u)
    return (v * math.log(v * (1.0 + root) / (2.0 * (n + v)))
            - 0.25 * math.log(v * v * (1.0 + u * u) / (n + v) ** 2)
            + 2.0 * n * (1.0 + 2.0 * log_t) + v * (1.0 - root))
