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
chiral_edge.special_functions
=============================
**Log-domain special functions**

Gamma and Bessel K values enter the correlation kernel with prefactors far
outside the double range, so they are only ever produced as natural
logarithms here. Every function accepts a scalar or a numpy array and returns
the same shape.
"""

import numpy as np
from scipy import special, stats

from .exceptions import DomainError

#: Orders up to this value use the upward recurrence, larger orders the
#: uniform large-order expansion.
RECURRENCE_MAX_ORDER = 50


def _as_float_array(x):
    scalar = np.isscalar(x) or np.ndim(x) == 0
    return scalar, np.atleast_1d(np.asarray(x, dtype=float))


def _unwrap(scalar, result):
    return float(result[0]) if scalar else result


def log_gamma(x):
    """ Natural logarithm of the Gamma function.

    Parameters
    ----------
    x : float or array_like
        Strictly positive, finite arguments.

    Returns
    -------
    log_gamma : float or numpy.ndarray
        ln Gamma(x).
    """
    scalar, x = _as_float_array(x)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError('log_gamma needs finite positive arguments')
    return _unwrap(scalar, special.gammaln(x))


def _log_kv_recurrence(v, x):
    # K_{nu+1}(x) = K_{nu-1}(x) + (2 nu / x) K_nu(x), all terms positive
    order = int(np.floor(v))
    nu0 = v - order
    log_k0 = np.log(special.kve(nu0, x)) - x
    if order == 0:
        return log_k0
    log_k1 = np.log(special.kve(nu0 + 1.0, x)) - x
    log_x = np.log(x)
    for step in range(1, order):
        nu = nu0 + step
        log_k0, log_k1 = log_k1, np.logaddexp(
            log_k0, np.log(2.0 * nu) - log_x + log_k1)
    return log_k1


def _debye_polynomials(p):
    p2 = p * p
    u1 = p * (3.0 - 5.0 * p2) / 24.0
    u2 = p2 * (81.0 - 462.0 * p2 + 385.0 * p2 * p2) / 1152.0
    u3 = p * p2 * (30375.0 + p2 * (-369603.0 + p2 * (765765.0
                                                     - 425425.0 * p2))) \
        / 414720.0
    u4 = p2 * p2 * (4465125.0 + p2 * (-94121676.0 + p2 * (
        349922430.0 + p2 * (-446185740.0 + 185910725.0 * p2)))) / 39813120.0
    return u1, u2, u3, u4


def _log_kv_uniform(v, x):
    z = x / v
    root = np.hypot(1.0, z)
    eta = root + np.log(z) - np.log1p(root)
    u1, u2, u3, u4 = _debye_polynomials(1.0 / root)
    series = 1.0 - u1 / v + u2 / v ** 2 - u3 / v ** 3 + u4 / v ** 4
    return (0.5 * np.log(np.pi / (2.0 * v)) - v * eta
            - 0.5 * np.log(root) + np.log(series))


def log_bessel_k(v, x):
    """ Natural logarithm of the modified Bessel function K_v(x).

    Orders up to `RECURRENCE_MAX_ORDER` are reached by the upward three-term
    recurrence on the exponentially scaled functions of orders v - floor(v)
    and v - floor(v) + 1, carried out in the log domain. Larger orders use
    the uniform large-order expansion with four correction terms, accurate
    whenever x is comparable to v as well as for x far from v.

    Parameters
    ----------
    v : float
        Non-negative order.

    x : float or array_like
        Strictly positive arguments.

    Returns
    -------
    log_k : float or numpy.ndarray
        ln K_v(x).
    """
    v = float(v)
    if not np.isfinite(v) or v < 0:
        raise DomainError('log_bessel_k needs a finite order v >= 0')
    scalar, x = _as_float_array(x)
    if not np.all(np.isfinite(x)) or np.any(x <= 0):
        raise DomainError('log_bessel_k needs finite positive arguments')
    if v <= RECURRENCE_MAX_ORDER:
        result = _log_kv_recurrence(v, x)
    else:
        result = _log_kv_uniform(v, x)
    return _unwrap(scalar, result)


def gumbel_cdf(x):
    """ Standard Gumbel distribution function exp(-exp(-x)).

    Total on the extended real line; far left arguments return 0.
    """
    return stats.gumbel_r.cdf(x)


def gumbel_ppf(p):
    """ Quantile function of the standard Gumbel law. """
    return stats.gumbel_r.ppf(p)


def gaussian_tail(u, delta):
    """ Tail integral of exp(-u y**2) over y >= delta.

    Parameters
    ----------
    u : float or array_like
        Positive curvature.

    delta : float or array_like
        Lower limit, non-negative.

    Returns
    -------
    tail : float or numpy.ndarray
        sqrt(pi) / (2 sqrt(u)) * erfc(delta sqrt(u)).
    """
    u = np.asarray(u, dtype=float)
    if np.any(u <= 0):
        raise DomainError('gaussian_tail needs u > 0')
    root = np.sqrt(u)
    result = np.sqrt(np.pi) / (2.0 * root) * special.erfc(delta * root)
    return float(result) if np.ndim(result) == 0 else result
