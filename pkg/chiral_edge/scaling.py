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
chiral_edge.scaling
===================
**Ensemble parameters and edge scalings**

Deterministic constants of the chiral ensemble at tau = 0: the effective size
s_n = 4n(n+v)/(2n+v), the centering gamma_n and its complement c_n, the
threshold map t -> L_n(t) and the centered statistics X_n (rightmost
eigenvalue) and X~_n (spectral radius).
"""

import math
from collections import namedtuple

import numpy as np

from .exceptions import DomainError

LOG_EDGE_OFFSET = math.log(2.0 ** 0.25 * math.pi)


class EnsembleParams(namedtuple('EnsembleParams', 'n v')):
    """ Matrix model parameters.

    Parameters
    ----------
    n : int
        Matrix half-size, n >= 1.

    v : int
        Rectangularity, v >= 0. May grow with n.
    """
    __slots__ = ()

    def __new__(cls, n, v=0):
        if isinstance(n, bool) or int(n) != n or n < 1:
            raise DomainError('n must be an integer >= 1, got {!r}'.format(n))
        if isinstance(v, bool) or int(v) != v or v < 0:
            raise DomainError('v must be an integer >= 0, got {!r}'.format(v))
        return super(EnsembleParams, cls).__new__(cls, int(n), int(v))

    @property
    def alpha(self):
        """ Ratio v/n. """
        return self.v / float(self.n)


class ScalingConstants(namedtuple('ScalingConstants',
                                  's_n gamma_n c_n aspect s_tilde '
                                  'radius_shift')):
    """ Scaling constants of one ensemble.

    `s_tilde` and `radius_shift` belong to the spectral radius statistic and
    are NaN when s_tilde <= e.
    """
    __slots__ = ()

    @property
    def scale(self):
        """ sqrt(2 s_n log s_n), the rightmost-eigenvalue zoom factor. """
        return math.sqrt(2.0 * self.s_n * math.log(self.s_n))

    @property
    def radius_scale(self):
        return 2.0 * math.sqrt(self.s_tilde * math.log(self.s_tilde))


def _value(x):
    x = np.asarray(x, dtype=float)
    return float(x) if x.ndim == 0 else x


def effective_size(p):
    return 4.0 * p.n * (p.n + p.v) / (2.0 * p.n + p.v)


def compute_constants(p, s_n=None):
    """ Compute the scaling constants of an ensemble.

    Parameters
    ----------
    p : EnsembleParams
        Ensemble, n >= 2.

    s_n : float, optional
        Synthetic effective size overriding 4n(n+v)/(2n+v). Used to explore
        the large-n regime through the closed-form pipeline; must exceed e.

    Returns
    -------
    constants : ScalingConstants
    """
    if s_n is None:
        if p.n < 2:
            raise DomainError('Scaling constants need n >= 2')
        s_n = effective_size(p)
    elif not s_n > math.e:
        raise DomainError('A synthetic s_n must exceed e')
    s_n = float(s_n)
    log_s = math.log(s_n)
    c_n = 1.25 * math.log(log_s) + LOG_EDGE_OFFSET
    gamma_n = 0.5 * log_s - c_n
    aspect = (p.n / float(p.n + p.v)) ** 0.25
    s_tilde = s_n / 4.0
    if s_tilde > math.e:
        log_st = math.log(s_tilde)
        radius_shift = log_st - math.log(math.sqrt(2.0 * math.pi) * log_st)
    else:
        radius_shift = float('nan')
    return ScalingConstants(s_n, gamma_n, c_n, aspect, s_tilde, radius_shift)


def h_n(p, t, s_n=None):
    """ Relative distance of the threshold to the edge.

    Parameters
    ----------
    p : EnsembleParams

    t : float or array_like

    s_n : float, optional
        Synthetic effective size.

    Returns
    -------
    h : float or numpy.ndarray
        (gamma_n + t) / sqrt(2 s_n log s_n).
    """
    k = compute_constants(p, s_n)
    return (k.gamma_n + _value(t)) / k.scale


def threshold_L(p, t):
    """ Real-part threshold L_n(t) = ((n+v)/n)^(1/4) (1 + h_n(t)).

    A(t) = {z : Re z >= L_n(t)} and P(X_n <= t) = det(1 - K_n on A(t)).
    """
    k = compute_constants(p)
    h = h_n(p, t)
    if np.any(np.asarray(1.0 + h) <= 0):
        raise DomainError('Threshold parameter t={} puts L_n below zero'
                          .format(t))
    return (1.0 + h) / k.aspect


def x_transform(p, max_re):
    """ Centered and scaled rightmost eigenvalue X_n.

    Parameters
    ----------
    p : EnsembleParams

    max_re : float or array_like
        max_i Re sigma_i.

    Returns
    -------
    x : float or numpy.ndarray
        sqrt(2 s_n log s_n) ((n/(n+v))^(1/4) max_re - 1) - gamma_n, so that
        x_transform(p, threshold_L(p, t)) == t.
    """
    k = compute_constants(p)
    return k.scale * (k.aspect * _value(max_re) - 1.0) - k.gamma_n


def _radius_constants(p):
    k = compute_constants(p)
    if not k.s_tilde > math.e:
        raise DomainError('The spectral radius scaling needs '
                          'n(n+v)/(2n+v) > e')
    return k


def radius_transform(p, max_abs_sq):
    """ Centered and scaled spectral radius statistic X~_n.

    Parameters
    ----------
    p : EnsembleParams

    max_abs_sq : float or array_like
        max_i |sigma_i|**2.

    Returns
    -------
    x : float or numpy.ndarray
        2 sqrt(s~ log s~) ((n/(n+v))^(1/2) max_abs_sq - 1) minus the shift
        log s~ - log(sqrt(2 pi) log s~), with s~ = n(n+v)/(2n+v).
    """
    k = _radius_constants(p)
    return k.radius_scale * (k.aspect ** 2 * _value(max_abs_sq) - 1.0) \
        - k.radius_shift


def radius_threshold(p, t):
    """ Squared-modulus threshold whose exceedance defines X~_n > t.

    Inverse of `radius_transform`.
    """
    k = _radius_constants(p)
    shift = (_value(t) + k.radius_shift) / k.radius_scale
    return (1.0 + shift) / k.aspect ** 2
