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
chiral_edge.kernel
==================
**Correlation kernel of the chiral ensemble**

The eigenvalues with positive real part form a determinantal point process
with kernel

    K_n(z, w) = 8 n^(v+2) |z w|^(v+1) / pi * sqrt(K_v(2n|z|^2) K_v(2n|w|^2))
                * sum_{k<n} (n z conj(w))^(2k) / (Gamma(k+1) Gamma(k+v+1)).

Kernel values overflow doubles long before n reaches the hundreds, so they
are carried as `LogComplex` numbers. This module also holds the large-n
forms of the truncated sum and of the kernel, and the phase functions tau_n,
w, phi and beta that control the Laplace asymptotics near the edge.
"""

import math
from collections import namedtuple

import numpy as np
from scipy.special import gammaln

from .exceptions import DomainError, SingularityError
from .scaling import compute_constants, h_n
from .special_functions import log_bessel_k

#: Denominators below this modulus are treated as singular.
SINGULAR_MODULUS = 1e-300

# Elements per block in vectorized sum evaluations
_BLOCK_SIZE = 2 ** 20

# Relative slack for the regime check at the boundary point itself
_BOUNDARY_SLACK = 1e-12


def _wrap_phase(phase):
    # maps onto (-pi, pi]
    return -((-phase + math.pi) % (2.0 * math.pi) - math.pi)


class LogComplex(object):
    """ Complex number stored as logarithm of its modulus and its phase.

    Parameters
    ----------
    log_modulus : float
        Natural log of the modulus. -inf (or `is_zero`) denotes exact zero.

    phase : float
        Argument, wrapped onto (-pi, pi].
    """

    __slots__ = ('log_modulus', 'phase')

    def __init__(self, log_modulus, phase=0.0):
        log_modulus = float(log_modulus)
        if math.isnan(log_modulus) or log_modulus == math.inf:
            raise DomainError('log_modulus must be finite or -inf')
        self.log_modulus = log_modulus
        self.phase = 0.0 if log_modulus == -math.inf \
            else _wrap_phase(float(phase))

    @classmethod
    def zero(cls):
        return cls(-math.inf)

    @classmethod
    def from_complex(cls, value):
        value = complex(value)
        if value == 0:
            return cls.zero()
        return cls(math.log(abs(value)), math.atan2(value.imag, value.real))

    @classmethod
    def from_terms(cls, log_moduli, phases=None):
        """ Stable sum of terms given in log-polar form.

        The largest modulus is factored out, the remainder accumulated in
        ordinary complex arithmetic and the factor re-attached.
        """
        log_moduli = np.asarray(log_moduli, dtype=float)
        phases = np.zeros_like(log_moduli) if phases is None \
            else np.asarray(phases, dtype=float)
        log_mod, phase = _log_sum(log_moduli[None, :], phases[None, :])
        return cls(log_mod[0], phase[0])

    @property
    def is_zero(self):
        return self.log_modulus == -math.inf

    @property
    def modulus(self):
        return math.exp(self.log_modulus)

    def to_complex(self):
        """ Linear-domain value. Overflows for large log moduli. """
        if self.is_zero:
            return 0j
        return complex(math.exp(self.log_modulus) * math.cos(self.phase),
                       math.exp(self.log_modulus) * math.sin(self.phase))

    def conjugate(self):
        return LogComplex(self.log_modulus, -self.phase)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_modulus + other.log_modulus,
                          self.phase + other.phase)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise SingularityError('Division by an exact zero')
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_modulus - other.log_modulus,
                          self.phase - other.phase)

    def __neg__(self):
        return LogComplex(self.log_modulus, self.phase + math.pi)

    def __add__(self, other):
        other = _coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        return LogComplex.from_terms([self.log_modulus, other.log_modulus],
                                     [self.phase, other.phase])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def isclose(self, other, rel_tol=1e-12, abs_phase=1e-12):
        """ Compare log moduli with a relative tolerance and phases with an
        absolute one.
        """
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        scale = max(1.0, abs(self.log_modulus), abs(other.log_modulus))
        dphase = abs(_wrap_phase(self.phase - other.phase))
        return (abs(self.log_modulus - other.log_modulus) <= rel_tol * scale
                and dphase <= abs_phase)

    def __eq__(self, other):
        if not isinstance(other, LogComplex):
            return NotImplemented
        return (self.log_modulus == other.log_modulus
                and self.phase == other.phase)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.log_modulus, self.phase))

    def __repr__(self):
        return 'LogComplex(log_modulus={!r}, phase={!r})'.format(
            self.log_modulus, self.phase)


def _coerce(value):
    if isinstance(value, LogComplex):
        return value
    return LogComplex.from_complex(value)


def _log_sum(log_terms, phases):
    """ Row-wise sum of exp(log_terms + i phases), returned in log-polar form.
    """
    peak = np.max(log_terms, axis=1)
    finite = np.isfinite(peak)
    safe_peak = np.where(finite, peak, 0.0)
    with np.errstate(invalid='ignore'):
        scaled = np.exp(log_terms - safe_peak[:, None])
    if np.all(phases == 0):
        total = np.sum(scaled, axis=1).astype(complex)
    else:
        total = np.sum(scaled * np.exp(1j * phases), axis=1)
    modulus = np.abs(total)
    with np.errstate(divide='ignore'):
        log_mod = np.where(finite & (modulus > 0),
                           safe_peak + np.log(modulus), -np.inf)
    return log_mod, np.angle(total)


def _sum_terms(p, terms):
    if terms is None:
        terms = p.n
    terms = int(terms)
    if terms < 1:
        raise DomainError('The kernel sum needs at least one term')
    k = np.arange(terms, dtype=float)
    return k, -(gammaln(k + 1.0) + gammaln(k + p.v + 1.0))


def log_kernel_sum_grid(p, zeta, terms=None):
    """ Vectorized truncated kernel sum in log-polar form.

    Parameters
    ----------
    p : EnsembleParams

    zeta : array_like of complex
        Values of z conj(w).

    terms : int, optional
        Number of terms, n by default.

    Returns
    -------
    log_modulus, phase : numpy.ndarray
        Arrays shaped like `zeta`.
    """
    zeta = np.asarray(zeta, dtype=complex)
    shape = zeta.shape
    zeta = zeta.ravel()
    k, log_coeff = _sum_terms(p, terms)
    modulus = np.abs(zeta)
    angle = np.angle(zeta)
    with np.errstate(divide='ignore'):
        log_nz = np.log(p.n * modulus)
    is_zero = modulus == 0
    log_nz[is_zero] = 0.0
    rows = max(1, _BLOCK_SIZE // k.size)
    out_log = np.empty(zeta.size)
    out_phase = np.empty(zeta.size)
    for start in range(0, zeta.size, rows):
        block = slice(start, start + rows)
        log_terms = 2.0 * k[None, :] * log_nz[block, None] + log_coeff[None, :]
        log_terms[is_zero[block], 1:] = -np.inf
        phases = 2.0 * k[None, :] * angle[block, None]
        out_log[block], out_phase[block] = _log_sum(log_terms, phases)
    return out_log.reshape(shape), out_phase.reshape(shape)


def kernel_sum_exact(p, zw, terms=None):
    """ Truncated sum sum_{k<n} (n zw)^(2k) / (Gamma(k+1) Gamma(k+v+1)).

    Parameters
    ----------
    p : EnsembleParams

    zw : complex
        The product z conj(w).

    terms : int, optional
        Truncation, n by default.

    Returns
    -------
    value : LogComplex
    """
    log_mod, phase = log_kernel_sum_grid(p, [zw], terms)
    return LogComplex(log_mod[0], phase[0])


def kernel_sum_term(p, zw, k):
    """ Single term (n zw)^(2k) / (Gamma(k+1) Gamma(k+v+1)) of the sum. """
    zw = complex(zw)
    log_coeff = -(gammaln(k + 1.0) + gammaln(k + p.v + 1.0))
    if zw == 0:
        return LogComplex(log_coeff) if k == 0 else LogComplex.zero()
    return LogComplex(2.0 * k * math.log(p.n * abs(zw)) + log_coeff,
                      2.0 * k * math.atan2(zw.imag, zw.real))


def default_q(p):
    """ Default distance to the edge, sqrt(log n / s_n). """
    return math.sqrt(math.log(p.n) / compute_constants(p).s_n)


def _log_denominator(p, zw):
    # n (z conj w)^2 / (n + v) - 1
    d = p.n * complex(zw) ** 2 / (p.n + p.v) - 1.0
    if abs(d) < SINGULAR_MODULUS:
        raise SingularityError('Edge denominator vanishes at zw={!r}'
                               .format(zw))
    return math.log(abs(d)), math.atan2(d.imag, d.real)


def kernel_sum_asymptotic(p, zw, q=None):
    """ Large-n form of the truncated sum outside the edge.

    Parameters
    ----------
    p : EnsembleParams

    zw : complex
        Product z conj(w), with |zw| >= sqrt((n+v)/n) (1 + q).

    q : float, optional
        Distance to the edge, `default_q(p)` when omitted.

    Returns
    -------
    value : LogComplex
        zw^(2n) n^(n-1/2) e^(2n+v) / (2 pi (n+v)^(n+v+1/2) (n zw^2/(n+v) - 1))
    """
    n, v = p.n, p.v
    zw = complex(zw)
    q = default_q(p) if q is None else float(q)
    bound = math.sqrt((n + v) / float(n)) * (1.0 + q)
    if abs(zw) < bound * (1.0 - _BOUNDARY_SLACK):
        raise DomainError('|zw|={} lies inside the validity bound {}'
                          .format(abs(zw), bound))
    log_d, phase_d = _log_denominator(p, zw)
    log_mod = (2.0 * n * math.log(abs(zw)) + (n - 0.5) * math.log(n)
               + 2.0 * n + v - math.log(2.0 * math.pi)
               - (n + v + 0.5) * math.log(n + v) - log_d)
    phase = 2.0 * n * math.atan2(zw.imag, zw.real) - phase_d
    return LogComplex(log_mod, phase)


def _log_half_prefactor(p, r):
    # (v+1) log r + 1/2 log K_v(2 n r^2); the kernel carries one per argument
    r = np.asarray(r, dtype=float)
    return (p.v + 1.0) * np.log(r) + 0.5 * log_bessel_k(p.v, 2.0 * p.n * r * r)


def _log_constant(p):
    return math.log(8.0 / math.pi) + (p.v + 2.0) * math.log(p.n)


def kernel_exact(p, z, w):
    """ Exact correlation kernel K_n(z, w).

    Parameters
    ----------
    p : EnsembleParams

    z, w : complex
        Non-zero points.

    Returns
    -------
    value : LogComplex
        Real and positive on the diagonal; K_n(w, z) is the conjugate of
        K_n(z, w).
    """
    z, w = complex(z), complex(w)
    if z == 0 or w == 0:
        raise DomainError('The kernel is evaluated at non-zero points only')
    total = kernel_sum_exact(p, z * w.conjugate())
    log_mod = (_log_constant(p) + float(_log_half_prefactor(p, abs(z)))
               + float(_log_half_prefactor(p, abs(w))))
    return LogComplex(log_mod) * total


def log_kernel_diagonal(p, r):
    """ Natural log of the intensity K_n(z, z) at |z| = r.

    The diagonal depends on the modulus only.

    Parameters
    ----------
    p : EnsembleParams

    r : array_like
        Positive moduli.

    Returns
    -------
    log_intensity : numpy.ndarray
    """
    r = np.asarray(r, dtype=float)
    log_sum, _ = log_kernel_sum_grid(p, r * r)
    return _log_constant(p) + 2.0 * _log_half_prefactor(p, r) + log_sum


def log_kernel_modulus(p, r1, r2, angle):
    """ Natural log of |K_n(z, w)| for |z| = r1, |w| = r2 and
    arg z - arg w = angle. Arguments broadcast against each other.
    """
    r1, r2, angle = np.broadcast_arrays(np.asarray(r1, dtype=float),
                                        np.asarray(r2, dtype=float),
                                        np.asarray(angle, dtype=float))
    log_sum, _ = log_kernel_sum_grid(p, r1 * r2 * np.exp(1j * angle))
    return (_log_constant(p) + _log_half_prefactor(p, r1)
            + _log_half_prefactor(p, r2) + log_sum)


def tau_n(p, r, order=0):
    """ Phase function of the large-order Bessel asymptotics.

    tau_n(r) = sqrt(1 + r^2) - log(1 + sqrt(1 + r^2)) + log(1 + r^2) / (4v)
               - (2n + 1) / v * log r

    Parameters
    ----------
    p : EnsembleParams
        Ensemble with v >= 1.

    r : float or array_like
        Positive arguments.

    order : int
        0 for the function, 1 or 2 for its derivatives.

    Returns
    -------
    value : float or numpy.ndarray
    """
    if p.v < 1:
        raise DomainError('tau_n needs v >= 1')
    scalar = np.ndim(r) == 0
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise DomainError('tau_n needs r > 0')
    n, v = float(p.n), float(p.v)
    r2 = r * r
    root = np.sqrt(1.0 + r2)
    if order == 0:
        value = (root - np.log1p(root) + np.log1p(r2) / (4.0 * v)
                 - (2.0 * n + 1.0) / v * np.log(r))
    elif order == 1:
        value = (r / (1.0 + root) + r / (2.0 * v * (1.0 + r2))
                 - (2.0 * n + 1.0) / (v * r))
    elif order == 2:
        value = (1.0 / (root * (1.0 + root))
                 + (1.0 - r2) / (2.0 * v * (1.0 + r2) ** 2)
                 + (2.0 * n + 1.0) / (v * r2))
    else:
        raise DomainError('tau_n provides orders 0, 1 and 2 only')
    return float(value) if scalar else value


def kernel_asymptotic(p, z, w, q=None, regime=None):
    """ Large-n form of the kernel outside the edge.

    Parameters
    ----------
    p : EnsembleParams

    z, w : complex
        Points with |z|, |w| >= ((n+v)/n)^(1/4) (1 + q).

    q : float, optional
        Distance to the edge, `default_q(p)` when omitted.

    regime : {'small_v', 'tau'}, optional
        Which large-n form to use. By default 'small_v' when v <= log n and
        'tau' otherwise. Both may be requested explicitly in the overlap band.

    Returns
    -------
    value : LogComplex
    """
    n, v = p.n, p.v
    z, w = complex(z), complex(w)
    q = default_q(p) if q is None else float(q)
    bound = ((n + v) / float(n)) ** 0.25 * (1.0 + q)
    if min(abs(z), abs(w)) < bound * (1.0 - _BOUNDARY_SLACK):
        raise DomainError('Both points must satisfy |z| >= {}'.format(bound))
    if regime is None:
        regime = 'small_v' if v <= math.log(n) else 'tau'
    zw = z * w.conjugate()
    log_d, phase_d = _log_denominator(p, zw)
    phase = 2.0 * n * math.atan2(zw.imag, zw.real) - phase_d
    log_zw = math.log(abs(zw))
    if regime == 'small_v':
        log_mod = (math.log(2.0) + 0.5 * math.log(n) + (v + 0.5) * log_zw
                   + 2.0 * n * (1.0 + log_zw)
                   - n * (abs(z) ** 2 + abs(w) ** 2)
                   - 1.5 * math.log(math.pi) - log_d)
    elif regime == 'tau':
        if v < 1:
            raise DomainError('The tau_n form needs v >= 1')
        taus = tau_n(p, np.array([2.0 * n * abs(z) ** 2 / v,
                                  2.0 * n * abs(w) ** 2 / v]))
        log_mod = ((2.0 * n + v + 0.5) * math.log(v) + 2.0 * n + v
                   - 0.5 * v * (taus[0] + taus[1])
                   - 1.5 * math.log(math.pi)
                   - (2.0 * n + v - 0.5) * math.log(2.0)
                   - (n - 0.5) * math.log(n)
                   - (n + v + 0.5) * math.log(n + v) - log_d)
    else:
        raise DomainError('Unknown regime {!r}'.format(regime))
    return LogComplex(log_mod, phase)


Expansion = namedtuple('Expansion', 'exact approx deriv')


class PhaseFunctions(object):
    """ Threshold-dependent constants of the edge Laplace asymptotics.

    Parameters
    ----------
    params : EnsembleParams
        Ensemble with v >= 1.

    t : float
        Threshold parameter.

    Attributes
    ----------
    h : float
        h_n(t).

    kappa : float
        (2 sqrt(n(n+v)) / v) (1 + h)^2, the point where w is anchored.

    l_squared : float
        L_n(t)^2 = sqrt((n+v)/n) (1 + h)^2.
    """

    def __init__(self, params, t):
        if params.v < 1:
            raise DomainError('Phase functions need v >= 1')
        self.params = params
        self.t = float(t)
        self.constants = compute_constants(params)
        self.h = h_n(params, self.t)
        n, v = params.n, params.v
        self.kappa = 2.0 * math.sqrt(n * (n + v)) / v * (1.0 + self.h) ** 2
        self.l_squared = math.sqrt((n + v) / float(n)) * (1.0 + self.h) ** 2

    @property
    def kappa_right_of_minimum(self):
        """ True when tau_n is increasing at kappa. """
        return tau_n(self.params, self.kappa, order=1) > 0

    def __repr__(self):
        return '<PhaseFunctions n={} v={} t={}>'.format(
            self.params.n, self.params.v, self.t)


def tau_at_kappa_closed_form(pf):
    """ Closed form of v tau_n(kappa_n) up to o(1).

    2n + v + 2 s_n h^2 + log(v^(2n+v+1/2) / (2^(2n+v) (n+v)^(n+v) n^n
    sqrt(s_n)))
    """
    n, v = pf.params.n, pf.params.v
    s = pf.constants.s_n
    return (2.0 * n + v + 2.0 * s * pf.h ** 2
            + (2.0 * n + v + 0.5) * math.log(v)
            - (2.0 * n + v) * math.log(2.0)
            - (n + v) * math.log(n + v) - n * math.log(n)
            - 0.5 * math.log(s))


def w_expansion(pf, r):
    """ Exact w(r) = v tau_n(kappa (1 + r)) next to its quadratic expansion.

    Parameters
    ----------
    pf : PhaseFunctions
        Built for an ensemble with v > log n.

    r : float or array_like
        Non-negative offsets; the expansion is meant for
        r of order sqrt(log n / s_n).

    Returns
    -------
    expansion : Expansion
        `exact` w(r), `approx` the closed-form constant plus
        2 s_n h r + s_n r^2 / 2, and `deriv` the exact w'(r).
    """
    p = pf.params
    if p.v <= math.log(p.n):
        raise DomainError('w expansion needs v > log n')
    scalar = np.ndim(r) == 0
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError('w expansion needs r >= 0')
    s = pf.constants.s_n
    x = pf.kappa * (1.0 + r)
    exact = p.v * tau_n(p, x)
    deriv = p.v * pf.kappa * tau_n(p, x, order=1)
    approx = tau_at_kappa_closed_form(pf) + 2.0 * s * pf.h * r \
        + 0.5 * s * r * r
    if scalar:
        return Expansion(float(exact), float(approx), float(deriv))
    return Expansion(exact, approx, deriv)


def phi(p, x):
    """ phi(x) = 2x - (2 + (v + 1/2)/n) log x. """
    x = np.asarray(x, dtype=float)
    return 2.0 * x - (2.0 + (p.v + 0.5) / p.n) * np.log(x)


def phi_beta(pf, r):
    """ Exact n beta(r) = n phi(L_n^2 (1 + r)) next to its expansion.

    Parameters
    ----------
    pf : PhaseFunctions
        Built for an ensemble with 1 <= v <= log n.

    r : float or array_like
        Non-negative offsets.

    Returns
    -------
    expansion : Expansion
        `exact` n beta(r), `approx` 2n(1 + 2h^2 + 2hr + r^2/2) and `deriv`
        the exact n beta'(r).
    """
    p = pf.params
    if not 1 <= p.v <= math.log(p.n):
        raise DomainError('phi/beta need 1 <= v <= log n')
    scalar = np.ndim(r) == 0
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError('beta needs r >= 0')
    n, h = p.n, pf.h
    x = pf.l_squared * (1.0 + r)
    c = 2.0 + (p.v + 0.5) / n
    exact = n * phi(p, x)
    deriv = n * pf.l_squared * (2.0 - c / x)
    approx = 2.0 * n * (1.0 + 2.0 * h * h + 2.0 * h * r + 0.5 * r * r)
    if scalar:
        return Expansion(float(exact), float(approx), float(deriv))
    return Expansion(exact, approx, deriv)


def beta_second(pf, r):
    """ Exact n beta''(r) = (2n + v + 1/2) / (1 + r)^2. """
    r = np.asarray(r, dtype=float)
    value = (2.0 * pf.params.n + pf.params.v + 0.5) / (1.0 + r) ** 2
    return float(value) if value.ndim == 0 else value
