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
chiral_edge.quadrature
======================
**Traces, Hilbert-Schmidt norms and Fredholm determinants on A(t)**

The gap probability P(X_n <= t) is the Fredholm determinant of the kernel
restricted to the half-plane A(t) = {Re z >= L_n(t)}. It is approximated by
exp(-Tr) with the error bound

    |det(1 - K) - exp(-Tr)| <= ||K||_2 exp((||K||_2 + 1)^2 / 2 - Tr).

The diagonal of the kernel is radial, so the half-plane trace reduces exactly
to one radial integral weighted by the arc length of the circle inside A(t).
The squared Hilbert-Schmidt norm reduces to two radial integrals: |K(z, w)|^2
depends on the angles only through arg z - arg w, and the truncated sum is a
trigonometric polynomial in that difference, so the angular integrals are
done in closed form.

Radial integrals use the substitution r = L (1 + u^2), which removes the
square-root behaviour of the arc length at the boundary. The upper limit in u
is found by expanding a scan grid until the log integrand has fallen below
the tolerance with negative slope; the neglected tail is bounded by the last
value over the last slope and reported in the error estimate.
"""

import logging
import math
from collections import namedtuple

import numpy as np
from scipy import integrate
from scipy.signal import fftconvolve
from scipy.special import gammaln

from .exceptions import BudgetExceededError, DomainError
from .kernel import (_log_constant, _log_half_prefactor, log_kernel_diagonal,
                     log_kernel_sum_grid)
from .scaling import compute_constants, radius_threshold, threshold_L
from .settings import DEFAULT_REL_TOL, evaluation_budget
from .special_functions import gaussian_tail
from .utils import gauss_legendre

logger = logging.getLogger(__name__)

#: Largest n accepted by the Hilbert-Schmidt quadrature.
HS_MAX_N = 2000

#: Tightest tolerance accepted by the Hilbert-Schmidt quadrature.
HS_MIN_REL_TOL = 1e-4

#: Largest n accepted by the Nystrom determinant.
NYSTROM_MAX_N = 16

_SCAN_POINTS = 256
_SCAN_START = 1e-3
_SCAN_DOUBLINGS = 60

# Extra log-margin below the tolerance before the scan stops expanding
_TAIL_MARGIN = 10.0

# quad uses at most 21 evaluations per subinterval
_EVALS_PER_INTERVAL = 21


class QuadratureResult(namedtuple('QuadratureResult',
                                  'value abs_error_estimate evaluations '
                                  'log_value')):
    """ Result of a quadrature.

    `log_value` is the natural log of `value` and stays finite when `value`
    underflows to 0.
    """
    __slots__ = ()

    @classmethod
    def from_log(cls, log_value, rel_error, evaluations):
        value = math.exp(log_value) if log_value > -745.0 else 0.0
        return cls(value, abs(rel_error) * value, int(evaluations), log_value)

    @property
    def rel_error(self):
        if self.value == 0:
            return 0.0
        return self.abs_error_estimate / self.value


FredholmApprox = namedtuple('FredholmApprox',
                            'cdf error_bound trace hs_norm')

GaussianCheck = namedtuple('GaussianCheck', 'lhs rhs tail')


def _arc(u):
    # arccos(1 / (1 + u^2)) without cancellation near u = 0
    return np.arctan(u * np.sqrt(2.0 + u * u))


def _half_plane_integrand(p, lower):
    log_lower = math.log(lower)

    def log_integrand(u):
        u = np.asarray(u, dtype=float)
        r = lower * (1.0 + u * u)
        with np.errstate(divide='ignore'):
            # 2 arccos(L / r) r dr with dr = 2 L u du
            return (log_kernel_diagonal(p, r) + math.log(4.0) + np.log(r)
                    + np.log(_arc(u)) + log_lower + np.log(u))
    return log_integrand


def _disc_complement_integrand(p, lower):
    log_lower = math.log(lower)

    def log_integrand(u):
        u = np.asarray(u, dtype=float)
        r = lower * (1.0 + u * u)
        with np.errstate(divide='ignore'):
            # half circle pi r dr inside Re z > 0, dr = 2 L u du
            return (log_kernel_diagonal(p, r) + math.log(2.0 * math.pi)
                    + np.log(r) + log_lower + np.log(u))
    return log_integrand


Scan = namedtuple('Scan', 'upper log_peak peak_at log_tail evaluations')


def _scan(log_integrand, rel_tol):
    """ Expand [0, U] until the integrand has decayed past the tolerance.
    """
    upper = _SCAN_START
    evaluations = 0
    cutoff = math.log(rel_tol) - _TAIL_MARGIN
    for _ in range(_SCAN_DOUBLINGS):
        u = upper * np.arange(1, _SCAN_POINTS + 1) / float(_SCAN_POINTS)
        values = log_integrand(u)
        evaluations += u.size
        peak = int(np.argmax(values))
        log_peak = float(values[peak])
        slope = (values[-1] - values[-2]) / (u[-1] - u[-2])
        if values[-1] < log_peak + cutoff and slope < 0:
            log_tail = float(values[-1]) - log_peak - math.log(-slope)
            logger.debug('Scan stopped at U=%g, peak at u=%g', upper, u[peak])
            return Scan(upper, log_peak, float(u[peak]), log_tail,
                        evaluations)
        upper *= 2.0
    raise DomainError('Integrand does not decay on the scanned range')


def _radial_quadrature(log_integrand, rel_tol, budget):
    scan = _scan(log_integrand, rel_tol)

    def integrand(u):
        return math.exp(float(log_integrand(np.array([u]))[0]) - scan.log_peak)

    points = None
    if 0 < scan.peak_at < scan.upper:
        points = [scan.peak_at]
    limit = max(50, (budget - scan.evaluations) // _EVALS_PER_INTERVAL)
    out = integrate.quad(integrand, 0.0, scan.upper, epsabs=0.0,
                         epsrel=0.25 * rel_tol, limit=limit, points=points,
                         full_output=1)
    value, abs_error, info = out[0], out[1], out[2]
    evaluations = scan.evaluations + info['neval']
    tail = math.exp(scan.log_tail)
    rel_error = (abs_error + tail) / value
    log_value = scan.log_peak + math.log(value)
    if rel_error > rel_tol:
        if len(out) > 3 or evaluations > budget:
            partial = QuadratureResult.from_log(log_value, rel_error,
                                                evaluations)
            raise BudgetExceededError(
                'Tolerance {:g} not met after {} evaluations (reached {:g})'
                .format(rel_tol, evaluations, rel_error), partial=partial)
        # quad reported convergence but quad error plus tail misses rel_tol
        logger.warning('Tolerance %g not met after %d evaluations '
                       '(reached %g)', rel_tol, evaluations, rel_error)
    logger.debug('Radial quadrature: %d evaluations, rel. error %g',
                 evaluations, rel_error)
    return QuadratureResult.from_log(log_value, rel_error, evaluations)


def _check_tolerance(rel_tol):
    if not 1e-10 < rel_tol < 1e-2:
        raise DomainError('rel_tol must lie in (1e-10, 1e-2)')


def log_trace_threshold(p, threshold, rel_tol=DEFAULT_REL_TOL, budget=None):
    """ Trace of the kernel over {Re z >= threshold}.

    Parameters
    ----------
    p : EnsembleParams

    threshold : float
        Positive real-part threshold.

    rel_tol : float
        Relative tolerance.

    budget : int, optional
        Evaluation budget, `settings.evaluation_budget()` when omitted.

    Returns
    -------
    result : QuadratureResult
        `log_value` carries the trace when `value` underflows.
    """
    _check_tolerance(rel_tol)
    if not threshold > 0:
        raise DomainError('The threshold must be positive')
    if budget is None:
        budget = evaluation_budget()
    return _radial_quadrature(_half_plane_integrand(p, float(threshold)),
                              rel_tol, budget)


def _trace_planar(p, lower, rel_tol, budget):
    log_integrand = _half_plane_integrand(p, lower)
    scan = _scan(log_integrand, rel_tol)
    outer = lower * (1.0 + scan.upper ** 2)
    r = np.linspace(lower, outer, 1025)[1:]
    log_peak = float(np.max(log_kernel_diagonal(p, r)))
    calls = [0]

    def integrand(y, x):
        calls[0] += 1
        radius = math.hypot(x, y)
        return 2.0 * math.exp(float(log_kernel_diagonal(p, radius))
                              - log_peak)

    value, abs_error = integrate.dblquad(
        integrand, lower, outer, 0.0,
        lambda x: math.sqrt(max(outer * outer - x * x, 0.0)),
        epsabs=0.0, epsrel=0.25 * rel_tol)
    evaluations = scan.evaluations + calls[0]
    # The scan tail is relative to the radial peak, not the density peak
    tail = math.exp(scan.log_tail + scan.log_peak - log_peak)
    rel_error = (abs_error + tail) / value
    log_value = log_peak + math.log(value)
    if evaluations > budget:
        partial = QuadratureResult.from_log(log_value, rel_error, evaluations)
        raise BudgetExceededError('Planar quadrature used {} evaluations'
                                  .format(evaluations), partial=partial)
    return QuadratureResult.from_log(log_value, rel_error, evaluations)


def trace_quadrature(p, t, rel_tol=DEFAULT_REL_TOL, method='radial',
                     budget=None):
    """ Tr(K_n restricted to A(t)), the integral of K_n(z, z) over
    {Re z >= L_n(t)}.

    Parameters
    ----------
    p : EnsembleParams
        Ensemble with n >= 2.

    t : float
        Threshold parameter.

    rel_tol : float
        Relative tolerance in (1e-10, 1e-2).

    method : {'radial', 'planar'}
        'radial' integrates the exact one-dimensional reduction. 'planar'
        integrates over the half-plane in Cartesian coordinates with the
        y >= 0 half doubled; it is slow and meant as a cross-check at small n.

    budget : int, optional
        Evaluation budget.

    Returns
    -------
    result : QuadratureResult
    """
    _check_tolerance(rel_tol)
    if budget is None:
        budget = evaluation_budget()
    lower = threshold_L(p, t)
    if method == 'radial':
        return _radial_quadrature(_half_plane_integrand(p, lower), rel_tol,
                                  budget)
    elif method == 'planar':
        return _trace_planar(p, lower, rel_tol, budget)
    raise DomainError('Unknown quadrature method {!r}'.format(method))


def trace_radius_quadrature(p, t, rel_tol=DEFAULT_REL_TOL, budget=None):
    """ Trace of the kernel over {|z|^2 >= radius_threshold(p, t)}.

    Its exponential approximates P(X~_n <= t) for the spectral radius
    statistic.
    """
    _check_tolerance(rel_tol)
    if budget is None:
        budget = evaluation_budget()
    radius_sq = radius_threshold(p, t)
    if not radius_sq > 0:
        raise DomainError('t={} puts the radius threshold below zero'
                          .format(t))
    return _radial_quadrature(
        _disc_complement_integrand(p, math.sqrt(radius_sq)), rel_tol, budget)


def trace_asymptotic(p, t, s_n=None):
    """ Large-n trace exp(-t - (t - c_n)^2 / log s_n).

    Parameters
    ----------
    p : EnsembleParams

    t : float or array_like

    s_n : float, optional
        Synthetic effective size.

    Returns
    -------
    trace : float or numpy.ndarray
    """
    k = compute_constants(p, s_n)
    t = np.asarray(t, dtype=float)
    value = np.exp(-t - (t - k.c_n) ** 2 / math.log(k.s_n))
    return float(value) if value.ndim == 0 else value


def trace_laplace(p, t):
    """ Laplace approximation of the half-plane trace at the boundary point.

    Linearizing log K_n(z, z) = log K_n(L, L) - a (|z| - L) and
    |z| = x + y^2 / (2L) gives K_n(L, L) sqrt(2 pi L) a^(-3/2). This is the
    step the large-n trace formula is derived from; comparing the two
    isolates the finite-n defect of the remaining asymptotics.
    """
    lower = threshold_L(p, t)
    step = 1e-5 * lower
    log_density = log_kernel_diagonal(
        p, np.array([lower - step, lower, lower + step]))
    slope = -(log_density[2] - log_density[0]) / (2.0 * step)
    if not slope > 0:
        raise DomainError('The boundary of A(t) lies inside the bulk')
    return math.exp(log_density[1] + 0.5 * math.log(2.0 * math.pi * lower)
                    - 1.5 * math.log(slope))


def _angular_integral(p, log_rho, arc1, arc2):
    """ log of the integral of |S(rho e^(i(a - b)))|^2 over |a| <= arc1,
    |b| <= arc2, one entry per row.

    S(rho e^(i phi)) = sum_k c_k e^(2ik phi) so the integral is
    A_0 4 arc1 arc2 + 2 sum_{m>0} A_m sin(2m arc1) sin(2m arc2) / m^2 with
    A_m = sum_k c_k c_(k+m).
    """
    k = np.arange(p.n, dtype=float)
    log_c = (2.0 * k[None, :] * (math.log(p.n) + log_rho[:, None])
             - (gammaln(k + 1.0) + gammaln(k + p.v + 1.0))[None, :])
    log_max = np.max(log_c, axis=1)
    c = np.exp(log_c - log_max[:, None])
    autocorrelation = fftconvolve(c, c[:, ::-1], axes=1)[:, p.n - 1:]
    m = np.arange(1, p.n, dtype=float)
    weights = np.empty((log_rho.size, p.n))
    weights[:, 0] = 4.0 * arc1 * arc2
    weights[:, 1:] = 2.0 * np.sin(2.0 * m[None, :] * arc1[:, None]) \
        * np.sin(2.0 * m[None, :] * arc2[:, None]) / (m * m)[None, :]
    total = np.sum(autocorrelation * weights, axis=1)
    with np.errstate(divide='ignore', invalid='ignore'):
        return np.where(total > 0, 2.0 * log_max + np.log(total), -np.inf)


def _hs_level(p, lower, upper, panels, order):
    u, du = gauss_legendre(np.linspace(0.0, upper, panels + 1), order)
    r = lower * (1.0 + u * u)
    arc = _arc(u)
    # |K|^2 radial factors with r dr, dr = 2 L u du
    log_radial = (2.0 * _log_half_prefactor(p, r) + np.log(r)
                  + math.log(2.0 * lower) + np.log(u) + np.log(du))
    i, j = np.triu_indices(u.size)
    log_terms = np.empty(i.size)
    rows = max(1, 2 ** 21 // (2 * p.n))
    for start in range(0, i.size, rows):
        block = slice(start, start + rows)
        bi, bj = i[block], j[block]
        log_terms[block] = (log_radial[bi] + log_radial[bj]
                            + _angular_integral(p, np.log(r[bi] * r[bj]),
                                                arc[bi], arc[bj]))
    # off-diagonal pairs count twice
    log_terms[i != j] += math.log(2.0)
    peak = np.max(log_terms)
    total = np.sum(np.exp(log_terms - peak))
    return 2.0 * _log_constant(p) + peak + math.log(total), i.size


def hs_norm_quadrature(p, t, rel_tol=HS_MIN_REL_TOL, budget=None):
    """ Hilbert-Schmidt norm of the kernel restricted to A(t).

    Parameters
    ----------
    p : EnsembleParams
        Ensemble with n <= `HS_MAX_N`.

    t : float
        Threshold parameter.

    rel_tol : float
        Relative tolerance, at least `HS_MIN_REL_TOL`.

    budget : int, optional
        Budget in evaluated radius pairs.

    Returns
    -------
    result : QuadratureResult
        The norm, i.e. the square root of the double integral of
        |K_n(z, w)|^2 over A(t) x A(t).
    """
    if p.n > HS_MAX_N:
        raise DomainError('hs_norm_quadrature is limited to n <= {}'
                          .format(HS_MAX_N))
    if not HS_MIN_REL_TOL <= rel_tol < 1e-2:
        raise DomainError('rel_tol must lie in [{:g}, 1e-2)'
                          .format(HS_MIN_REL_TOL))
    if budget is None:
        budget = evaluation_budget()
    lower = threshold_L(p, t)
    scan = _scan(_half_plane_integrand(p, lower), rel_tol)
    evaluations = scan.evaluations
    order, panels = 8, 4
    previous = None
    while True:
        log_sq, pairs = _hs_level(p, lower, scan.upper, panels, order)
        evaluations += pairs
        if previous is not None:
            change = abs(math.expm1(0.5 * (log_sq - previous)))
            logger.debug('HS norm with %d panels: change %g', panels, change)
            if change < rel_tol:
                tail = 2.0 * math.exp(0.5 * scan.log_tail)
                return QuadratureResult.from_log(0.5 * log_sq, change + tail,
                                                 evaluations)
            if evaluations > budget:
                partial = QuadratureResult.from_log(0.5 * log_sq, change,
                                                    evaluations)
                raise BudgetExceededError(
                    'HS norm did not converge within {} pair evaluations'
                    .format(budget), partial=partial)
        previous = log_sq
        panels *= 2


def fredholm_cdf_approx(p, t, rel_tol=DEFAULT_REL_TOL, budget=None,
                        trace=None):
    """ exp(-Tr) approximation of P(X_n <= t) with its error bound.

    A `trace` already computed by `trace_quadrature` at the same t is reused.

    Returns
    -------
    approx : FredholmApprox
        `cdf` = exp(-Tr) and
        `error_bound` = ||K||_2 exp((||K||_2 + 1)^2 / 2 - Tr), next to the
        trace and norm they are assembled from.
    """
    if trace is None:
        trace = trace_quadrature(p, t, rel_tol, budget=budget)
    hs = hs_norm_quadrature(p, t, max(rel_tol, HS_MIN_REL_TOL),
                            budget=budget)
    cdf = math.exp(-trace.value)
    bound = hs.value * math.exp(0.5 * (hs.value + 1.0) ** 2 - trace.value)
    return FredholmApprox(cdf, bound, trace, hs)


def _kernel_matrix(p, z):
    zeta = z[:, None] * np.conj(z)[None, :]
    log_sum, phase = log_kernel_sum_grid(p, zeta)
    log_half = _log_half_prefactor(p, np.abs(z))
    log_mod = _log_constant(p) + log_half[:, None] + log_half[None, :] \
        + log_sum
    return np.exp(log_mod + 1j * phase)


def _nystrom_level(p, lower, upper, nodes):
    u, du = gauss_legendre(np.linspace(0.0, upper, nodes // 8 + 1), 8)
    r = lower * (1.0 + u * u)
    arc = _arc(u)
    s, ds = gauss_legendre(np.linspace(-1.0, 1.0, nodes // 8 + 1), 8)
    theta = arc[:, None] * s[None, :]
    weights = (r * 2.0 * lower * u * du * arc)[:, None] * ds[None, :]
    z = (r[:, None] * np.exp(1j * theta)).ravel()
    root = np.sqrt(weights.ravel())
    matrix = root[:, None] * _kernel_matrix(p, z) * root[None, :]
    eigenvalues = np.linalg.eigvalsh(matrix)
    return float(np.prod(1.0 - eigenvalues))


def fredholm_nystrom(p, t, tol=1e-4, rel_tol=1e-8, max_nodes=32):
    """ Fredholm determinant det(1 - K_n on A(t)) by Nystrom discretization.

    A(t) is covered by a polar grid: Gauss-Legendre nodes in u with
    r = L (1 + u^2), and for each radius Gauss-Legendre nodes across the
    arc inside A(t). The grid is doubled until the determinant moves by
    less than `tol`.

    Parameters
    ----------
    p : EnsembleParams
        Ensemble with n <= `NYSTROM_MAX_N`.

    t : float
        Threshold parameter.

    tol : float
        Absolute convergence tolerance on the determinant.

    rel_tol : float
        Tolerance of the radial truncation.

    max_nodes : int
        Largest number of nodes per direction.

    Returns
    -------
    det : float
        Approximation of P(X_n <= t).
    """
    if p.n > NYSTROM_MAX_N:
        raise DomainError('fredholm_nystrom is limited to n <= {}'
                          .format(NYSTROM_MAX_N))
    lower = threshold_L(p, t)
    scan = _scan(_half_plane_integrand(p, lower), rel_tol)
    nodes = 8
    previous = _nystrom_level(p, lower, scan.upper, nodes)
    while nodes < max_nodes:
        nodes *= 2
        det = _nystrom_level(p, lower, scan.upper, nodes)
        logger.debug('Nystrom with %d nodes per direction: %g', nodes, det)
        if abs(det - previous) < tol:
            return det
        previous = det
    raise BudgetExceededError('Nystrom determinant did not settle with {} '
                              'nodes per direction'.format(max_nodes),
                              partial=previous)


def verify_gaussian_integral(n, u_n, delta_n, c1, c2, k, h_n):
    """ Gaussian integral with quartic damping and an algebraic factor.

    Parameters
    ----------
    n : int
        Size parameter entering the quartic term c1 n y^4.

    u_n : float
        Positive curvature.

    delta_n : float
        Upper limit, may be `numpy.inf`.

    c1, c2, k, h_n : float
        Non-negative damping constant, positive scale, non-negative exponent
        and positive distance to the edge.

    Returns
    -------
    check : GaussianCheck
        `lhs` the integral of exp(-u y^2 - c1 n y^4) (1 + y^2/(c2 h))^(-k)
        over [0, delta_n], `rhs` = sqrt(pi) / (2 sqrt(u)) and `tail` the
        integral of exp(-u y^2) over [delta_n, inf).
    """
    if not (u_n > 0 and delta_n > 0 and c2 > 0 and h_n > 0):
        raise DomainError('u_n, delta_n, c2 and h_n must be positive')
    if c1 < 0 or k < 0:
        raise DomainError('c1 and k must be non-negative')

    def integrand(y):
        y2 = y * y
        return math.exp(-u_n * y2 - c1 * n * y2 * y2) \
            * (1.0 + y2 / (c2 * h_n)) ** (-k)

    lhs, _ = integrate.quad(integrand, 0.0, delta_n, epsabs=0.0,
                            epsrel=1e-12, limit=200)
    rhs = math.sqrt(math.pi) / (2.0 * math.sqrt(u_n))
    return GaussianCheck(lhs, rhs, gaussian_tail(u_n, delta_n))
