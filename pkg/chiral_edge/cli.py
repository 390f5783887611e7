#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright 2026 The chiral-edge developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations under
# the License.
"""
Command Line Interface
======================
**chiral-edge subcommands**

Each `cmd_*` function takes a `RunConfig` and returns the `ResultFile` it
produced and whether every row completed.
"""

import argparse
import logging
import math
import sys

import numpy as np

from .common import ResultFile, dumps, write
from .deviations import (AlphaParam, empirical_ldp, empirical_moderate,
                         rate_J, rate_moderate)
from .exceptions import (BudgetExceededError, ChiralEdgeError,
                         ConfigurationError, DomainError)
from .kernel import (kernel_asymptotic, kernel_exact, kernel_sum_asymptotic,
                     kernel_sum_exact, default_q)
from .quadrature import (HS_MAX_N, fredholm_cdf_approx, trace_asymptotic,
                         trace_laplace, trace_quadrature,
                         verify_gaussian_integral)
from .sampler import run_monte_carlo
from .scaling import EnsembleParams, compute_constants
from .settings import COMMANDS, FORMATS, RunConfig
from .special_functions import gumbel_cdf
from .statistics import (EcdfSummary, be_leading_term, be_measured_asymptotic,
                         be_measured_empirical, ks_distance, mc_standard_error)

logger = logging.getLogger(__name__)

LOG_FORMAT = '[chiral-edge] %(levelname)s %(name)s: %(message)s'

NAN = float('nan')

# Subcommand specific defaults
DEFAULTS = {
    'sample': {'n': [200]},
    'trace': {'n': [200]},
    'bes': {'n': [100, 1000, 10000]},
    'ldp': {'n': [200, 500], 't_min': 1.3, 't_max': 2.0, 't_step': 0.1,
            'alpha': [0.0, 1.0]},
    'kernel-check': {'n': [100, 1000, 10000]},
    'gauss-check': {'n': [1000, 10000, 100000]},
}


def cmd_sample(config):
    """ Monte Carlo rows (n, replicate, max_re, max_abs, x, x_radius) and a
    summary table with the Kolmogorov-Smirnov distances to Gumbel.
    """
    if config.replicates < 1:
        raise ConfigurationError('sample needs --replicates >= 1')
    result = ResultFile(config)
    rows = result.add_table('replicates', ['n', 'replicate', 'max_re',
                                           'max_abs', 'x', 'x_radius'])
    summary = result.add_table('summary', ['n', 'v', 'replicates', 'ks_x',
                                           'ks_radius', 'mean_x'])
    for n in config.n:
        p = EnsembleParams(n, config.v)
        run = run_monte_carlo(p, config.replicates, config.seed,
                              config.workers)
        for index in range(run.replicates):
            rows.append([n, index, float(run.max_re[index]),
                         float(run.max_abs[index]),
                         float(run.x_values[index]),
                         float(run.radius_values[index])])
        if np.all(np.isfinite(run.radius_values)):
            ks_radius = ks_distance(
                EcdfSummary.from_values(run.radius_values), gumbel_cdf)
        else:
            ks_radius = NAN
        summary.append([n, config.v, run.replicates,
                        be_measured_empirical(run), ks_radius,
                        float(np.mean(run.x_values))])
    return result, True


def cmd_trace(config):
    """ Trace, Hilbert-Schmidt norm and Fredholm rows over the t grid, with
    Monte Carlo frequencies when replicates are requested.
    """
    result = ResultFile(config)
    table = result.add_table('trace', [
        'n', 'v', 't', 'trace_quad', 'trace_asym', 'ratio', 'trace_laplace',
        'hs_norm', 'fredholm_cdf', 'e2_bound', 'gumbel_cdf', 'mc_cdf',
        'mc_se', 'status'])
    complete = True
    for n in config.n:
        p = EnsembleParams(n, config.v)
        run = None
        if config.replicates > 0:
            run = run_monte_carlo(p, config.replicates, config.seed,
                                  config.workers)
        for t in config.t_grid:
            t = float(t)
            status = 'ok'
            hs, cdf, bound = NAN, NAN, NAN
            try:
                trace = trace_quadrature(p, t, config.rel_tol)
                trace_value = trace.value
                cdf = math.exp(-trace_value)
                if n <= HS_MAX_N:
                    approx = fredholm_cdf_approx(p, t, config.rel_tol,
                                                 trace=trace)
                    hs, bound = approx.hs_norm.value, approx.error_bound
            except BudgetExceededError as error:
                logger.warning('n=%d t=%g: %s', n, t, error)
                complete = False
                status = 'budget'
                if math.isnan(cdf) and error.partial is not None:
                    trace_value = error.partial.value
                elif math.isnan(cdf):
                    trace_value = NAN
            asym = trace_asymptotic(p, t)
            try:
                laplace = trace_laplace(p, t)
            except DomainError:
                laplace = NAN
            mc_cdf, mc_se = NAN, NAN
            if run is not None:
                mc_cdf = float(np.mean(run.x_values <= t))
                mc_se = mc_standard_error(mc_cdf, run.replicates)
            table.append([n, config.v, t, trace_value, asym,
                          trace_value / asym, laplace, hs, cdf, bound,
                          float(gumbel_cdf(t)), mc_cdf, mc_se, status])
    return result, complete


def cmd_bes(config):
    """ Berry-Esseen rows over an n sweep or a synthetic s_n sweep. """
    result = ResultFile(config)
    table = result.add_table('bes', [
        'n', 's_n', 'be_leading_term', 'be_measured_asymptotic', 'ratio',
        'argmax_t', 'be_linearized', 'be_empirical'])
    if config.synthetic_sn:
        p = EnsembleParams(config.n[0], config.v)
        points = [(p, s_n) for s_n in config.synthetic_sn]
    else:
        points = [(EnsembleParams(n, config.v), None) for n in config.n]
    for p, s_n in points:
        lead = be_leading_term(p, s_n)
        exact = be_measured_asymptotic(p, s_n=s_n)
        linear = be_measured_asymptotic(p, s_n=s_n, mode='linearized')
        empirical = NAN
        if config.replicates > 0 and s_n is None:
            run = run_monte_carlo(p, config.replicates, config.seed,
                                  config.workers)
            empirical = be_measured_empirical(run)
        table.append([p.n, compute_constants(p, s_n).s_n, lead,
                      exact.sup_distance, exact.sup_distance / lead,
                      exact.argmax_t, linear.sup_distance, empirical])
    return result, True


def cmd_ldp(config):
    """ Large deviation rows (t, rate_J, empirical_ldp, defect) per alpha and
    n, and the moderate deviation table.
    """
    result = ResultFile(config)
    table = result.add_table('ldp', ['alpha', 'n', 'v', 't', 'rate_J',
                                     'empirical_ldp', 'defect', 'status'])
    moderate = result.add_table('moderate', ['alpha', 'n', 'v', 'd_n', 't',
                                             'rate_moderate',
                                             'empirical_moderate'])
    grid = config.t_grid
    if np.any(grid <= 1):
        raise DomainError('Large deviation thresholds must exceed 1 '
                          '(got t_min={})'.format(config.t_min))
    complete = True
    for alpha in config.alpha:
        a = AlphaParam(alpha)
        for n in config.n:
            v = None if a.is_infinite else int(round(a.alpha * n))
            p = None if v is None else EnsembleParams(n, v)
            for t in grid:
                t = float(t)
                rate = rate_J(a, t)
                status = 'ok'
                empirical = NAN
                if p is not None:
                    try:
                        empirical = empirical_ldp(p, t, config.rel_tol)
                    except BudgetExceededError as error:
                        logger.warning('alpha=%g n=%d t=%g: %s', alpha, n, t,
                                       error)
                        complete = False
                        status = 'budget'
                table.append([alpha, n, -1 if v is None else v, t, rate,
                              empirical, empirical - rate, status])
                d_n = config.d_n if config.d_n is not None else n ** -0.25
                empirical_mod = NAN
                if p is not None:
                    try:
                        empirical_mod = empirical_moderate(p, t, d_n,
                                                           config.rel_tol)
                    except BudgetExceededError as error:
                        logger.warning('moderate t=%g: %s', t, error)
                        complete = False
                moderate.append([alpha, n, -1 if v is None else v, d_n, t,
                                 rate_moderate(a, t), empirical_mod])
    return result, complete


def _defect(approx, exact):
    return abs((approx / exact).to_complex() - 1.0)


def cmd_kernel_check(config):
    """ Defects of the large-n sum and kernel forms at the edge boundary,
    for v = --v and v = n.
    """
    result = ResultFile(config)
    table = result.add_table('kernel', [
        'n', 'v', 'q', 'sum_defect', 'sum_defect_log_n', 'regime',
        'kernel_defect', 'kernel_defect_log_n'])
    for n in config.n:
        for v in sorted(set([config.v, n])):
            p = EnsembleParams(n, v)
            q = default_q(p) if config.q is None else config.q
            zw = math.sqrt((n + v) / float(n)) * (1.0 + q)
            sum_defect = _defect(kernel_sum_asymptotic(p, zw, q),
                                 kernel_sum_exact(p, zw))
            z = ((n + v) / float(n)) ** 0.25 * (1.0 + q)
            regime = 'small_v' if v <= math.log(n) else 'tau'
            kernel_defect = _defect(kernel_asymptotic(p, z, z, q, regime),
                                    kernel_exact(p, z, z))
            table.append([n, v, q, sum_defect, sum_defect * math.log(n),
                          regime, kernel_defect,
                          kernel_defect * math.log(n)])
    return result, True


def cmd_gauss_check(config):
    """ Gaussian integral rows with u = sqrt(n log n),
    delta = (log n / n)^(1/4), h = sqrt(log n / n) and c1 = c2 = k = 1.
    """
    result = ResultFile(config)
    table = result.add_table('gauss', [
        'n', 'u_n', 'delta_n', 'lhs', 'rhs', 'defect', 'defect_log_n',
        'tail', 'tail_ratio'])
    for n in config.n:
        log_n = math.log(n)
        u_n = math.sqrt(n * log_n)
        delta_n = (log_n / n) ** 0.25
        check = verify_gaussian_integral(n, u_n, delta_n, 1.0, 1.0, 1.0,
                                         math.sqrt(log_n / n))
        defect = abs(check.lhs / check.rhs - 1.0)
        table.append([n, u_n, delta_n, check.lhs, check.rhs, defect,
                      defect * log_n, check.tail,
                      check.tail * math.sqrt(u_n) * log_n])
    return result, True


COMMAND_FUNCTIONS = {
    'sample': cmd_sample,
    'trace': cmd_trace,
    'bes': cmd_bes,
    'ldp': cmd_ldp,
    'kernel-check': cmd_kernel_check,
    'gauss-check': cmd_gauss_check,
}


def _common_arguments():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--n', type=int, nargs='+',
                        help='Matrix half-sizes.')
    parser.add_argument('--v', type=int, default=0,
                        help='Rectangularity.')
    parser.add_argument('--t-min', type=float, help='First threshold.')
    parser.add_argument('--t-max', type=float, help='Last threshold.')
    parser.add_argument('--t-step', type=float, help='Threshold spacing.')
    parser.add_argument('--replicates', type=int, default=0,
                        help='Monte Carlo replicates.')
    parser.add_argument('--seed', type=int,
                        help='Master seed, required whenever sampling.')
    parser.add_argument('--rel-tol', type=float, default=1e-6,
                        help='Relative tolerance of the quadratures.')
    parser.add_argument('--workers', type=int, default=1,
                        help='Worker processes.')
    parser.add_argument('--out', '-o', type=str,
                        help='Output file, stdout by default.')
    parser.add_argument('--format', choices=FORMATS, default='csv',
                        help='Output format.')
    parser.add_argument('--synthetic-sn', type=float, nargs='+', default=[],
                        help='Imposed values of s_n for bes.')
    parser.add_argument('--alpha', type=float, nargs='+',
                        help='Values of v/n for ldp, inf allowed.')
    parser.add_argument('--d-n', type=float,
                        help='Moderate deviation scale, n^(-1/4) by '
                             'default.')
    parser.add_argument('--q', type=float,
                        help='Distance to the edge for kernel-check.')
    parser.add_argument('--verbose', '-v', action='store_true',
                        default=False, help='Log debug messages.')
    parser.add_argument('--quiet', '-q', action='store_true',
                        default=False, help='Only log errors.')
    return parser


def build_parser():
    parser = argparse.ArgumentParser(
        description='Edge statistics of the chiral non-Hermitian Dirac '
                    'ensemble',
        prog='chiral-edge'
    )
    subparsers = parser.add_subparsers(dest='command')
    common = _common_arguments()
    for command in COMMANDS:
        subparsers.add_parser(command, parents=[common],
                              help=COMMAND_FUNCTIONS[command].__doc__
                              .strip().split('\n')[0])
    return parser


def config_from_args(args):
    values = dict(DEFAULTS[args.command])
    for key in ('n', 't_min', 't_max', 't_step', 'alpha', 'd_n', 'q'):
        value = getattr(args, key)
        if value is not None:
            values[key] = value
    return RunConfig(command=args.command, v=args.v,
                     replicates=args.replicates, seed=args.seed,
                     rel_tol=args.rel_tol, workers=args.workers,
                     out=args.out, format=args.format,
                     synthetic_sn=args.synthetic_sn, **values)


def run(config):
    """ Run a configured subcommand and emit its output.

    Returns
    -------
    complete : bool
        False when some rows ran out of evaluation budget.
    """
    result, complete = COMMAND_FUNCTIONS[config.command](config)
    if config.out is None:
        sys.stdout.write(dumps(result, config.format))
    else:
        write(result, config.out, config.format)
    return complete


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2

    level = logging.WARNING
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.ERROR
    logging.basicConfig(format=LOG_FORMAT, level=level)

    try:
        config = config_from_args(args)
        complete = run(config)
    except ChiralEdgeError as error:
        logger.error('%s', error)
        return 2
    return 0 if complete else 1
