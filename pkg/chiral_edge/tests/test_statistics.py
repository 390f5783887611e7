#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Author: The chiral-edge developers

import math

import numpy as np
import pytest

from ..exceptions import DomainError
from ..sampler import McRun
from ..scaling import EnsembleParams, compute_constants
from ..special_functions import gumbel_cdf, gumbel_ppf
from ..statistics import *


def test_ecdf_summary():
    """ Test the empirical distribution function
    """
    e = EcdfSummary.from_values([3.0, 2.0, 1.0, 2.0])
    assert e.count == 4
    assert list(e.sorted_values) == [1.0, 2.0, 2.0, 3.0]
    assert e(2.0) == 0.75
    assert e(0.0) == 0.0
    assert e(10.0) == 1.0
    pytest.raises(DomainError, EcdfSummary.from_values, [])
    pytest.raises(DomainError, EcdfSummary.from_values, [1.0, float('nan')])


def test_ks_quantile_sample():
    """ Test KS distance of mid-quantiles is half a step
    """
    count = 1000
    values = gumbel_ppf((np.arange(count) + 0.5) / count)
    distance = ks_distance(EcdfSummary.from_values(values), gumbel_cdf)
    assert distance <= 1.0 / count
    assert distance == pytest.approx(0.5 / count, rel=1e-6)


def test_ks_single_value():
    """ Test KS distance of a single sample at the median
    """
    median = -math.log(math.log(2.0))
    distance = ks_distance(EcdfSummary.from_values([median]), gumbel_cdf)
    assert distance == pytest.approx(0.5, abs=1e-12)


def test_ks_monotone_invariance():
    """ Test KS distance is invariant under increasing maps
    """
    values = np.random.default_rng(3).gumbel(size=500) + 0.2
    base = ks_distance(EcdfSummary.from_values(values), gumbel_cdf)
    maps = [(lambda x: 2.0 * x + 1.0, lambda y: (y - 1.0) / 2.0),
            (lambda x: 0.1 * x - 5.0, lambda y: (y + 5.0) / 0.1),
            (lambda x: 7.0 * x, lambda y: y / 7.0),
            (lambda x: x + 100.0, lambda y: y - 100.0),
            (lambda x: 3.0 * x - 2.0, lambda y: (y + 2.0) / 3.0),
            (lambda x: 0.5 * x, lambda y: 2.0 * y),
            (lambda x: 1.5 * x + 0.25, lambda y: (y - 0.25) / 1.5),
            (np.exp, np.log),
            (np.sinh, np.arcsinh),
            (lambda x: x ** 3, np.cbrt)]
    for forward, inverse in maps:
        mapped = ks_distance(EcdfSummary.from_values(forward(values)),
                             lambda y, inverse=inverse: gumbel_cdf(inverse(y)))
        assert mapped == pytest.approx(base, abs=1e-12)


def test_gumbel_reference_sample():
    """ Test the low-discrepancy Gumbel sample
    """
    count = 10000
    values = gumbel_reference_sample(count)
    assert values.shape == (count,)
    assert np.all(np.isfinite(values))
    distance = ks_distance(EcdfSummary.from_values(values), gumbel_cdf)
    assert distance <= 2.0 / math.sqrt(count)
    pytest.raises(DomainError, gumbel_reference_sample, 0)


def test_be_leading_term():
    """ Test the leading Berry-Esseen term
    """
    assert be_leading_term(EnsembleParams(100, 0)) == pytest.approx(
        0.30164, abs=1e-4)
    p = EnsembleParams(2, 0)
    assert be_leading_term(p, math.exp(math.e)) == pytest.approx(
        25.0 / (16.0 * math.e ** 2), rel=1e-12)
    assert 0 < be_leading_term(p, math.e * (1.0 + 1e-8)) < 1e-15
    pytest.raises(DomainError, be_leading_term, p, math.e)
    values = [be_leading_term(EnsembleParams(n, 0))
              for n in (1000, 3000, 10000, 100000, 1000000)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_be_leading_term_radius():
    """ Test the spectral radius leading term
    """
    p = EnsembleParams(100, 0)
    log_s = math.log(50.0)
    assert be_leading_term_radius(p) == pytest.approx(
        math.log(log_s) ** 2 / (2.0 * math.e * log_s), rel=1e-12)
    pytest.raises(DomainError, be_leading_term_radius, EnsembleParams(4, 0))


def test_be_grid():
    """ Test the Berry-Esseen threshold grid
    """
    p = EnsembleParams(1000, 0)
    grid = be_grid(p)
    k = compute_constants(p)
    assert grid[0] == pytest.approx(-0.25 * math.log(math.log(1000)))
    assert grid[-1] == pytest.approx(math.log(math.log(k.s_n)))
    assert np.max(np.diff(grid)) <= MAX_GRID_STEP * (1.0 + 1e-9)
    synthetic = be_grid(p, 1e8)
    assert synthetic[0] == pytest.approx(-0.25 * math.log(math.log(5e7)))


def test_be_measured_ratio():
    """ Test the measured Gumbel defect against the leading term
    """
    p = EnsembleParams(2, 0)
    ratios = []
    for s_n in (1e4, 1e8, 1e12):
        lead = be_leading_term(p, s_n)
        measured = be_measured_asymptotic(p, s_n=s_n)
        ratio = measured.sup_distance / lead
        assert 1.5 <= ratio <= 3.0
        grid = be_grid(p, s_n)
        assert grid[0] <= measured.argmax_t <= grid[-1]
        ratios.append(ratio)
    assert ratios[2] < ratios[0]


def test_be_linearized():
    """ Test the linearized defect at large s_n
    """
    p = EnsembleParams(2, 0)
    s_n = 1e12
    k = compute_constants(p, s_n)
    measured = be_measured_asymptotic(p, s_n=s_n, mode='linearized')
    reference = k.c_n ** 2 / (math.e * math.log(s_n))
    assert abs(measured.sup_distance / reference - 1.0) <= 0.2
    assert measured.argmax_t < k.c_n


def test_be_grid_validation():
    """ Test malformed grids are rejected
    """
    p = EnsembleParams(100, 0)
    pytest.raises(DomainError, be_measured_asymptotic, p,
                  np.array([0.0, 0.05]))
    pytest.raises(DomainError, be_measured_asymptotic, p,
                  np.array([0.01, 0.0]))
    pytest.raises(DomainError, be_measured_asymptotic, p, np.array([0.0]))
    pytest.raises(DomainError, be_measured_asymptotic, p, None, None,
                  'other')


def test_be_measured_empirical():
    """ Test the empirical Berry-Esseen distance on an exact Gumbel run
    """
    count = 10000
    run = McRun(EnsembleParams(100, 0), count, 0,
                gumbel_reference_sample(count), np.full(count, np.nan),
                np.zeros(count), np.zeros(count))
    assert be_measured_empirical(run) <= 2.0 / math.sqrt(count)


def test_mc_standard_error():
    """ Test the Monte Carlo standard error
    """
    assert mc_standard_error(0.5, 100) == pytest.approx(0.05)
    assert mc_standard_error(0.0, 10) == 0.0
    pytest.raises(DomainError, mc_standard_error, 1.5, 10)
    pytest.raises(DomainError, mc_standard_error, 0.5, 0)
