#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Author: The chiral-edge developers

import math

import mpmath
import numpy as np
import pytest
from scipy import special

from ..exceptions import DomainError
from ..special_functions import *


def test_log_gamma_values():
    """ Test log_gamma at hand-computable points
    """
    assert log_gamma(1.0) == pytest.approx(0.0, abs=1e-15)
    assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-13)
    assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi),
                                           rel=1e-13)


def test_log_gamma_recurrence():
    """ Test log Gamma(x + 1) = log Gamma(x) + log x
    """
    x = np.random.default_rng(1).uniform(1e-3, 1e6, size=10000)
    np.testing.assert_allclose(log_gamma(x + 1.0), log_gamma(x) + np.log(x),
                               rtol=1e-12, atol=1e-12)


def test_log_gamma_oracle():
    """ Test log_gamma against arbitrary precision
    """
    for x in np.geomspace(1e-3, 1e8, 25):
        expected = float(mpmath.loggamma(mpmath.mpf(x)))
        assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_log_gamma_domain():
    """ Test log_gamma rejects non-positive and non-finite arguments
    """
    for x in (0.0, -1.0, float('inf'), float('nan')):
        pytest.raises(DomainError, log_gamma, x)


def test_log_bessel_k_half_integer():
    """ Test log_bessel_k against closed forms at half-integer orders
    """
    x = np.array([0.3, 1.0, 7.5, 40.0])
    base = 0.5 * np.log(np.pi / (2.0 * x)) - x
    np.testing.assert_allclose(log_bessel_k(0.5, x), base, rtol=1e-13)
    np.testing.assert_allclose(log_bessel_k(1.5, x),
                               base + np.log1p(1.0 / x), rtol=1e-12)
    np.testing.assert_allclose(log_bessel_k(2.5, x),
                               base + np.log(1.0 + 3.0 / x + 3.0 / x ** 2),
                               rtol=1e-12)
    assert log_bessel_k(0.5, 1.0) == pytest.approx(-0.7742087, abs=1e-7)


def test_log_bessel_k_large_argument():
    """ Test the large-argument law for small orders
    """
    assert abs(log_bessel_k(0, 100.0)
               - (0.5 * math.log(math.pi / 200.0) - 100.0)) < 1e-2
    for v in range(6):
        for x in (50.0, 100.0, 300.0, 1e3):
            leading = 0.5 * math.log(math.pi / (2.0 * x)) - x
            assert abs(log_bessel_k(v, x) - leading) <= 2.0 * v * v / x \
                + 1.0 / x
    far = 0.5 * math.log(math.pi / 2e9) - 1e9
    assert log_bessel_k(0, 1e9) == pytest.approx(far, abs=1e-5)
    assert log_bessel_k(0, 1e9) < -1e9 - 10.0


def test_log_bessel_k_recurrence():
    """ Test K_(v+1) = K_(v-1) + (2v/x) K_v in the log domain
    """
    x = np.linspace(1.0, 100.0, 34)
    for v in range(1, 50):
        lhs = log_bessel_k(v + 1, x)
        rhs = np.logaddexp(log_bessel_k(v - 1, x),
                           np.log(2.0 * v / x) + log_bessel_k(v, x))
        np.testing.assert_allclose(lhs, rhs, rtol=1e-8)


def test_log_bessel_k_large_order():
    """ Test the uniform expansion at order 1000 against scipy
    """
    v = 1000.0
    assert log_bessel_k(v, 500.0) == pytest.approx(
        math.log(special.kv(v, 500.0)), rel=1e-10)
    assert log_bessel_k(v, 2000.0) == pytest.approx(
        math.log(special.kve(v, 2000.0)) - 2000.0, rel=1e-10)


def test_log_bessel_k_order_switch():
    """ Test both evaluation strategies agree around the switch order
    """
    x = np.array([5.0, 50.0, 500.0])
    for v in (RECURRENCE_MAX_ORDER, RECURRENCE_MAX_ORDER + 1):
        np.testing.assert_allclose(log_bessel_k(v, x),
                                   np.log(special.kv(v, x)), rtol=1e-10)


def test_log_bessel_k_domain():
    """ Test log_bessel_k domain errors
    """
    pytest.raises(DomainError, log_bessel_k, 0, 0.0)
    pytest.raises(DomainError, log_bessel_k, 0, -1.0)
    pytest.raises(DomainError, log_bessel_k, -0.5, 1.0)


def test_log_bessel_k_shape():
    """ Test scalars stay scalars and arrays keep their shape
    """
    assert isinstance(log_bessel_k(1, 2.0), float)
    assert log_bessel_k(1, np.ones((3, 2))).shape == (3, 2)


def test_gumbel_cdf():
    """ Test Gumbel distribution values and limits
    """
    assert gumbel_cdf(0.0) == pytest.approx(math.exp(-1.0), rel=1e-15)
    assert abs(gumbel_cdf(40.0) - 1.0) < 1e-15
    low = gumbel_cdf(-5.0)
    assert 0.0 <= low < 1e-60
    grid = np.linspace(-10.0, 40.0, 501)
    assert np.all(np.diff(gumbel_cdf(grid)) >= 0)
    assert gumbel_ppf(gumbel_cdf(1.25)) == pytest.approx(1.25, rel=1e-12)


def test_gaussian_tail():
    """ Test the Gaussian tail integral
    """
    assert gaussian_tail(4.0, 0.0) == pytest.approx(math.sqrt(math.pi) / 4.0,
                                                    rel=1e-15)
    assert gaussian_tail(4.0, float('inf')) == 0.0
    assert gaussian_tail(1.0, 1.0) == pytest.approx(
        0.5 * math.sqrt(math.pi) * math.erfc(1.0), rel=1e-14)
    pytest.raises(DomainError, gaussian_tail, 0.0, 1.0)
