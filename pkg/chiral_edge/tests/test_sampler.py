#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Author: The chiral-edge developers

import math

import numpy as np
import pytest

from ..exceptions import DomainError, SamplingError
from ..quadrature import fredholm_cdf_approx
from ..sampler import *
from ..scaling import EnsembleParams, x_transform
from ..special_functions import gumbel_cdf
from ..statistics import EcdfSummary, ks_distance, mc_standard_error


def _match(first, second, tol):
    distance = np.abs(first[:, None] - second[None, :])
    return np.all(distance.min(axis=1) <= tol) and \
        np.all(distance.min(axis=0) <= tol)


def test_fold_roots():
    """ Test the square root branch choice
    """
    mu = np.array([-4 + 0j, complex(-4.0, -0.0), 4j, 9.0])
    sigma = fold_roots(mu)
    np.testing.assert_allclose(sigma, [2j, 2j, math.sqrt(2) * (1 + 1j), 3.0])
    assert np.all(sigma.real >= 0)


def test_sample_shape():
    """ Test one replicate yields n folded values
    """
    p = EnsembleParams(12, 3)
    sample = sample_eigenvalues(p, (5, 0))
    assert sample.sigmas.shape == (12,)
    assert np.all(sample.sigmas.real >= 0)
    assert sample.max_re == np.max(sample.sigmas.real)
    assert sample.max_abs == np.max(np.abs(sample.sigmas))
    assert sample.seed_tag == (5, 0)


def test_sample_deterministic():
    """ Test samples depend only on the seed tag
    """
    p = EnsembleParams(8, 1)
    first = sample_eigenvalues(p, (11, 3))
    second = sample_eigenvalues(p, (11, 3))
    other = sample_eigenvalues(p, (11, 4))
    np.testing.assert_array_equal(first.sigmas, second.sigmas)
    assert first.max_re != other.max_re
    pytest.raises(DomainError, sample_eigenvalues, p, (-1, 0))


def test_dirac_matrix_spectrum():
    """ Test the product route against the full block matrix
    """
    for n, v in ((1, 0), (3, 0), (4, 2), (6, 1)):
        p = EnsembleParams(n, v)
        for replicate in range(5):
            phi, psi = draw_blocks(p, (0, replicate))
            D = dirac_matrix(phi, psi)
            assert D.shape == (2 * n + v, 2 * n + v)
            sigma = fold_roots(np.linalg.eigvals(psi.conj().T.dot(phi)))
            expected = np.concatenate([sigma, -sigma, np.zeros(v)])
            assert _match(np.linalg.eigvals(D), expected, 1e-8)
            assert _match(sigma, sample_eigenvalues(p, (0, replicate)).sigmas,
                          1e-12)


def test_block_variance():
    """ Test entries of P and Q have real and imaginary variance 1/(4n)
    """
    p = EnsembleParams(50, 150)
    phi, psi = draw_blocks(p, (1, 0))
    P = 0.5 * (phi + psi)
    for block in (P.real, P.imag):
        assert np.var(block) == pytest.approx(1.0 / 200.0, rel=0.05)


def test_phase_invariance():
    """ Test rotating the product rotates its eigenvalues
    """
    phi, psi = draw_blocks(EnsembleParams(6, 2), (2, 0))
    product = psi.conj().T.dot(phi)
    mu = np.linalg.eigvals(product)
    rotation = np.exp(0.7j)
    assert _match(np.linalg.eigvals(rotation * product), rotation * mu,
                  1e-10)


def test_single_eigenvalue_moment():
    """ Test E|sigma|^2 = pi/4 at n = 1, v = 0
    """
    p = EnsembleParams(1, 0)
    squares = np.array([abs(sample_eigenvalues(p, (9, i)).sigmas[0]) ** 2
                        for i in range(20000)])
    error = np.std(squares) / math.sqrt(squares.size)
    assert abs(np.mean(squares) - math.pi / 4.0) <= 4.0 * error


def test_run_monte_carlo():
    """ Test Monte Carlo runs keep replicate order and transforms
    """
    p = EnsembleParams(10, 0)
    run = run_monte_carlo(p, 20, 7)
    assert run.replicates == 20
    assert run.x_values.shape == run.radius_values.shape == (20,)
    np.testing.assert_allclose(run.x_values, x_transform(p, run.max_re))
    assert run.max_re[3] == sample_eigenvalues(p, (7, 3)).max_re
    small = run_monte_carlo(EnsembleParams(4, 0), 5, 7)
    assert np.all(np.isnan(small.radius_values))
    pytest.raises(DomainError, run_monte_carlo, p, 0, 7)


def test_run_monte_carlo_workers():
    """ Test the worker count does not change the output
    """
    p = EnsembleParams(10, 1)
    serial = run_monte_carlo(p, 20, 3, workers=1)
    parallel = run_monte_carlo(p, 20, 3, workers=2)
    np.testing.assert_array_equal(serial.x_values, parallel.x_values)
    np.testing.assert_array_equal(serial.max_abs, parallel.max_abs)


def test_monte_carlo_matches_fredholm():
    """ Test Monte Carlo frequencies against exp(-Tr) and its error bound
    """
    p = EnsembleParams(30, 0)
    run = run_monte_carlo(p, 2000, 17)
    for t in (1.0, 2.0, 3.0):
        approx = fredholm_cdf_approx(p, t, 1e-6)
        frequency = float(np.mean(run.x_values <= t))
        se = mc_standard_error(approx.cdf, run.replicates)
        assert abs(frequency - approx.cdf) <= approx.error_bound \
            + 4.0 * se + 0.01


def test_monte_carlo_gumbel_fit():
    """ Test both edge statistics are within a KS distance of the Gumbel law
    """
    run = run_monte_carlo(EnsembleParams(100, 0), 1500, 23, workers=2)
    ks = ks_distance(EcdfSummary.from_values(run.x_values), gumbel_cdf)
    ks_radius = ks_distance(EcdfSummary.from_values(run.radius_values),
                            gumbel_cdf)
    assert 0 < ks <= 0.45
    assert 0 < ks_radius <= 0.45


def test_monte_carlo_mean_bias():
    """ Test the sample mean of X sits below the Gumbel mean at n = 200
    """
    run = run_monte_carlo(EnsembleParams(200, 0), 2000, 29, workers=2)
    mean = float(np.mean(run.x_values))
    assert np.euler_gamma - 0.6 <= mean <= np.euler_gamma - 0.2


def test_eigensolver_failure(monkeypatch):
    """ Test eigensolver failures are retried then reported
    """
    def broken(matrix):
        raise np.linalg.LinAlgError('no convergence')
    monkeypatch.setattr(np.linalg, 'eigvals', broken)
    with pytest.raises(SamplingError) as excinfo:
        sample_eigenvalues(EnsembleParams(3, 0), (1, 4))
    assert excinfo.value.replicate == 4


def test_eigensolver_recovery(monkeypatch):
    """ Test a single eigensolver failure is recovered by perturbation
    """
    original = np.linalg.eigvals
    calls = []

    def flaky(matrix):
        calls.append(1)
        if len(calls) == 1:
            raise np.linalg.LinAlgError('no convergence')
        return original(matrix)
    monkeypatch.setattr(np.linalg, 'eigvals', flaky)
    sample = sample_eigenvalues(EnsembleParams(3, 0), (1, 4))
    monkeypatch.undo()
    reference = sample_eigenvalues(EnsembleParams(3, 0), (1, 4))
    assert len(calls) == 2
    assert _match(sample.sigmas, reference.sigmas, 1e-6)
