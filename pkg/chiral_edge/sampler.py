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
chiral_edge.sampler
===================
**Monte Carlo sampling of the chiral matrix model**

P and Q are (n+v) x n complex Gaussian matrices, Phi = P + Q and
Psi = P - Q. The Dirac matrix

    D = [[0, Phi], [Psi^H, 0]]

has the eigenvalue 0 with multiplicity v and the pairs +-sigma_i, where
sigma_i^2 runs over the eigenvalues of the n x n product Psi^H Phi. Only the
product is diagonalized.

Every replicate draws from its own generator seeded with
(master_seed, replicate), so results do not depend on how replicates are
spread over worker processes.
"""

import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .exceptions import DomainError, SamplingError
from .scaling import compute_constants, radius_transform, x_transform

logger = logging.getLogger(__name__)

#: Eigensolver attempts per replicate before giving up.
MAX_ATTEMPTS = 3

#: Relative size of the perturbation applied after a solver failure.
PERTURBATION_SCALE = 1e-12


EigenSample = namedtuple('EigenSample', 'sigmas max_re max_abs seed_tag')

McRun = namedtuple('McRun', 'params replicates master_seed x_values '
                            'radius_values max_re max_abs')


def _generator(seed_tag):
    master_seed, replicate = seed_tag
    if master_seed < 0 or replicate < 0:
        raise DomainError('Seeds must be non-negative integers')
    return np.random.default_rng([int(master_seed), int(replicate)])


def _complex_gaussian(rng, shape, scale):
    return scale * (rng.standard_normal(shape)
                    + 1j * rng.standard_normal(shape))


def draw_blocks(p, seed_tag):
    """ Draw the blocks Phi and Psi of one replicate.

    Real and imaginary parts of the entries of P and Q are independent
    centered Gaussians of variance 1/(4n).

    Returns
    -------
    phi, psi : numpy.ndarray
        (n+v) x n complex matrices P + Q and P - Q.
    """
    rng = _generator(seed_tag)
    return _blocks(p, rng)


def _blocks(p, rng):
    scale = 0.5 / np.sqrt(p.n)
    shape = (p.n + p.v, p.n)
    P = _complex_gaussian(rng, shape, scale)
    Q = _complex_gaussian(rng, shape, scale)
    return P + Q, P - Q


def dirac_matrix(phi, psi):
    """ Full (2n+v) x (2n+v) block matrix [[0, Phi], [Psi^H, 0]]. """
    rows, cols = phi.shape
    D = np.zeros((rows + cols, rows + cols), dtype=complex)
    D[:rows, rows:] = phi
    D[rows:, :rows] = psi.conj().T
    return D


def fold_roots(mu):
    """ Square roots of `mu` chosen with Re >= 0, and Im >= 0 when Re == 0.
    """
    sigma = np.sqrt(np.asarray(mu, dtype=complex))
    flip = (sigma.real < 0) | ((sigma.real == 0) & (sigma.imag < 0))
    sigma[flip] = -sigma[flip]
    return sigma


def _eigenvalues(product, rng, replicate):
    matrix = product
    for attempt in range(1, MAX_ATTEMPTS + 1):
        try:
            return np.linalg.eigvals(matrix)
        except np.linalg.LinAlgError:
            logger.warning('Eigensolver failed on replicate %s (attempt %d), '
                           'perturbing', replicate, attempt)
            size = np.linalg.norm(product)
            matrix = product + PERTURBATION_SCALE * size * _complex_gaussian(
                rng, product.shape, 1.0)
    raise SamplingError('eigensolver failed {} times'.format(MAX_ATTEMPTS),
                        replicate=replicate)


def sample_eigenvalues(p, seed_tag):
    """ Sample the eigenvalues sigma_i of one matrix.

    Parameters
    ----------
    p : EnsembleParams

    seed_tag : tuple of int
        (master seed, replicate index).

    Returns
    -------
    sample : EigenSample
        The n values sigma_i with Re sigma_i >= 0 and their largest real
        part and modulus.
    """
    rng = _generator(seed_tag)
    phi, psi = _blocks(p, rng)
    mu = _eigenvalues(psi.conj().T.dot(phi), rng, seed_tag[1])
    sigmas = fold_roots(mu)
    return EigenSample(sigmas, float(np.max(sigmas.real)),
                       float(np.max(np.abs(sigmas))), tuple(seed_tag))


def _replicate(args):
    p, master_seed, replicate = args
    sample = sample_eigenvalues(p, (master_seed, replicate))
    return sample.max_re, sample.max_abs


def run_monte_carlo(p, replicates, master_seed, workers=1):
    """ Sample the rightmost eigenvalue and spectral radius statistics.

    Parameters
    ----------
    p : EnsembleParams
        Ensemble with n >= 2.

    replicates : int
        Number of independent matrices.

    master_seed : int
        Seed from which every replicate's generator is derived.

    workers : int
        Worker processes. The output does not depend on it.

    Returns
    -------
    run : McRun
        `x_values` holds X_n and `radius_values` X~_n per replicate, in
        replicate order. `radius_values` is NaN when n(n+v)/(2n+v) <= e.
    """
    if replicates < 1:
        raise DomainError('replicates must be at least 1')
    compute_constants(p)
    tasks = [(p, master_seed, replicate) for replicate in range(replicates)]
    if workers > 1:
        chunksize = max(1, replicates // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_replicate, tasks,
                                        chunksize=chunksize))
    else:
        results = [_replicate(task) for task in tasks]
    max_re = np.array([result[0] for result in results])
    max_abs = np.array([result[1] for result in results])
    x_values = x_transform(p, max_re)
    if compute_constants(p).s_tilde > np.e:
        radius_values = radius_transform(p, max_abs ** 2)
    else:
        radius_values = np.full(replicates, np.nan)
    logger.debug('Sampled %d replicates of n=%d v=%d', replicates, p.n, p.v)
    return McRun(p, replicates, master_seed, x_values, radius_values, max_re,
                 max_abs)
