# -*- coding: utf-8 -*-
"""
Monte Carlo study of the complexity number under coupled noise

One noise vector is drawn per replicate and reused for every sigma of the
grid, so complexities at different sigmas are compared on the same draw.

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import pandas as pd
from scipy import stats

from pyisorecal.basic.sample import OrderedDataset
from pyisorecal.basic.utils import split_sequence
from pyisorecal.isotonic.pav import pav_fit
from pyisorecal.simulation.config import NoiseFamily

logger = logging.getLogger(__name__)

CoupledSample = namedtuple("CoupledSample", ["noise", "responses"])


def replicate_generator(seed, replicate):
    """
    Random generator of one replicate

    The stream is keyed by (seed, replicate) through the spawn key of a
    SeedSequence and drives a counter-based Philox bit generator, so
    replicate r draws the same numbers whatever else runs.
    """
    sequence = np.random.SeedSequence(entropy=seed, spawn_key=(replicate,))
    return np.random.Generator(np.random.Philox(sequence))


def draw_noise(config, replicate):
    "noise vector eps of one replicate"
    rng = replicate_generator(config.seed, replicate)
    if config.noise is NoiseFamily.GAUSSIAN:
        return rng.standard_normal(config.n)
    if config.noise is NoiseFamily.STUDENT_T:
        return rng.standard_t(config.df, config.n)
    return rng.uniform(-1.0, 1.0, config.n)


def coupled_responses(config, noise):
    "responses mu + sigma * eps for every sigma, shape (sigmas, n)"
    return config.mu[None, :] + config.sigmas[:, None] * noise[None, :]


def sample_coupled(config):
    """
    Coupled responses of all replicates

    Parameters
    ----------
    config : SimulationConfig

    Returns
    -------
    CoupledSample
        noise of shape (replicates, n) and responses of shape
        (replicates, sigmas, n)
    """
    noise = np.stack([draw_noise(config, r)
                      for r in range(config.replicates)])
    responses = (config.mu[None, None, :] +
                 config.sigmas[None, :, None] * noise[:, None, :])
    return CoupledSample(noise, responses)


def _complexities(config, replicates):
    "K for the given replicates (rows) and every sigma (columns)"
    out = np.empty((len(replicates), config.sigmas.shape[0]), dtype=np.int64)
    for row, r in enumerate(replicates):
        ys = coupled_responses(config, draw_noise(config, r))
        for col, y in enumerate(ys):
            data = OrderedDataset.from_ordered(y, config.weights)
            out[row, col] = pav_fit(data).complexity
    return out


class ComplexityCurve(object):
    """
    Complexity numbers of all replicates and their mean per sigma

    Parameters
    ----------
    sigmas : 1-d ndarray
    matrix : 2-d ndarray of int
        K per replicate (rows) and sigma (columns)
    """
    def __init__(self, sigmas, matrix):
        self.sigmas = np.asarray(sigmas, dtype=np.float64)
        self.matrix = np.asarray(matrix, dtype=np.int64)

    @property
    def replicates(self):
        return self.matrix.shape[0]

    @property
    def mean(self):
        return self.matrix.mean(axis=0)

    @property
    def se(self):
        "standard error of the mean K, NaN for a single replicate"
        if self.replicates < 2:
            return np.full(self.sigmas.shape, np.nan)
        return stats.sem(self.matrix, axis=0, ddof=1)

    def violations(self):
        """
        Number of (replicate, sigma < sigma') pairs with K(sigma') > K(sigma)
        """
        count = 0
        n_sigmas = self.sigmas.shape[0]
        for i in range(n_sigmas):
            for j in range(i + 1, n_sigmas):
                count += int(np.sum(self.matrix[:, j] > self.matrix[:, i]))
        return count

    def to_frame(self):
        return pd.DataFrame({"sigma": self.sigmas, "mean_K": self.mean,
                             "se_K": self.se})

    def replicate_frame(self):
        frame = pd.DataFrame(self.matrix,
                             columns=["{:.17g}".format(s)
                                      for s in self.sigmas])
        frame.index.name = "replicate"
        return frame


def complexity_curve(config, n_jobs=1, chunk_size=100):
    """
    Mean complexity number per sigma

    Responses are fitted in their true mu-order, no ranking function is
    estimated.

    Parameters
    ----------
    config : SimulationConfig
    n_jobs : int
        worker processes; the result does not depend on it
    chunk_size : int
        replicates per work unit

    Returns
    -------
    ComplexityCurve
    """
    replicates = list(range(config.replicates))
    if n_jobs is None or n_jobs <= 1:
        matrix = _complexities(config, replicates)
    else:
        chunks = list(split_sequence(replicates, chunk_size))
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(_complexities, [config] * len(chunks),
                                  chunks))
        matrix = np.vstack(parts)
    curve = ComplexityCurve(config.sigmas, matrix)
    logger.debug("complexity curve %s: mean K %s", config,
                 np.round(curve.mean, 3).tolist())
    return curve


def check_pointwise_monotone(config, curve=None, n_jobs=1):
    """
    Count coupled comparisons where K grows with sigma

    Under the location-scale model any pooling at sigma also happens at
    every larger sigma on the same noise draw, so the count is 0.

    Parameters
    ----------
    config : SimulationConfig
    curve : ComplexityCurve, optional
        precomputed curve of config

    Returns
    -------
    int
    """
    if curve is None:
        curve = complexity_curve(config, n_jobs=n_jobs)
    count = curve.violations()
    if count:
        logger.warning("%d coupled comparisons with K increasing in sigma",
                       count)
    return count
