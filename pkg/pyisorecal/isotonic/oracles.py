# -*- coding: utf-8 -*-
"""
Independent solvers and certificates used to verify pav_fit

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from collections import namedtuple

import numpy as np

from pyisorecal.basic.exceptions import FitDataMismatch, TooLarge
from pyisorecal.basic.losses import LossKind, pointwise_loss
from pyisorecal.basic.utils import block_means, equal_neighbours
from pyisorecal.basic.fit import IsotonicFit
from pyisorecal.isotonic.pav import pool_equal_blocks

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 14

KKTCertificate = namedtuple(
    "KKTCertificate",
    ["multipliers", "min_multiplier", "max_slackness", "stationarity"])


def minmax_fit(data):
    """
    Isotonic regression from the explicit min-max formula

    mu_i = min_{l >= i} max_{k <= l} A(k, l), with A(k, l) the weighted
    mean of y_k .. y_l. Each row k of the interval means is a running sum
    started at k, so no long prefix sums are differenced. O(n**2) time and
    memory, meant for n up to a few thousand.

    Parameters
    ----------
    data : OrderedDataset

    Returns
    -------
    IsotonicFit
        blocks are maximal runs of equal values
    """
    y, w = data.response, data.weight
    n = data.n
    wy = w * y
    avg = np.full((n, n), -np.inf)
    for k in range(n):
        avg[k, k:] = np.cumsum(wy[k:]) / np.cumsum(w[k:])
    inner_max = avg.max(axis=0)
    mu = np.minimum.accumulate(inner_max[::-1])[::-1]

    same = equal_neighbours(mu)
    slicing_points = np.r_[0, np.flatnonzero(~same) + 1, n]
    values, weights = block_means(mu, w, slicing_points)
    return IsotonicFit(slicing_points, values, weights)


def _interval_partitions(n):
    "all 2**(n-1) partitions of 0..n-1 into intervals, as slicing points"
    for mask in range(2 ** (n - 1)):
        cuts = [i + 1 for i in range(n - 1) if (mask >> i) & 1]
        yield np.array([0] + cuts + [n], dtype=np.intp)


def brute_force_fit(data, loss=LossKind.SQUARED):
    """
    Exhaustive search over interval partitions

    Among all partitions whose block weighted means are non-decreasing,
    returns the one with the smallest total weighted loss. For every
    Bregman loss the weighted mean is the optimal constant on a block, so
    the answer coincides with pav_fit.

    Parameters
    ----------
    data : OrderedDataset
        at most BRUTE_FORCE_LIMIT samples
    loss : LossKind or str

    Returns
    -------
    IsotonicFit

    Raises
    ------
    TooLarge
        if data.n > BRUTE_FORCE_LIMIT
    """
    n = data.n
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(n, BRUTE_FORCE_LIMIT)
    loss = LossKind.parse(loss)
    y, w = data.response, data.weight
    best, best_loss = None, np.inf
    for slicing_points in _interval_partitions(n):
        values, _ = block_means(y, w, slicing_points)
        if (np.diff(values) < 0).any():
            continue
        fitted = np.repeat(values, np.diff(slicing_points))
        total = float(np.sum(w * pointwise_loss(y, fitted, loss)))
        if total < best_loss:
            best, best_loss = slicing_points, total
    logger.debug("brute_force_fit: n=%d, %s loss %.6g", n, loss.value,
                 best_loss)
    return pool_equal_blocks(y, w, best)


def kkt_certificate(fit, data):
    """
    Lagrange multipliers of the isotonic problem reconstructed from a fit

    With constraints mu_{i+1} - mu_i >= 0, stationarity gives
    eta_i = sum_{j <= i} w_j (y_j - mu_j) for i = 1 .. n-1.

    Parameters
    ----------
    fit : IsotonicFit
    data : OrderedDataset

    Returns
    -------
    KKTCertificate
        multipliers (n-1,), their minimum (must be >= 0), the largest
        |eta_i (mu_{i+1} - mu_i)| (must be 0) and the stationarity residual
        of the last coordinate, |sum_j w_j (y_j - mu_j)| (must be 0)
    """
    if fit.n != data.n:
        raise FitDataMismatch(fit.n, data.n)
    mu = fit.fitted
    cum = np.cumsum(data.weight * (data.response - mu))
    eta = cum[:-1]
    if eta.shape[0]:
        min_multiplier = float(eta.min())
        max_slackness = float(np.max(np.abs(eta * np.diff(mu))))
    else:
        min_multiplier = max_slackness = 0.0
    return KKTCertificate(eta, min_multiplier, max_slackness,
                          float(abs(cum[-1])))
