# -*- coding: utf-8 -*-
"""
Weighted isotonic regression by pool adjacent violators

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging

import numpy as np
from scipy.optimize import isotonic_regression

from pyisorecal.basic.exceptions import (
    FitDataMismatch, OutOfRange, WouldBreakMonotonicity)
from pyisorecal.basic.fit import IsotonicFit
from pyisorecal.basic.utils import block_means, equal_neighbours

logger = logging.getLogger(__name__)


def pav_fit(data):
    """
    Isotonic regression of the responses of an OrderedDataset

    Solves min sum w_i (y_i - mu_i)**2 subject to mu_1 <= ... <= mu_n.

    Parameters
    ----------
    data : OrderedDataset

    Returns
    -------
    IsotonicFit
        maximal blocks with strictly increasing block values

    Notes
    -----
    The pooling pass is the linear-time stack-based PAV of
    ``scipy.optimize.isotonic_regression``. Block values are then recomputed
    from the block sums with a residual-refinement pass, and adjacent blocks
    whose values agree within ``VALUE_RTOL`` are merged, so that K counts
    distinct values.
    """
    response, weight = data.response, data.weight
    result = isotonic_regression(response, weights=weight, increasing=True)
    slicing_points = np.asarray(result.blocks, dtype=np.intp)
    if slicing_points[-1] != data.n:
        slicing_points = np.append(slicing_points, data.n)
    fit = pool_equal_blocks(response, weight, slicing_points)
    logger.debug("pav_fit: n=%d, K=%d", data.n, fit.complexity)
    return fit


def pool_equal_blocks(response, weight, slicing_points):
    """
    Block means over a partition, merging neighbours with equal means

    Parameters
    ----------
    response, weight : 1-d ndarray
    slicing_points : 1-d ndarray of int
        a partition whose block means are non-decreasing

    Returns
    -------
    IsotonicFit
    """
    slicing_points = np.asarray(slicing_points, dtype=np.intp)
    values, weights = block_means(response, weight, slicing_points)
    while True:
        equal = equal_neighbours(values)
        if not equal.any():
            break
        slicing_points = slicing_points[np.r_[True, ~equal, True]]
        values, weights = block_means(response, weight, slicing_points)
    return IsotonicFit(slicing_points, values, weights)


def merge_blocks(fit, data, k):
    """
    Pool block k with block k+1

    Used for the boundary over-fitting correction: k=1 pools the two
    lowest blocks, k=K-1 the two highest.

    Parameters
    ----------
    fit : IsotonicFit
    data : OrderedDataset or None
        data the fit was computed from; when None the pooled value is
        computed from the stored block values and weights
    k : int
        1-based index of the lower of the two blocks

    Returns
    -------
    IsotonicFit
        fit with complexity K-1

    Raises
    ------
    OutOfRange
        unless 1 <= k < K
    WouldBreakMonotonicity
        if the pooled value does not lie strictly between its neighbours
    """
    n_blocks = fit.complexity
    if not 1 <= k < n_blocks:
        raise OutOfRange(k, n_blocks)
    values = fit.values.copy()
    weights = fit.weights.copy()
    slicing_points = fit.slicing_points
    if data is not None:
        if data.n != fit.n:
            raise FitDataMismatch(fit.n, data.n)
        lo, hi = slicing_points[k-1], slicing_points[k+1]
        pooled, pooled_weight = block_means(
            data.response[lo:hi], data.weight[lo:hi], np.array([0, hi - lo]))
        pooled, pooled_weight = pooled[0], pooled_weight[0]
    else:
        pooled_weight = weights[k-1] + weights[k]
        pooled = (values[k-1] * weights[k-1] +
                  values[k] * weights[k]) / pooled_weight
    new_values = np.r_[values[:k-1], pooled, values[k+1:]]
    new_weights = np.r_[weights[:k-1], pooled_weight, weights[k+1:]]
    if (np.diff(new_values) <= 0).any():
        raise WouldBreakMonotonicity(k)
    logger.info("merged blocks %d and %d: value %.17g, weight %.17g, K=%d",
                k, k + 1, pooled, pooled_weight, n_blocks - 1)
    return IsotonicFit(np.delete(slicing_points, k), new_values,
                       new_weights)
