# -*- coding: utf-8 -*-
"""
some utilities
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import numpy as np

# relative tolerance under which two adjacent block values count as equal
VALUE_RTOL = 1e-12


def as_float_array(values, name="values"):
    """
    Return a 1-d float64 copy of values

    Raises
    ------
    ValueError
        if values is not one dimensional
    """
    arr = np.array(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("{} must be one dimensional".format(name))
    return arr


def frozen(arr):
    "mark an array read-only and return it"
    arr.flags.writeable = False
    return arr


def block_lengths(slicing_points):
    return np.diff(slicing_points)


def block_sums(values, slicing_points):
    """
    Sum of values over each block [i_{k-1}, i_k)
    """
    return np.add.reduceat(values, slicing_points[:-1])


def block_means(response, weight, slicing_points):
    """
    Weighted block means with one residual-refinement pass

    The first pass divides the block sums of w*y by the block weights.
    The second pass adds the weighted mean of the residuals, which
    recovers the rounding error of the first pass (compensated mean).

    Parameters
    ----------
    response, weight : 1-d ndarray
    slicing_points : 1-d ndarray of int
        0 = i_0 < i_1 < ... < i_K = n

    Returns
    -------
    means, weights : tuple of 1-d ndarray
        block means and block weights
    """
    wsum = block_sums(weight, slicing_points)
    means = block_sums(weight * response, slicing_points) / wsum
    expanded = np.repeat(means, block_lengths(slicing_points))
    residual = block_sums(weight * (response - expanded), slicing_points)
    means = means + residual / wsum
    return means, wsum


def equal_neighbours(values):
    """
    Boolean mask of length K-1, True where values[k+1] does not exceed
    values[k] by more than VALUE_RTOL relative to the larger of the two
    magnitudes
    """
    values = np.asarray(values, dtype=float)
    if values.shape[0] < 2:
        return np.zeros(0, dtype=bool)
    lo, hi = values[:-1], values[1:]
    bound = VALUE_RTOL * np.maximum(np.abs(lo), np.abs(hi))
    return hi - lo <= np.maximum(bound, np.finfo(float).tiny)


def split_sequence(sequence, length):
    """
    Split a sequence into fragments with certain length
    """
    n_seq = len(sequence)
    for i in range(0, n_seq, length):
        yield sequence[i: i+length]
