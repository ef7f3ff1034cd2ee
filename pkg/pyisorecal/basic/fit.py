# -*- coding: utf-8 -*-
"""
Block and IsotonicFit: the block partition of an isotonic solution

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

import numpy as np

from pyisorecal.basic.utils import frozen


class Block(namedtuple("Block", ["lo", "hi", "value", "weight"])):
    """
    one maximal index interval with a constant fitted value

    lo and hi are 1-based and inclusive, value is the weighted block mean
    and weight the summed case weight of the block.
    """
    __slots__ = ()

    @property
    def size(self):
        return self.hi - self.lo + 1


class IsotonicFit(object):
    """
    Block partition, block values and complexity number of a fit

    Parameters
    ----------
    slicing_points : array_like of int
        0 = i_0 < i_1 < ... < i_K = n, block k covers the 1-based
        indices i_{k-1}+1 .. i_k
    values : array_like
        K block values, strictly increasing
    weights : array_like
        K positive block weights
    """
    def __init__(self, slicing_points, values, weights):
        slicing_points = np.array(slicing_points, dtype=np.intp)
        values = np.array(values, dtype=np.float64)
        weights = np.array(weights, dtype=np.float64)
        if slicing_points.ndim != 1 or slicing_points.shape[0] < 2:
            raise ValueError("need at least one block")
        if slicing_points[0] != 0:
            raise ValueError("first slicing point must be 0")
        if (np.diff(slicing_points) <= 0).any():
            raise ValueError("slicing points must be strictly increasing")
        n_blocks = slicing_points.shape[0] - 1
        if values.shape[0] != n_blocks or weights.shape[0] != n_blocks:
            raise ValueError(
                "{} blocks but {} values and {} weights".format(
                    n_blocks, values.shape[0], weights.shape[0]))
        if not (weights > 0).all():
            raise ValueError("block weights must be positive")
        if not (np.diff(values) > 0).all():
            raise ValueError("block values must be strictly increasing")
        self.__slicing_points = frozen(slicing_points)
        self.__values = frozen(values)
        self.__weights = frozen(weights)

    def __str__(self):
        return "IsotonicFit(n={}, K={})".format(self.n, self.complexity)

    def __repr__(self):
        return self.__str__()

    @property
    def slicing_points(self):
        return self.__slicing_points

    @property
    def values(self):
        "block values, one per block"
        return self.__values

    @property
    def weights(self):
        "block weights, one per block"
        return self.__weights

    @property
    def n(self):
        return int(self.__slicing_points[-1])

    @property
    def complexity(self):
        "complexity number K"
        return self.__values.shape[0]

    @property
    def sizes(self):
        return np.diff(self.__slicing_points)

    @property
    def blocks(self):
        "list of Block, 1-based inclusive index ranges"
        return [Block(int(lo) + 1, int(hi), float(v), float(w))
                for lo, hi, v, w in zip(self.__slicing_points[:-1],
                                        self.__slicing_points[1:],
                                        self.__values, self.__weights)]

    @property
    def fitted(self):
        "fitted value of each of the n samples"
        return np.repeat(self.__values, self.sizes)

    @property
    def labels(self):
        "1-based block index of each of the n samples"
        return np.repeat(np.arange(1, self.complexity + 1), self.sizes)

    def same_partition(self, other):
        return np.array_equal(self.__slicing_points, other.slicing_points)

    def allclose(self, other, atol=1e-10):
        "same blocks and block values within atol"
        return (self.same_partition(other) and
                np.allclose(self.__values, other.values, rtol=0, atol=atol))

    def coarsen(self, group_starts):
        """
        Re-express the fit over groups of samples

        Parameters
        ----------
        group_starts : 1-d ndarray of int
            start index of each group followed by n; every slicing point
            must be a group boundary

        Returns
        -------
        IsotonicFit
            fit whose n is the number of groups
        """
        group_starts = np.asarray(group_starts)
        idx = np.searchsorted(group_starts, self.__slicing_points)
        if not np.array_equal(group_starts[idx], self.__slicing_points):
            raise ValueError("a block boundary splits a group")
        return IsotonicFit(idx, self.__values, self.__weights)

    def refine(self, group_starts):
        """
        Inverse of coarsen: expand a fit over groups to the samples
        """
        group_starts = np.asarray(group_starts)
        if group_starts.shape[0] - 1 != self.n:
            raise ValueError("fit has {} units but {} groups given".format(
                self.n, group_starts.shape[0] - 1))
        return IsotonicFit(group_starts[self.__slicing_points],
                           self.__values, self.__weights)
