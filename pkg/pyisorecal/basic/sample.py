# -*- coding: utf-8 -*-
"""
WeightedSample and OrderedDataset, the input of every isotonic fit

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

import numpy as np

from pyisorecal.basic.exceptions import (
    EmptyDataset, InvalidSample, LengthMismatch)
from pyisorecal.basic.utils import as_float_array, frozen


class WeightedSample(namedtuple("WeightedSample",
                                ["response", "weight", "score"])):
    """
    one (response, weight, score) triple

    Attributes
    ----------
    response : float
        observed outcome y_i, in the units of the predictions
    weight : float
        positive case weight or exposure w_i
    score : float
        candidate model value pi(x_i), only its rank matters
    """
    __slots__ = ()

    def __new__(cls, response, weight=1.0, score=0.0):
        response, weight, score = float(response), float(weight), float(score)
        if not np.isfinite(response):
            raise InvalidSample(None, "non-finite response")
        if not np.isfinite(score):
            raise InvalidSample(None, "non-finite score")
        if not (np.isfinite(weight) and weight > 0):
            raise InvalidSample(None, "weight must be positive and finite")
        return super(WeightedSample, cls).__new__(cls, response, weight, score)


def check_arrays(response, weight, score):
    """
    Validate three sample arrays and report the first offending index

    Raises
    ------
    EmptyDataset, LengthMismatch, InvalidSample
    """
    if not (response.shape[0] == weight.shape[0] == score.shape[0]):
        raise LengthMismatch(response=response.shape[0],
                             weight=weight.shape[0], score=score.shape[0])
    if response.shape[0] == 0:
        raise EmptyDataset()
    for name, arr in (("response", response), ("weight", weight),
                      ("score", score)):
        bad = ~np.isfinite(arr)
        if bad.any():
            raise InvalidSample(int(np.argmax(bad)),
                                "non-finite {}".format(name))
    bad = weight <= 0
    if bad.any():
        raise InvalidSample(int(np.argmax(bad)), "non-positive weight")


class OrderedDataset(object):
    """
    Samples sorted by score, with ties already merged

    Tied scores form contiguous groups whose members carry the same
    (weighted average) response. The distinct scores, one per group, are
    the breakpoints and are strictly increasing.

    Parameters
    ----------
    response, weight, score : array_like
        sample arrays, already sorted by score
    order : array_like of int, optional
        raw index of each sample, defaults to 0..n-1

    Raises
    ------
    InvalidSample
        if scores are unsorted, or members of a tie group differ in
        response or weight (use merge_ties on raw samples)
    """
    def __init__(self, response, weight, score, order=None):
        response = as_float_array(response, "response")
        weight = as_float_array(weight, "weight")
        score = as_float_array(score, "score")
        check_arrays(response, weight, score)
        n = response.shape[0]
        steps = np.diff(score)
        if (steps < 0).any():
            raise InvalidSample(int(np.argmax(steps < 0)) + 1,
                                "scores are not sorted")
        unmerged = (steps == 0) & ((response[1:] != response[:-1]) |
                                   (weight[1:] != weight[:-1]))
        if unmerged.any():
            raise InvalidSample(int(np.argmax(unmerged)) + 1,
                                "tied scores not merged")
        if order is None:
            order = np.arange(n)
        order = np.array(order, dtype=np.intp)
        if order.shape[0] != n:
            raise LengthMismatch(samples=n, order=order.shape[0])
        starts = np.flatnonzero(np.r_[True, steps > 0])
        self.__response = frozen(response)
        self.__weight = frozen(weight)
        self.__score = frozen(score)
        self.__order = frozen(order)
        self.__group_starts = frozen(np.append(starts, n))

    @classmethod
    def from_ordered(cls, response, weight=None):
        """
        Dataset whose responses are already in rank order

        Scores are set to 0..n-1, so there are no ties.
        """
        response = as_float_array(response, "response")
        if weight is None:
            weight = np.ones_like(response)
        return cls(response, weight, np.arange(response.shape[0],
                                               dtype=np.float64))

    def with_response(self, response):
        "same weights, scores and provenance, new responses"
        return OrderedDataset(response, self.__weight, self.__score,
                              self.__order)

    def __len__(self):
        return self.__response.shape[0]

    def __str__(self):
        return "OrderedDataset(n={}, breakpoints={})".format(
            self.n, self.n_groups)

    @property
    def n(self):
        return self.__response.shape[0]

    @property
    def response(self):
        return self.__response

    @property
    def weight(self):
        return self.__weight

    @property
    def score(self):
        return self.__score

    @property
    def order(self):
        "raw index of each sample"
        return self.__order

    @property
    def group_starts(self):
        "start index of every tie group, followed by n"
        return self.__group_starts

    @property
    def n_groups(self):
        return self.__group_starts.shape[0] - 1

    @property
    def breakpoints(self):
        "strictly increasing distinct scores"
        return self.__score[self.__group_starts[:-1]]

    @property
    def total_weight(self):
        return float(np.sum(self.__weight))

    @property
    def weighted_response_sum(self):
        return float(np.sum(self.__weight * self.__response))

    def provenance(self, j):
        """
        Raw indices absorbed by sample j (0-based)

        All members of a tie group share the group's raw indices.
        """
        if not 0 <= j < self.n:
            raise IndexError("sample {} out of range".format(j))
        g = np.searchsorted(self.__group_starts, j, side='right') - 1
        return self.__order[self.__group_starts[g]:self.__group_starts[g+1]]

    def samples(self):
        "iterate over the samples as WeightedSample"
        for y, w, s in zip(self.__response, self.__weight, self.__score):
            yield WeightedSample(y, w, s)
