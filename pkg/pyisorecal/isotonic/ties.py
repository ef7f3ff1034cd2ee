# -*- coding: utf-8 -*-
"""
Tie preprocessing of raw samples

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from enum import Enum
from functools import singledispatch

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import EmptyDataset
from pyisorecal.basic.sample import OrderedDataset, check_arrays
from pyisorecal.basic.utils import as_float_array, block_means

logger = logging.getLogger(__name__)


class TieMergePolicy(Enum):
    """
    How samples with equal scores are combined

    WEIGHTED_AVERAGE replaces the g tied responses by their weighted
    average and gives each of the g pseudo-samples weight sum(w)/g.
    """
    WEIGHTED_AVERAGE = "weighted-average"


@singledispatch
def samples_to_arrays(raw):
    """
    Split raw samples into response, weight and score arrays

    Parameters
    ----------
    raw : sequence of WeightedSample or of (response, weight, score),
          or pandas.DataFrame with columns response, weight, score
    """
    rows = list(raw)
    if not rows:
        raise EmptyDataset()
    table = np.array([tuple(row) for row in rows], dtype=np.float64)
    if table.ndim != 2 or table.shape[1] != 3:
        raise ValueError("samples must be (response, weight, score) triples")
    return table[:, 0], table[:, 1], table[:, 2]


@samples_to_arrays.register(pd.DataFrame)
def _(raw):
    weight = raw["weight"] if "weight" in raw else np.ones(len(raw))
    return (as_float_array(raw["response"], "response"),
            as_float_array(weight, "weight"),
            as_float_array(raw["score"], "score"))


def merge_ties(raw, policy=TieMergePolicy.WEIGHTED_AVERAGE):
    """
    Sort raw samples by score and merge tied scores

    Parameters
    ----------
    raw : sequence of WeightedSample or pandas.DataFrame
    policy : TieMergePolicy

    Returns
    -------
    OrderedDataset

    Examples
    --------
    >>> data = merge_ties([WeightedSample(1, 1, 0), WeightedSample(9, 3, 0)])
    >>> data.response, data.weight
    (array([7., 7.]), array([2., 2.]))
    """
    response, weight, score = samples_to_arrays(raw)
    return merge_tied_arrays(response, weight, score, policy)


def merge_tied_arrays(response, weight, score,
                      policy=TieMergePolicy.WEIGHTED_AVERAGE):
    """
    Array version of merge_ties
    """
    if policy is not TieMergePolicy.WEIGHTED_AVERAGE:
        raise ValueError("unknown tie policy {}".format(policy))
    response = as_float_array(response, "response")
    weight = as_float_array(weight, "weight")
    score = as_float_array(score, "score")
    check_arrays(response, weight, score)

    order = np.argsort(score, kind="mergesort")
    y, w, s = response[order], weight[order], score[order]
    starts = np.flatnonzero(np.r_[True, np.diff(s) > 0])
    bounds = np.append(starts, s.shape[0])
    sizes = np.diff(bounds)
    tied = sizes > 1
    if tied.any():
        means, wsum = block_means(y, w, bounds)
        means = np.where(tied, means, y[starts])
        shares = np.where(tied, wsum / sizes, w[starts])
        y = np.repeat(means, sizes)
        w = np.repeat(shares, sizes)
        logger.debug("merged %d tie groups covering %d samples",
                     int(tied.sum()), int(sizes[tied].sum()))
    return OrderedDataset(y, w, s, order)
