# -*- coding: utf-8 -*-
"""
Covariate space partition induced by a recalibrated model

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from collections import namedtuple

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import InvalidSample, LengthMismatch


class PartitionLabeling(namedtuple("PartitionLabeling",
                                   ["labels", "block_values"])):
    """
    block label (1..K) of every row and the K block values
    """
    __slots__ = ()

    @property
    def complexity(self):
        return len(self.block_values)


def assign_partition(model, scores):
    """
    Label each score with its price cohort

    Parameters
    ----------
    model : Recalibrator
    scores : array_like

    Returns
    -------
    PartitionLabeling
    """
    _, blocks = model.predict_step(np.atleast_1d(
        np.asarray(scores, dtype=np.float64)))
    return PartitionLabeling(blocks, model.block_values.copy())


def _levels(covariate, n, bins):
    covariate = pd.Series(np.asarray(covariate), name="level")
    if covariate.shape[0] != n:
        raise LengthMismatch(labels=n, covariate=covariate.shape[0])
    if bins is not None:
        covariate = pd.cut(covariate, bins)
    return covariate


def _weights(weights, n):
    if weights is None:
        return np.ones(n)
    weights = np.asarray(weights, dtype=np.float64)
    if weights.shape[0] != n:
        raise LengthMismatch(labels=n, weights=weights.shape[0])
    bad = ~(np.isfinite(weights) & (weights > 0))
    if bad.any():
        raise InvalidSample(int(np.argmax(bad)),
                            "weight must be positive and finite")
    return weights


def marginal_summary(labeling, covariate, weights=None, bins=None):
    """
    Marginal view of the partition for one covariate

    Parameters
    ----------
    labeling : PartitionLabeling
    covariate : array_like
        categorical levels, or numeric values binned with bins
    weights : array_like, optional
        row weights, defaults to 1
    bins : int or sequence, optional
        passed to pandas.cut for numeric covariates

    Returns
    -------
    pandas.DataFrame
        one row per level, one column per block 1..K, holding the weighted
        share of the level's rows in that block; rows sum to 1
    """
    labels = np.asarray(labeling.labels)
    n = labels.shape[0]
    levels = _levels(covariate, n, bins)
    frame = pd.DataFrame({"level": levels, "block": labels,
                          "weight": _weights(weights, n)})
    table = frame.pivot_table(index="level", columns="block",
                              values="weight", aggfunc="sum",
                              fill_value=0.0, observed=True)
    table = table.reindex(columns=range(1, labeling.complexity + 1),
                          fill_value=0.0)
    table = table.div(table.sum(axis=1), axis=0)
    table.columns.name = "block"
    return table


def cohort_profile(labeling, covariate, block, weights=None, bins=None):
    """
    Weighted distribution of a covariate inside one price cohort

    Parameters
    ----------
    labeling : PartitionLabeling
    covariate : array_like
    block : int
        1-based cohort index
    weights : array_like, optional
    bins : int or sequence, optional

    Returns
    -------
    pandas.Series
        share of each level among the rows of the block, summing to 1
    """
    if not 1 <= block <= labeling.complexity:
        raise IndexError("block {} not in 1..{}".format(
            block, labeling.complexity))
    labels = np.asarray(labeling.labels)
    n = labels.shape[0]
    levels = _levels(covariate, n, bins)
    weights = pd.Series(_weights(weights, n))
    mask = labels == block
    shares = weights[mask].groupby(levels[mask], observed=True).sum()
    total = shares.sum()
    if total > 0:
        shares = shares / total
    shares.name = "share"
    return shares
