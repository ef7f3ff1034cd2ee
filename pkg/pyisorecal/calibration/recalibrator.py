# -*- coding: utf-8 -*-
"""
class Recalibrator, the deployable isotonically recalibrated model

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import FitDataMismatch, InvalidSample
from pyisorecal.basic.sample import OrderedDataset
from pyisorecal.basic.utils import frozen
from pyisorecal.isotonic.pav import merge_blocks, pav_fit
from pyisorecal.isotonic.ties import merge_ties

logger = logging.getLogger(__name__)


def _as_scores(score):
    scores = np.asarray(score, dtype=np.float64)
    bad = ~np.isfinite(np.atleast_1d(scores))
    if bad.any():
        raise InvalidSample(int(np.argmax(bad)), "non-finite score")
    return scores


class Recalibrator(object):
    """
    Score breakpoints bound to an isotonic fit

    Parameters
    ----------
    breakpoints : array_like
        strictly increasing distinct scores seen at fit time
    fit : IsotonicFit
        fit over the breakpoints, fit.n == len(breakpoints)
    score_range : tuple of float, optional
        (min score, max score), defaults to the outer breakpoints
    edits : list of dict, optional
        block merges applied after fitting, oldest first
    n_samples : int, optional
        number of (pseudo-)samples the fit was computed from
    """
    def __init__(self, breakpoints, fit, score_range=None, edits=None,
                 n_samples=None):
        breakpoints = np.array(breakpoints, dtype=np.float64)
        if breakpoints.ndim != 1 or breakpoints.shape[0] == 0:
            raise ValueError("breakpoints must be a non-empty 1-d array")
        if not np.isfinite(breakpoints).all():
            raise ValueError("breakpoints must be finite")
        if (np.diff(breakpoints) <= 0).any():
            raise ValueError("breakpoints must be strictly increasing")
        if fit.n != breakpoints.shape[0]:
            raise FitDataMismatch(fit.n, breakpoints.shape[0])
        if score_range is None:
            score_range = (breakpoints[0], breakpoints[-1])
        self.__breakpoints = frozen(breakpoints)
        self.__fit = fit
        self.__score_range = (float(score_range[0]), float(score_range[1]))
        self.__edits = tuple(dict(e) for e in (edits or ()))
        self.__n_samples = fit.n if n_samples is None else int(n_samples)
        self.__slicing_scores = frozen(breakpoints[fit.slicing_points[:-1]])
        self.__breakpoint_values = frozen(fit.fitted)

    def __str__(self):
        return "Recalibrator(K={}, breakpoints={})".format(
            self.complexity, self.__breakpoints.shape[0])

    def __repr__(self):
        return self.__str__()

    @property
    def breakpoints(self):
        return self.__breakpoints

    @property
    def fit(self):
        return self.__fit

    @property
    def score_range(self):
        return self.__score_range

    @property
    def edits(self):
        return [dict(e) for e in self.__edits]

    @property
    def n_samples(self):
        return self.__n_samples

    @property
    def complexity(self):
        return self.__fit.complexity

    @property
    def block_values(self):
        return self.__fit.values

    @property
    def slicing_scores(self):
        "lowest breakpoint of every block"
        return self.__slicing_scores

    @property
    def breakpoint_values(self):
        "fitted value at every breakpoint"
        return self.__breakpoint_values

    def predict_step(self, score):
        """
        Step function prediction

        Block k covers the half-open score interval
        [slicing_scores[k-1], slicing_scores[k]); scores below the first
        breakpoint fall into block 1, scores at or above the last slicing
        score into block K.

        Parameters
        ----------
        score : float or array_like

        Returns
        -------
        value, block : float and int, or ndarrays
        """
        scores = _as_scores(score)
        block = np.searchsorted(self.__slicing_scores, scores, side='right')
        block = np.maximum(block, 1)
        value = self.__fit.values[block - 1]
        if scores.ndim == 0:
            return float(value), int(block)
        return value, block

    def predict_midpoint(self, score):
        """
        Midpoint interpolation between breakpoints

        A score equal to a breakpoint gets that breakpoint's fitted value, a
        score strictly between two breakpoints the mean of their fitted
        values; outside the breakpoint range the boundary value.

        Parameters
        ----------
        score : float or array_like

        Returns
        -------
        float or ndarray
        """
        scores = _as_scores(score)
        bp = self.__breakpoints
        fitted = self.__breakpoint_values
        m = bp.shape[0]
        idx = np.searchsorted(bp, scores, side='left')
        upper = np.minimum(idx, m - 1)
        lower = np.maximum(idx - 1, 0)
        exact = bp[upper] == scores
        inside = (idx > 0) & (idx < m)
        value = np.where(exact | ~inside, fitted[upper],
                         0.5 * (fitted[lower] + fitted[upper]))
        if scores.ndim == 0:
            return float(value)
        return value

    def fit_for(self, data):
        """
        Fit over the samples of data, which must share the breakpoints

        Parameters
        ----------
        data : OrderedDataset

        Returns
        -------
        IsotonicFit
        """
        if not np.array_equal(data.breakpoints, self.__breakpoints):
            raise FitDataMismatch(self.__fit.n, data.n_groups)
        return self.__fit.refine(data.group_starts)

    def merge_blocks(self, k, data=None, side="index"):
        """
        New model with blocks k and k+1 pooled

        Parameters
        ----------
        k : int
            1-based lower block index
        data : OrderedDataset, optional
            training data; when given the pooled value is the weighted mean
            of its responses, otherwise it is computed from block sums
        side : {'index', 'low', 'high'}
            recorded in the edit log

        Returns
        -------
        Recalibrator
        """
        if data is None:
            fit = merge_blocks(self.__fit, None, k)
        else:
            fine = merge_blocks(self.fit_for(data), data, k)
            fit = fine.coarsen(data.group_starts)
        edit = {
            "kind": "merge",
            "side": side,
            "block": int(k),
            "value": float(fit.values[k-1]),
            "weight": float(fit.weights[k-1]),
            "complexity": fit.complexity,
        }
        logger.info("model edit: %s", edit)
        return Recalibrator(self.__breakpoints, fit, self.__score_range,
                            list(self.__edits) + [edit], self.__n_samples)

    def merge_low(self, data=None):
        "pool the two lowest blocks"
        return self.merge_blocks(1, data, side="low")

    def merge_high(self, data=None):
        "pool the two highest blocks"
        return self.merge_blocks(self.complexity - 1, data, side="high")

    def block_table(self):
        """
        Per-block summary

        Returns
        -------
        pandas.DataFrame
            columns block, lo_score, hi_score, value, weight, breakpoints
        """
        sp = self.__fit.slicing_points
        return pd.DataFrame({
            "block": np.arange(1, self.complexity + 1),
            "lo_score": self.__breakpoints[sp[:-1]],
            "hi_score": self.__breakpoints[sp[1:] - 1],
            "value": self.__fit.values,
            "weight": self.__fit.weights,
            "breakpoints": np.diff(sp),
        })


def recalibrate(raw):
    """
    Isotonic recalibration of candidate model scores

    Merges tied scores, fits the isotonic regression of the responses in
    score order and binds the fit to the distinct scores.

    Parameters
    ----------
    raw : sequence of WeightedSample, pandas.DataFrame or OrderedDataset

    Returns
    -------
    Recalibrator
    """
    data = raw if isinstance(raw, OrderedDataset) else merge_ties(raw)
    fit = pav_fit(data)
    model = Recalibrator(data.breakpoints, fit.coarsen(data.group_starts),
                         score_range=(data.score[0], data.score[-1]),
                         n_samples=data.n)
    logger.debug("recalibrated %d samples into K=%d cohorts", data.n,
                 model.complexity)
    return model


def predict_midpoint(model, score):
    "see Recalibrator.predict_midpoint"
    return model.predict_midpoint(score)


def predict_step(model, score):
    "see Recalibrator.predict_step"
    return model.predict_step(score)
