# -*- coding: utf-8 -*-
"""
Calibration identities, loss accounting and reliability diagrams

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import logging
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import FitDataMismatch, LengthMismatch
from pyisorecal.basic.losses import (
    LossKind, applicable_losses, pointwise_loss)
from pyisorecal.basic.utils import as_float_array, block_means
from pyisorecal.isotonic.pav import pav_fit
from pyisorecal.isotonic.ties import merge_tied_arrays

logger = logging.getLogger(__name__)

# slack allowed when comparing in-sample losses of two predictors
LOSS_RTOL = 1e-12


def _check_fit(fit, data):
    if fit.n != data.n:
        raise FitDataMismatch(fit.n, data.n)


def check_autocalibration(fit, data):
    """
    In-sample auto-calibration gaps

    Parameters
    ----------
    fit : IsotonicFit
    data : OrderedDataset
        the data fit was computed from

    Returns
    -------
    ndarray
        |block value - weighted mean response of the block| per block
    """
    _check_fit(fit, data)
    means, _ = block_means(data.response, data.weight, fit.slicing_points)
    return np.abs(fit.values - means)


def balance_gap(fit, data):
    """
    Global balance gap sum_i w_i mu_i - sum_i w_i y_i
    """
    _check_fit(fit, data)
    return float(np.sum(data.weight * (fit.fitted - data.response)))


def _loss_inputs(responses, weights, fitted):
    responses = as_float_array(responses, "responses")
    fitted = as_float_array(fitted, "fitted")
    if weights is None:
        weights = np.ones_like(responses)
    weights = as_float_array(weights, "weights")
    if not (responses.shape[0] == weights.shape[0] == fitted.shape[0]):
        raise LengthMismatch(responses=responses.shape[0],
                             weights=weights.shape[0],
                             fitted=fitted.shape[0])
    return responses, weights, fitted


def mean_loss(responses, weights, fitted, loss=LossKind.SQUARED):
    """
    Weighted mean of per-sample Bregman losses

    Parameters
    ----------
    responses, weights, fitted : array_like
        weights may be None for unit weights
    loss : LossKind or str

    Returns
    -------
    float
    """
    responses, weights, fitted = _loss_inputs(responses, weights, fitted)
    losses = pointwise_loss(responses, fitted, loss)
    return float(np.sum(weights * losses) / np.sum(weights))


def rmse(responses, weights, fitted):
    """
    Root of the weighted mean squared error
    """
    return float(np.sqrt(mean_loss(responses, weights, fitted,
                                   LossKind.SQUARED)))


def loss_improvement_check(responses, weights, scores, recalibrated):
    """
    Compare in-sample losses of the raw scores and the recalibrated values

    Parameters
    ----------
    responses, weights : array_like
    scores : array_like
        candidate model scores used as predictions
    recalibrated : array_like
        recalibrated predictions for the same rows

    Returns
    -------
    pandas.DataFrame
        indexed by loss kind, columns ``scores``, ``recalibrated`` and
        ``ok`` (recalibrated loss does not exceed the score loss)
    """
    responses, weights, scores = _loss_inputs(responses, weights, scores)
    recalibrated = as_float_array(recalibrated, "recalibrated")
    rows = OrderedDict()
    for kind in applicable_losses(responses, scores, recalibrated):
        before = mean_loss(responses, weights, scores, kind)
        after = mean_loss(responses, weights, recalibrated, kind)
        ok = after <= before + LOSS_RTOL * max(abs(before), 1.0)
        if not ok:
            logger.warning("%s loss increased by recalibration: %.17g > "
                           "%.17g", kind.value, after, before)
        rows[kind.value] = {"scores": before, "recalibrated": after,
                            "ok": ok}
    return pd.DataFrame.from_dict(rows, orient="index")


def loss_table(responses, weights, predictions):
    """
    Table of gamma deviance, RMSE and weighted average prediction

    Parameters
    ----------
    responses, weights : array_like
    predictions : mapping
        model name -> predictions, in row order of the table

    Returns
    -------
    pandas.DataFrame
        one row per model; gamma_deviance is NaN where it does not apply
    """
    responses = as_float_array(responses, "responses")
    weights = (np.ones_like(responses) if weights is None
               else as_float_array(weights, "weights"))
    rows = OrderedDict()
    for name, fitted in predictions.items():
        _, _, fitted = _loss_inputs(responses, weights, fitted)
        deviance = np.nan
        if LossKind.GAMMA_DEVIANCE in applicable_losses(responses, fitted):
            deviance = mean_loss(responses, weights, fitted,
                                 LossKind.GAMMA_DEVIANCE)
        rows[name] = {
            "gamma_deviance": deviance,
            "rmse": rmse(responses, weights, fitted),
            "average": float(np.sum(weights * fitted) / np.sum(weights)),
        }
    return pd.DataFrame.from_dict(rows, orient="index")


def reliability_points(predictions, outcomes, weights=None):
    """
    CORP mean reliability diagram

    The outcomes are isotonically regressed on the predictions. Each block
    gives one point: the weighted mean prediction of the block and the
    fitted conditional mean.

    Parameters
    ----------
    predictions, outcomes : array_like
    weights : array_like, optional

    Returns
    -------
    pandas.DataFrame
        columns prediction, conditional_mean, weight; one row per block
    """
    outcomes, weights, predictions = _loss_inputs(outcomes, weights,
                                                  predictions)
    data = merge_tied_arrays(outcomes, weights, predictions)
    fit = pav_fit(data)
    levels, _ = block_means(data.score, data.weight, fit.slicing_points)
    return pd.DataFrame({"prediction": levels,
                         "conditional_mean": fit.values,
                         "weight": fit.weights})


def recalibration_report(model, data):
    """
    Summary of a recalibrated model on its training data

    Parameters
    ----------
    model : Recalibrator
    data : OrderedDataset
        training data of the model, ties merged

    Returns
    -------
    dict
        complexity, blocks, auto-calibration gaps, balance gap, the loss
        table of the null model, the raw scores and the recalibrated model,
        and the loss improvement check
    """
    fit = model.fit_for(data)
    gaps = check_autocalibration(fit, data)
    response, weight = data.response, data.weight
    null = np.full_like(response, np.sum(weight * response) / np.sum(weight))
    table = loss_table(response, weight, OrderedDict([
        ("null model", null),
        ("scores", data.score),
        ("recalibrated", fit.fitted),
    ]))
    check = loss_improvement_check(response, weight, data.score, fit.fitted)
    return OrderedDict([
        ("complexity", model.complexity),
        ("n_samples", data.n),
        ("blocks", model.block_table().to_dict(orient="records")),
        ("autocalibration_gaps", gaps.tolist()),
        ("max_autocalibration_gap", float(gaps.max())),
        ("balance_gap", balance_gap(fit, data)),
        ("losses", table.reset_index().rename(
            columns={"index": "model"}).to_dict(orient="records")),
        ("loss_improvement", check.reset_index().rename(
            columns={"index": "loss"}).to_dict(orient="records")),
        ("edits", model.edits),
    ])
