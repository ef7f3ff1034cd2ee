# -*- coding: utf-8 -*-
"""
Bregman losses consistent for the mean

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

from enum import Enum

import numpy as np

from pyisorecal.basic.exceptions import NonPositiveValue


class LossKind(Enum):
    """
    Supported Bregman losses

    Notes
    -----
    All three are divergences D(y, mu) = phi(y) - phi(mu) - phi'(mu)(y - mu):

    - squared : phi(x) = x**2
    - qlike : phi(x) = -log(x)
    - gamma-deviance : twice qlike
    """
    SQUARED = "squared"
    GAMMA_DEVIANCE = "gamma-deviance"
    QLIKE = "qlike"

    @property
    def requires_positive(self):
        return self is not LossKind.SQUARED

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        return cls(str(value).lower().replace("_", "-"))


def check_positive(values, what):
    bad = ~(np.asarray(values) > 0)
    if bad.any():
        raise NonPositiveValue(int(np.argmax(bad)), what)


def pointwise_loss(y, mu, kind):
    """
    Per-sample loss D(y, mu)

    Parameters
    ----------
    y, mu : ndarray
        responses and predictions of the same shape
    kind : LossKind or str

    Returns
    -------
    ndarray
    """
    kind = LossKind.parse(kind)
    y = np.asarray(y, dtype=np.float64)
    mu = np.asarray(mu, dtype=np.float64)
    if kind is LossKind.SQUARED:
        return (y - mu)**2
    check_positive(y, "response")
    check_positive(mu, "fitted value")
    ratio = y / mu
    qlike = ratio - np.log(ratio) - 1
    if kind is LossKind.QLIKE:
        return qlike
    return 2 * qlike


def applicable_losses(*arrays):
    "loss kinds whose domain contains all given arrays"
    positive = all((np.asarray(a) > 0).all() for a in arrays)
    return [kind for kind in LossKind
            if positive or not kind.requires_positive]
