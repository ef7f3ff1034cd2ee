# -*- coding: utf-8 -*-
"""
SimulationConfig: settings of the location-scale Monte Carlo experiment

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import json
from collections import OrderedDict
from enum import Enum

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import InvalidConfig
from pyisorecal.basic.utils import frozen

MAX_SEED = 2**64


class NoiseFamily(Enum):
    GAUSSIAN = "gaussian"
    STUDENT_T = "student-t"
    UNIFORM = "uniform"

    @property
    def full_support(self):
        "whether the noise density is positive on the whole real line"
        return self is not NoiseFamily.UNIFORM


def linear_mu(n):
    "location parameters mu_i = i, i = 1..n"
    return np.arange(1, n + 1, dtype=np.float64)


class SimulationConfig(object):
    """
    Location-scale model y_i = mu_i + sigma * eps_i on a grid of sigmas

    Parameters
    ----------
    mu : array_like
        n non-decreasing location parameters
    sigmas : array_like
        non-decreasing grid of positive scale parameters
    noise : NoiseFamily or str
        'gaussian', 'student-t' or 'uniform' (on (-1, 1))
    replicates : int
        number of noise draws
    seed : int
        root seed, 0 <= seed < 2**64
    weights : array_like, optional
        positive case weights, default 1
    df : float
        degrees of freedom of the student-t noise
    """
    def __init__(self, mu, sigmas, noise="gaussian", replicates=1000,
                 seed=None, weights=None, df=5.0):
        try:
            mu = np.array(mu, dtype=np.float64)
            sigmas = np.array(sigmas, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise InvalidConfig("mu/sigmas", str(exc))
        if mu.ndim != 1 or mu.shape[0] == 0:
            raise InvalidConfig("mu", "need at least one location parameter")
        if not np.isfinite(mu).all():
            raise InvalidConfig("mu", "values must be finite")
        if (np.diff(mu) < 0).any():
            raise InvalidConfig("mu", "values must be non-decreasing")
        if sigmas.ndim != 1 or sigmas.shape[0] == 0:
            raise InvalidConfig("sigmas", "need at least one sigma")
        if not (np.isfinite(sigmas).all() and (sigmas > 0).all()):
            raise InvalidConfig("sigmas", "values must be positive")
        if (np.diff(sigmas) < 0).any():
            raise InvalidConfig("sigmas", "grid must be increasing")
        try:
            noise = NoiseFamily(noise.value if isinstance(noise, NoiseFamily)
                                else str(noise).lower())
        except ValueError:
            raise InvalidConfig("noise", "unknown noise family '{}'".format(
                noise))
        if int(replicates) != replicates or replicates < 1:
            raise InvalidConfig("replicates", "must be a positive integer")
        if seed is None:
            raise InvalidConfig("seed", "an explicit seed is required")
        if int(seed) != seed or not 0 <= seed < MAX_SEED:
            raise InvalidConfig("seed", "must be an integer in [0, 2**64)")
        if not df > 0:
            raise InvalidConfig("df", "must be positive")
        if weights is None:
            weights = np.ones_like(mu)
        weights = np.array(weights, dtype=np.float64)
        if weights.shape != mu.shape:
            raise InvalidConfig("weights", "need one weight per mu")
        if not (np.isfinite(weights).all() and (weights > 0).all()):
            raise InvalidConfig("weights", "values must be positive")

        self.mu = frozen(mu)
        self.sigmas = frozen(sigmas)
        self.noise = noise
        self.replicates = int(replicates)
        self.seed = int(seed)
        self.weights = frozen(weights)
        self.df = float(df)

    @property
    def n(self):
        return self.mu.shape[0]

    def __str__(self):
        return ("SimulationConfig(n={}, sigmas={}, noise={}, replicates={}, "
                "seed={})".format(self.n, list(self.sigmas), self.noise.value,
                                  self.replicates, self.seed))

    @classmethod
    def from_dict(cls, params):
        """
        Build from a parameter dictionary

        mu is 'linear' (then n is required), a list of floats, or
        {"csv": path, "column": name}.
        """
        params = dict(params)
        mu = params.pop("mu", "linear")
        n = params.pop("n", None)
        if isinstance(mu, str):
            if mu != "linear":
                raise InvalidConfig("mu", "unknown mu spec '{}'".format(mu))
            if n is None:
                raise InvalidConfig("n", "required for linear mu")
            if int(n) != n or n < 1:
                raise InvalidConfig("n", "must be a positive integer")
            mu = linear_mu(int(n))
        elif isinstance(mu, dict):
            mu = read_mu_csv(mu.get("csv"), mu.get("column", "mu"))
        if n is not None and len(mu) != n:
            raise InvalidConfig("n", "n={} but {} mu values".format(
                n, len(mu)))
        if "sigmas" not in params:
            raise InvalidConfig("sigmas", "missing")
        unknown = set(params) - {"sigmas", "noise", "replicates", "seed",
                                 "weights", "df"}
        if unknown:
            raise InvalidConfig(sorted(unknown)[0], "unknown key")
        return cls(mu, **params)

    @classmethod
    def from_json(cls, json_file):
        try:
            with open(json_file, "r") as fin:
                params = json.load(fin, object_pairs_hook=OrderedDict)
        except ValueError as exc:
            raise InvalidConfig(str(json_file), "not valid JSON: {}".format(
                exc))
        return cls.from_dict(params)

    def to_dict(self):
        return OrderedDict([
            ("n", self.n),
            ("mu", self.mu.tolist()),
            ("sigmas", self.sigmas.tolist()),
            ("noise", self.noise.value),
            ("df", self.df),
            ("replicates", self.replicates),
            ("seed", self.seed),
            ("weights", self.weights.tolist()),
        ])


def read_mu_csv(csv_file, column="mu"):
    if csv_file is None:
        raise InvalidConfig("mu", "csv path missing")
    frame = pd.read_csv(csv_file)
    if column not in frame:
        raise InvalidConfig("mu", "no column '{}' in {}".format(
            column, csv_file))
    return frame[column].to_numpy(dtype=np.float64)
