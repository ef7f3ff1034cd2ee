# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import json

import pytest
import numpy as np

import pyisorecal as pir


def test__simulation_config():
    config = pir.SimulationConfig(pir.linear_mu(5), [1, 2], seed=3)
    assert config.n == 5
    assert (config.mu == [1, 2, 3, 4, 5]).all()
    assert config.noise is pir.NoiseFamily.GAUSSIAN
    assert config.replicates == 1000
    assert (config.weights == 1).all()
    assert pir.SimulationConfig.from_dict(config.to_dict()).to_dict() == \
        config.to_dict()


@pytest.mark.parametrize("kwargs, field", [
    (dict(mu=[2, 1], sigmas=[1]), "mu"),
    (dict(mu=[], sigmas=[1]), "mu"),
    (dict(mu=[1, 2], sigmas=[2, 1]), "sigmas"),
    (dict(mu=[1, 2], sigmas=[0, 1]), "sigmas"),
    (dict(mu=[1, 2], sigmas=[1], noise="cauchy"), "noise"),
    (dict(mu=[1, 2], sigmas=[1], replicates=0), "replicates"),
    (dict(mu=[1, 2], sigmas=[1], seed=-1), "seed"),
    (dict(mu=[1, 2], sigmas=[1], seed=2**64), "seed"),
    (dict(mu=[1, 2], sigmas=[1], weights=[1]), "weights"),
    (dict(mu=[1, 2], sigmas=[1], weights=[1, 0]), "weights"),
    (dict(mu=[1, 2], sigmas=[1], df=0), "df"),
])
def test__simulation_config_invalid(kwargs, field):
    kwargs.setdefault("seed", 1)
    with pytest.raises(pir.InvalidConfig) as excinfo:
        pir.SimulationConfig(**kwargs)
    assert excinfo.value.field == field


def test__simulation_config_requires_seed():
    with pytest.raises(pir.InvalidConfig) as excinfo:
        pir.SimulationConfig([1, 2], [1])
    assert excinfo.value.field == "seed"


def test__simulation_config_from_json(tmpdir):
    fn = tmpdir.join("sim.json")
    fn.write(json.dumps({"n": 4, "mu": "linear", "sigmas": [1, 5],
                         "noise": "student-t", "df": 3, "replicates": 10,
                         "seed": 42}))
    config = pir.SimulationConfig.from_json(str(fn))
    assert config.n == 4
    assert config.noise is pir.NoiseFamily.STUDENT_T
    assert config.df == 3

    fn.write(json.dumps({"mu": "linear", "sigmas": [1], "seed": 1}))
    with pytest.raises(pir.InvalidConfig) as excinfo:
        pir.SimulationConfig.from_json(str(fn))
    assert excinfo.value.field == "n"

    fn.write(json.dumps({"n": 2, "sigmas": [1], "seed": 1, "sigma": 3}))
    with pytest.raises(pir.InvalidConfig) as excinfo:
        pir.SimulationConfig.from_json(str(fn))
    assert excinfo.value.field == "sigma"

    fn.write("{")
    with pytest.raises(pir.InvalidConfig):
        pir.SimulationConfig.from_json(str(fn))


def test__simulation_config_mu_csv(tmpdir):
    csv = tmpdir.join("mu.csv")
    csv.write("location\n0.5\n1.5\n4\n")
    config = pir.SimulationConfig.from_dict({
        "mu": {"csv": str(csv), "column": "location"}, "sigmas": [1],
        "seed": 9})
    assert np.allclose(config.mu, [0.5, 1.5, 4])
    with pytest.raises(pir.InvalidConfig):
        pir.SimulationConfig.from_dict({
            "mu": {"csv": str(csv), "column": "mu"}, "sigmas": [1],
            "seed": 9})
