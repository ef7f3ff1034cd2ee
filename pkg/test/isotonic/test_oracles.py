# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import pytest
import numpy as np

import pyisorecal as pir
from pyisorecal.isotonic.oracles import BRUTE_FORCE_LIMIT


def test__minmax_fit_examples(unit_dataset):
    assert np.allclose(pir.minmax_fit(unit_dataset([3, 1, 2])).fitted, 2)
    fit = pir.minmax_fit(unit_dataset([5]))
    assert fit.complexity == 1
    assert fit.values[0] == 5
    fit = pir.minmax_fit(unit_dataset([1, 2, 2, 7]))
    assert np.allclose(fit.fitted, [1, 2, 2, 7])
    assert fit.complexity == 3


def test__minmax_fit_equals_pav_fit(rng, random_dataset):
    for _ in range(1000):
        data = random_dataset(rng, int(rng.integers(1, 201)))
        pav = pir.pav_fit(data)
        minmax = pir.minmax_fit(data)
        assert (pav.slicing_points == minmax.slicing_points).all()
        assert np.allclose(pav.values, minmax.values, rtol=0, atol=1e-10)


def test__brute_force_fit_examples(unit_dataset):
    fit = pir.brute_force_fit(unit_dataset([1, 3, 2, 4]))
    assert np.allclose(fit.fitted, [1, 2.5, 2.5, 4])
    fit = pir.brute_force_fit(unit_dataset([2, 1]), "gamma-deviance")
    assert np.allclose(fit.fitted, [1.5, 1.5])
    for kind in pir.LossKind:
        fit = pir.brute_force_fit(unit_dataset([1, 2]), kind)
        assert (fit.fitted == [1, 2]).all()


def test__brute_force_fit_limit(unit_dataset):
    with pytest.raises(pir.TooLarge):
        pir.brute_force_fit(unit_dataset(np.arange(BRUTE_FORCE_LIMIT + 1)))


def test__brute_force_fit_equals_pav_fit(rng, random_dataset):
    for i in range(500):
        positive = i % 2 == 1
        data = random_dataset(rng, int(rng.integers(1, 11)), positive)
        pav = pir.pav_fit(data)
        assert pir.brute_force_fit(data).allclose(pav)
        if positive:
            fit = pir.brute_force_fit(data, pir.LossKind.GAMMA_DEVIANCE)
            assert fit.allclose(pav)


def test__brute_force_fit_bregman_invariance(rng, random_dataset):
    for _ in range(200):
        data = random_dataset(rng, int(rng.integers(1, 9)), positive=True)
        fits = [pir.brute_force_fit(data, kind) for kind in pir.LossKind]
        for fit in fits[1:]:
            assert fit.same_partition(fits[0])
            assert np.allclose(fit.values, fits[0].values, rtol=0,
                               atol=1e-12)


def test__kkt_certificate(rng, random_dataset):
    for _ in range(500):
        data = random_dataset(rng, int(rng.integers(1, 200)))
        cert = pir.kkt_certificate(pir.pav_fit(data), data)
        assert cert.multipliers.shape == (data.n - 1,)
        assert cert.min_multiplier >= -1e-9
        assert cert.max_slackness <= 1e-9
        assert cert.stationarity <= 1e-9


def test__kkt_certificate_rejects_non_solution(unit_dataset):
    data = unit_dataset([3, 1, 2])
    wrong = pir.IsotonicFit([0, 1, 3], [1.0, 2.5], [1.0, 2.0])
    cert = pir.kkt_certificate(wrong, data)
    assert cert.min_multiplier < 0 or cert.max_slackness > 0
    with pytest.raises(pir.FitDataMismatch):
        pir.kkt_certificate(wrong, unit_dataset([1, 2]))
