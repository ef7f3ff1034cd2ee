# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import time

import pytest
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st
from sklearn.isotonic import IsotonicRegression

import pyisorecal as pir


def _fit(y, w=None):
    return pir.pav_fit(pir.OrderedDataset.from_ordered(
        np.asarray(y, dtype=float), w))


def test__pav_fit_examples():
    fit = _fit([1, 2, 3])
    assert (fit.values == [1, 2, 3]).all()
    assert fit.complexity == 3

    fit = _fit([3, 1, 2])
    assert np.allclose(fit.values, [2])
    assert fit.complexity == 1

    fit = _fit([1, 3, 2, 4])
    assert np.allclose(fit.fitted, [1, 2.5, 2.5, 4])
    assert fit.complexity == 3
    assert fit.blocks[1] == pir.Block(2, 3, 2.5, 2.0)

    fit = _fit([4, 2], [1, 3])
    assert np.allclose(fit.fitted, [2.5, 2.5])
    assert fit.complexity == 1


def test__pav_fit_merges_equal_blocks():
    # no violation between the two 2s, still one block
    fit = _fit([1, 2, 2, 3])
    assert fit.complexity == 3
    assert (fit.sizes == [1, 2, 1]).all()
    fit = _fit([5, 5, 5])
    assert fit.complexity == 1


def test__pav_fit_against_sklearn(rng):
    for _ in range(100):
        n = int(rng.integers(1, 300))
        y = rng.standard_normal(n)
        w = rng.uniform(0.01, 2, n)
        expected = IsotonicRegression().fit_transform(np.arange(n), y,
                                                      sample_weight=w)
        assert np.allclose(_fit(y, w).fitted, expected, rtol=0, atol=1e-9)


def test__pav_fit_mixed_scales():
    fit = _fit([0, 1e-7, 1e6])
    assert fit.complexity == 3
    assert (fit.fitted == [0, 1e-7, 1e6]).all()

    fit = _fit([0, 0, 0.5, 0.5, 2e12])
    assert fit.complexity == 3
    assert np.allclose(fit.values, [0, 0.5, 2e12], rtol=1e-15, atol=0)


def test__pav_fit_mixed_scales_against_sklearn(rng):
    # zero-inflated responses spanning twenty orders of magnitude
    for _ in range(100):
        n = int(rng.integers(2, 200))
        y = 10.0 ** rng.uniform(-8, 12, n) * (rng.uniform(size=n) > 0.3)
        w = rng.uniform(0.01, 2, n)
        expected = IsotonicRegression().fit_transform(np.arange(n), y,
                                                      sample_weight=w)
        fit = _fit(y, w)
        assert np.allclose(fit.fitted, expected, rtol=1e-8, atol=0)
        assert fit.complexity == np.unique(fit.fitted).shape[0]


def test__pav_fit_calibration_identities(rng, random_dataset):
    for _ in range(1000):
        data = random_dataset(rng, int(rng.integers(1, 200)))
        fit = pir.pav_fit(data)
        scale = max(np.sum(data.weight * np.abs(data.response)), 1.0)
        assert pir.check_autocalibration(fit, data).max() <= \
            1e-10 * max(np.abs(fit.values).max(), 1.0)
        assert abs(pir.balance_gap(fit, data)) <= 1e-10 * scale
        for k in ([1, fit.complexity - 1] if fit.complexity > 1 else []):
            merged = pir.merge_blocks(fit, data, k)
            assert abs(pir.balance_gap(merged, data)) <= 1e-10 * scale
            assert pir.check_autocalibration(merged, data).max() <= \
                1e-10 * max(np.abs(merged.values).max(), 1.0)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=40),
       st.floats(0.1, 100), st.floats(-1e3, 1e3))
def test__pav_fit_affine_equivariance(y, a, b):
    y = np.array(y, dtype=float)
    fit = _fit(y)
    transformed = _fit(a * y + b)
    assert transformed.same_partition(fit)
    scale = max(np.abs(a * y + b).max(), 1.0)
    assert np.allclose(transformed.values, a * fit.values + b, rtol=0,
                       atol=1e-9 * scale)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.floats(-100, 100), st.floats(0.1, 10)),
                min_size=1, max_size=30),
       st.data())
def test__pav_fit_weight_splitting(samples, data):
    y = np.array([s[0] for s in samples])
    w = np.array([s[1] for s in samples])
    j = data.draw(st.integers(0, len(samples) - 1))
    split_y = np.insert(y, j, y[j])
    split_w = np.insert(w, j, w[j] / 2)
    split_w[j + 1] = w[j] / 2
    fit = _fit(y, w)
    split = _fit(split_y, split_w)
    scale = max(np.abs(y).max(), 1.0)
    assert np.allclose(np.delete(split.fitted, j), fit.fitted, rtol=0,
                       atol=1e-9 * scale)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.floats(-100, 100), st.floats(0.1, 10)),
                min_size=1, max_size=50))
def test__pav_fit_idempotence(samples):
    y = np.array([s[0] for s in samples])
    w = np.array([s[1] for s in samples])
    fit = _fit(y, w)
    again = _fit(fit.fitted, w)
    assert again.same_partition(fit)
    assert np.allclose(again.values, fit.values, rtol=0,
                       atol=1e-10 * max(np.abs(y).max(), 1.0))


def test__merge_blocks():
    data = pir.OrderedDataset.from_ordered(np.array([1.0, 2.0, 9.0]))
    fit = pir.pav_fit(data)
    merged = pir.merge_blocks(fit, data, 2)
    assert merged.complexity == 2
    assert np.allclose(merged.values, [1.0, 5.5])

    merged = pir.merge_blocks(fit, data, 1)
    assert (merged.slicing_points == [0, 2, 3]).all()
    assert np.allclose(merged.values, [1.5, 9.0])

    # without data the pooled value comes from the block sums
    assert pir.merge_blocks(fit, None, 1).allclose(merged)


def test__merge_blocks_errors():
    data = pir.OrderedDataset.from_ordered(np.array([3.0, 1.0, 2.0]))
    fit = pir.pav_fit(data)
    with pytest.raises(pir.OutOfRange):
        pir.merge_blocks(fit, data, 1)
    with pytest.raises(IndexError):
        pir.merge_blocks(fit, data, 0)

    # a hand-built fit that does not come from the data
    data = pir.OrderedDataset.from_ordered(np.array([0.0, 10.0, 10.0]))
    fit = pir.IsotonicFit([0, 1, 2, 3], [0.0, 1.0, 2.0], [1.0, 1.0, 1.0])
    assert pir.merge_blocks(fit, None, 1).complexity == 2
    with pytest.raises(pir.WouldBreakMonotonicity):
        pir.merge_blocks(fit, data, 1)
    other = pir.OrderedDataset.from_ordered(np.arange(5.0))
    with pytest.raises(pir.FitDataMismatch):
        pir.merge_blocks(fit, other, 1)


@pytest.mark.slow
def test__pav_fit_large(rng):
    n = 10 ** 7
    y = np.arange(n) / n + rng.standard_normal(n)
    data = pir.OrderedDataset.from_ordered(y)
    start = time.perf_counter()
    fit = pir.pav_fit(data)
    elapsed = time.perf_counter() - start
    assert fit.n == n
    assert abs(pir.balance_gap(fit, data)) <= 1e-10 * np.abs(y).sum()
    assert elapsed < 2.0
