# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import pytest
import numpy as np

import pyisorecal as pir


@pytest.fixture()
def fit():
    return pir.IsotonicFit([0, 1, 3, 4], [1.0, 2.5, 4.0], [1.0, 2.0, 1.0])


def test__isotonic_fit(fit):
    assert fit.n == 4
    assert fit.complexity == 3
    assert (fit.fitted == [1, 2.5, 2.5, 4]).all()
    assert (fit.labels == [1, 2, 2, 3]).all()
    assert fit.blocks[1] == pir.Block(2, 3, 2.5, 2.0)
    assert fit.blocks[1].size == 2


def test__isotonic_fit_invalid():
    with pytest.raises(ValueError):
        pir.IsotonicFit([1, 2], [1.0], [1.0])
    with pytest.raises(ValueError):
        pir.IsotonicFit([0, 2, 2], [1.0, 2.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        pir.IsotonicFit([0, 1, 2], [2.0, 2.0], [1.0, 1.0])
    with pytest.raises(ValueError):
        pir.IsotonicFit([0, 1, 2], [1.0, 2.0], [1.0, 0.0])
    with pytest.raises(ValueError):
        pir.IsotonicFit([0, 1, 2], [1.0], [1.0])


def test__allclose(fit):
    other = pir.IsotonicFit([0, 1, 3, 4], [1.0, 2.5 + 1e-12, 4.0],
                            [1.0, 2.0, 1.0])
    assert fit.same_partition(other)
    assert fit.allclose(other)
    shifted = pir.IsotonicFit([0, 2, 3, 4], [1.0, 2.5, 4.0], [1, 1, 1])
    assert not fit.allclose(shifted)


def test__coarsen_refine():
    # samples 0..4 in groups {0}, {1, 2}, {3, 4}
    group_starts = np.array([0, 1, 3, 5])
    fine = pir.IsotonicFit([0, 3, 5], [1.0, 2.0], [3.0, 2.0])
    coarse = fine.coarsen(group_starts)
    assert coarse.n == 3
    assert (coarse.slicing_points == [0, 2, 3]).all()
    assert coarse.refine(group_starts).same_partition(fine)
    splitting = pir.IsotonicFit([0, 2, 5], [1.0, 2.0], [2.0, 3.0])
    with pytest.raises(ValueError):
        splitting.coarsen(group_starts)
