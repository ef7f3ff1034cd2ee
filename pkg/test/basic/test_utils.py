# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import numpy as np

from pyisorecal.basic import utils


def test__split_sequence():
    sequence = [1] * 9
    length = 2
    output = [[1, 1]] * 4 + [[1]]
    assert list(utils.split_sequence(sequence, length)) == output


def test__block_means():
    y = np.array([1.0, 3.0, 2.0, 4.0])
    w = np.array([1.0, 1.0, 3.0, 1.0])
    means, weights = utils.block_means(y, w, np.array([0, 1, 3, 4]))
    assert np.allclose(means, [1.0, 2.25, 4.0], rtol=0, atol=1e-15)
    assert (weights == [1.0, 4.0, 1.0]).all()


def test__block_means_compensated(rng):
    y = np.full(100000, 0.1)
    w = rng.uniform(0.5, 2.0, y.shape[0])
    means, _ = utils.block_means(y, w, np.array([0, y.shape[0]]))
    assert abs(means[0] - 0.1) < 1e-15


def test__equal_neighbours():
    values = np.array([1.0, 1.0 + 1e-14, 2.0, 3.0])
    assert list(utils.equal_neighbours(values)) == [True, False, False]
    assert utils.equal_neighbours(np.array([5.0])).shape == (0,)


def test__equal_neighbours_pairwise_relative():
    values = np.array([0.0, 1e-7, 5e-7, 1e6, 1e6 * (1 + 1e-14)])
    assert list(utils.equal_neighbours(values)) == [False, False, False, True]
    assert list(utils.equal_neighbours(np.zeros(3))) == [True, True]
