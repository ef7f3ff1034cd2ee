from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import pytest
import numpy as np

import pyisorecal as pir


@pytest.fixture()
def rng():
    return np.random.default_rng(20261019)


@pytest.fixture(scope="session")
def random_dataset():
    """
    factory of random ordered datasets: standard normal responses, weights
    uniform in (0, 2]
    """
    def make(rng, n, positive=False):
        if positive:
            y = rng.gamma(2.0, 1.0, n) + 0.01
        else:
            y = rng.standard_normal(n)
        w = 2.0 - rng.uniform(0.0, 2.0, n)
        return pir.OrderedDataset.from_ordered(y, w)
    return make


@pytest.fixture()
def unit_dataset():
    def make(y):
        return pir.OrderedDataset.from_ordered(np.asarray(y, dtype=float))
    return make


@pytest.fixture(scope="session")
def training_csv(tmpdir_factory):
    fn = tmpdir_factory.mktemp("data").join("train.csv")
    fn.write("y,w,score,region,age\n"
             "3,1,1,north,young\n"
             "1,1,2,north,old\n"
             "2,1,3,south,old\n"
             "5,2,4,south,young\n"
             "4,1,4,south,old\n"
             "8,1,6,north,old\n")
    return fn


@pytest.fixture(scope="session")
def simple_csv(tmpdir_factory):
    fn = tmpdir_factory.mktemp("data").join("simple.csv")
    fn.write("y,w,score\n3,1,1\n1,1,2\n2,1,3\n")
    return fn
