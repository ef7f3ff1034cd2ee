# -*- coding: utf-8 -*-
"""
Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import pytest
import numpy as np

import pyisorecal as pir


def test__dataset_file(training_csv):
    dataset = pir.DatasetFile.from_csv(str(training_csv))
    assert dataset.n == 6
    assert (dataset.score == [1, 2, 3, 4, 4, 6]).all()
    assert (dataset.weight == [1, 1, 1, 2, 1, 1]).all()
    assert list(dataset.covariates.columns) == ["region", "age"]
    assert dataset.covariates["region"][0] == "north"
    assert len(dataset.digest) == 64


def test__dataset_file_default_weight(tmpdir):
    fn = tmpdir.join("no_weight.csv")
    fn.write("score,y\n0.5,1\n0.7,2\n")
    dataset = pir.DatasetFile.from_csv(str(fn))
    assert (dataset.weight == 1).all()
    with pytest.raises(pir.MissingColumn):
        pir.DatasetFile.from_csv(str(fn), weight="exposure")


def test__dataset_file_column_flags(tmpdir):
    fn = tmpdir.join("renamed.csv")
    fn.write("claims,exposure,pred\n1,0.5,2\n")
    dataset = pir.DatasetFile.from_csv(str(fn), response="claims",
                                       weight="exposure", score="pred")
    assert dataset.response[0] == 1
    assert dataset.weight[0] == 0.5
    assert dataset.score[0] == 2


def test__dataset_file_errors(tmpdir):
    fn = tmpdir.join("missing.csv")
    fn.write("w,score\n1,1\n")
    with pytest.raises(pir.MissingColumn) as excinfo:
        pir.DatasetFile.from_csv(str(fn))
    assert "'y'" in str(excinfo.value)

    fn = tmpdir.join("bad.csv")
    fn.write("y,w,score\n1,1,1\n2,1,abc\n")
    with pytest.raises(pir.MalformedInput) as excinfo:
        pir.DatasetFile.from_csv(str(fn))
    assert excinfo.value.row == 2
    assert excinfo.value.column == "score"

    fn = tmpdir.join("negative.csv")
    fn.write("y,w,score\n1,-1,1\n")
    with pytest.raises(pir.MalformedInput):
        pir.DatasetFile.from_csv(str(fn))

    fn = tmpdir.join("header_only.csv")
    fn.write("y,w,score\n")
    with pytest.raises(pir.EmptyDataset):
        pir.DatasetFile.from_csv(str(fn))


def test__dataset_file_csv_exact(tmpdir, rng):
    n = 500
    original = pir.DatasetFile(rng.standard_normal(n) * 1e3,
                               rng.uniform(0.1, 2.0, n),
                               rng.standard_normal(n) / 7)
    fn = tmpdir.join("written.csv")
    original.to_csv(str(fn))
    restored = pir.DatasetFile.from_csv(str(fn))
    assert (restored.response == original.response).all()
    assert (restored.weight == original.weight).all()
    assert (restored.score == original.score).all()
