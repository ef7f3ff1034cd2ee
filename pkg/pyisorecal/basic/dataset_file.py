# -*- coding: utf-8 -*-
"""
class DatasetFile for reading and writing (response, weight, score) CSV files

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import hashlib
import logging

import numpy as np
import pandas as pd

from pyisorecal.basic.exceptions import (
    EmptyDataset, MalformedInput, MissingColumn)
from pyisorecal.basic.sample import check_arrays

logger = logging.getLogger(__name__)

DEFAULT_RESPONSE = "y"
DEFAULT_WEIGHT = "w"
DEFAULT_SCORE = "score"
FLOAT_FORMAT = "%.17g"


def file_digest(path):
    "sha256 hex digest of a file"
    sha = hashlib.sha256()
    with open(str(path), "rb") as fl:
        for chunk in iter(lambda: fl.read(1 << 20), b""):
            sha.update(chunk)
    return sha.hexdigest()


def read_table(csv_file):
    """
    Read a CSV file keeping every cell as a string

    Raises
    ------
    EmptyDataset
        if the file has no header
    """
    try:
        return pd.read_csv(str(csv_file), dtype=str, keep_default_na=False,
                           encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise EmptyDataset(str(csv_file))


def _to_float(text):
    try:
        return float(text)
    except ValueError:
        return np.nan


def numeric_column(frame, column):
    """
    Parse one column of a string table as finite floats

    Parameters
    ----------
    frame : pandas.DataFrame
        as returned by read_table
    column : str

    Returns
    -------
    1-d ndarray

    Raises
    ------
    MissingColumn
    MalformedInput
        row is the 1-based data row (the header is not counted)
    """
    if column not in frame.columns:
        raise MissingColumn(column, list(frame.columns))
    values = np.array([_to_float(text) for text in frame[column]],
                      dtype=np.float64)
    bad = ~np.isfinite(values)
    if bad.any():
        row = int(np.argmax(bad))
        raise MalformedInput(row + 1, column, "'{}' is not a finite "
                             "number".format(frame[column].iloc[row]))
    return values


class DatasetFile(object):
    """
    Responses, weights, scores and free-form covariates of a CSV file

    Parameters
    ----------
    response, weight, score : array_like
    covariates : pandas.DataFrame, optional
        string columns, one row per sample
    """
    def __init__(self, response, weight, score, covariates=None):
        self.response = np.array(response, dtype=np.float64)
        self.weight = np.array(weight, dtype=np.float64)
        self.score = np.array(score, dtype=np.float64)
        check_arrays(self.response, self.weight, self.score)
        if covariates is None:
            covariates = pd.DataFrame(index=range(self.n))
        self.covariates = covariates.reset_index(drop=True)
        self.digest = None

    def __str__(self):
        return "DatasetFile(n={}, covariates={})".format(
            self.n, list(self.covariates.columns))

    @property
    def n(self):
        return self.response.shape[0]

    @classmethod
    def from_csv(cls, csv_file, response=DEFAULT_RESPONSE,
                 weight=DEFAULT_WEIGHT, score=DEFAULT_SCORE):
        """
        Parameters
        ----------
        csv_file : str
            comma separated, header in the first row
        response, weight, score : str
            column names; a missing weight column means unit weights
            unless a non-default name was asked for

        Returns
        -------
        DatasetFile
        """
        frame = read_table(csv_file)
        if frame.shape[0] == 0:
            raise EmptyDataset(str(csv_file))
        y = numeric_column(frame, response)
        s = numeric_column(frame, score)
        if weight in frame.columns or weight != DEFAULT_WEIGHT:
            w = numeric_column(frame, weight)
            if (w <= 0).any():
                row = int(np.argmax(w <= 0))
                raise MalformedInput(row + 1, weight, "weight must be "
                                     "positive")
        else:
            w = np.ones_like(y)
        roles = {response, weight, score}
        covariates = frame[[c for c in frame.columns if c not in roles]]
        dataset = cls(y, w, s, covariates)
        dataset.digest = file_digest(csv_file)
        logger.debug("read %s from %s", dataset, csv_file)
        return dataset

    def samples(self):
        "frame with columns response, weight, score for merge_ties"
        return pd.DataFrame({"response": self.response,
                             "weight": self.weight, "score": self.score})

    def to_frame(self, response=DEFAULT_RESPONSE, weight=DEFAULT_WEIGHT,
                 score=DEFAULT_SCORE):
        frame = pd.DataFrame({response: self.response, weight: self.weight,
                              score: self.score})
        for col in self.covariates.columns:
            frame[col] = self.covariates[col].to_numpy()
        return frame

    def to_csv(self, csv_file, **columns):
        write_csv(self.to_frame(**columns), csv_file)


def write_csv(frame, csv_file, index=False):
    "write with 17 significant digits so floats read back exactly"
    if not hasattr(csv_file, "write"):
        csv_file = str(csv_file)
    frame.to_csv(csv_file, index=index, float_format=FLOAT_FORMAT,
                 encoding="utf-8")
