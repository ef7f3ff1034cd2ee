# -*- coding: utf-8 -*-
"""
Versioned JSON persistence of Recalibrator models

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import json
import logging
from collections import OrderedDict
from datetime import datetime, timezone

import numpy as np

from pyisorecal._version import __version__
from pyisorecal.basic.exceptions import InvalidModel, UnsupportedModelVersion
from pyisorecal.basic.fit import IsotonicFit
from pyisorecal.calibration.recalibrator import Recalibrator

logger = logging.getLogger(__name__)

MODEL_VERSION = 1


def json_default(obj):
    "json.dump hook for numpy scalars and arrays"
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError("{!r} is not JSON serializable".format(obj))


def model_to_dict(model, input_digest=None):
    """
    Parameters
    ----------
    model : Recalibrator
    input_digest : str, optional
        sha256 of the training file

    Returns
    -------
    OrderedDict
    """
    fit = model.fit
    return OrderedDict([
        ("version", MODEL_VERSION),
        ("breakpoints", model.breakpoints.tolist()),
        ("slicing_points", fit.slicing_points.tolist()),
        ("block_values", fit.values.tolist()),
        ("block_weights", fit.weights.tolist()),
        ("complexity", fit.complexity),
        ("score_range", list(model.score_range)),
        ("n_samples", model.n_samples),
        ("edits", model.edits),
        ("metadata", OrderedDict([
            ("created", datetime.now(timezone.utc).isoformat()),
            ("input_digest", input_digest),
            ("tool_version", __version__),
        ])),
    ])


def model_from_dict(document):
    """
    Rebuild a Recalibrator, dispatching on the "version" field

    Raises
    ------
    UnsupportedModelVersion, InvalidModel
    """
    if not isinstance(document, dict):
        raise InvalidModel("document", "expected a JSON object")
    version = document.get("version")
    if version == 1:
        return _parse_model_v1(document)
    raise UnsupportedModelVersion(version)


def _parse_model_v1(document):
    try:
        breakpoints = document["breakpoints"]
        fit = IsotonicFit(document["slicing_points"],
                          document["block_values"],
                          document["block_weights"])
        model = Recalibrator(breakpoints, fit,
                             score_range=document.get("score_range"),
                             edits=document.get("edits", []),
                             n_samples=document.get("n_samples"))
    except KeyError as exc:
        raise InvalidModel(exc.args[0], "missing")
    except (TypeError, ValueError) as exc:
        raise InvalidModel("fit", str(exc))
    complexity = document.get("complexity", model.complexity)
    if complexity != model.complexity:
        raise InvalidModel("complexity", "{} does not match {} "
                           "blocks".format(complexity, model.complexity))
    return model


def save_model(model, json_file, input_digest=None):
    with open(str(json_file), "w") as fl:
        json.dump(model_to_dict(model, input_digest), fl, indent=4,
                  default=json_default)
    logger.debug("saved %s to %s", model, json_file)


def load_model(json_file):
    """
    Read a model file written by save_model

    Returns
    -------
    Recalibrator
    """
    with open(str(json_file), "r") as fl:
        try:
            document = json.load(fl, object_pairs_hook=OrderedDict)
        except ValueError as exc:
            raise InvalidModel(str(json_file), "not valid JSON: {}".format(
                exc))
    return model_from_dict(document)
