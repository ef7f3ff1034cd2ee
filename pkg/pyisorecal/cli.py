# -*- coding: utf-8 -*-
"""
Command line interface

    pyisorecal recalibrate data.csv -o model.json
    pyisorecal predict model.json scores.csv --mode step
    pyisorecal partition model.json data.csv -o labels.csv
    pyisorecal edit model.json --merge high -o edited.json
    pyisorecal simulate --n 100 --sigmas 1 2 5 --seed 7 -o curve.csv
    pyisorecal diagnose predictions.csv

Exit codes: 0 success, 2 malformed input, 3 I/O failure, 4 complexity
increasing with sigma in a coupled simulation.

Created on Oct 20 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import argparse
import json
import logging
import sys
from collections import OrderedDict

import numpy as np
import pandas as pd

from pyisorecal._version import __version__
from pyisorecal.basic.dataset_file import (
    DEFAULT_RESPONSE, DEFAULT_SCORE, DEFAULT_WEIGHT, DatasetFile,
    numeric_column, read_table, write_csv)
from pyisorecal.basic.exceptions import (
    InvalidModel, IsoRecalError, MissingColumn, TheoremViolation)
from pyisorecal.basic.model_file import json_default, load_model, save_model
from pyisorecal.calibration.diagnostics import (
    loss_table, recalibration_report, reliability_points)
from pyisorecal.calibration.partition import (
    assign_partition, marginal_summary)
from pyisorecal.calibration.recalibrator import recalibrate
from pyisorecal.isotonic.ties import merge_ties
from pyisorecal.simulation.config import SimulationConfig
from pyisorecal.simulation.coupled import (
    check_pointwise_monotone, complexity_curve)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MALFORMED = 2
EXIT_IO = 3
EXIT_THEOREM = 4


def _add_columns(parser, weight=True):
    parser.add_argument("--response", default=DEFAULT_RESPONSE,
                        help="response column (default: %(default)s)")
    if weight:
        parser.add_argument("--weight", default=DEFAULT_WEIGHT,
                            help="weight column, unit weights when absent "
                                 "(default: %(default)s)")
    parser.add_argument("--score", default=DEFAULT_SCORE,
                        help="score column (default: %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pyisorecal",
        description="Isotonic recalibration of regression model scores")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more log output (-vv for debug)")
    parser.add_argument("-q", "--quiet", action="store_true",
                        help="only log errors")
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p = sub.add_parser("recalibrate", help="fit a recalibration model")
    p.add_argument("input", help="CSV with response, weight and score")
    _add_columns(p)
    p.add_argument("-o", "--output", required=True, help="model JSON path")
    p.add_argument("--report", help="write the report as JSON here")
    p.set_defaults(func=cmd_recalibrate)

    p = sub.add_parser("predict", help="predict from scores")
    p.add_argument("model", help="model JSON")
    p.add_argument("input", help="CSV with a score column")
    p.add_argument("--score", default=DEFAULT_SCORE,
                   help="score column (default: %(default)s)")
    p.add_argument("--mode", choices=["step", "midpoint"], default="step")
    p.add_argument("-o", "--output", help="prediction CSV, stdout if absent")
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("partition",
                       help="label rows with their cohort and summarise "
                            "covariates")
    p.add_argument("model", help="model JSON")
    p.add_argument("input", help="CSV with scores and covariate columns")
    _add_columns(p)
    p.add_argument("--covariates", nargs="+",
                   help="covariate columns (default: all other columns)")
    p.add_argument("--bins", type=int,
                   help="bin numeric covariates into this many intervals")
    p.add_argument("-o", "--output", required=True,
                   help="partition CSV")
    p.add_argument("--marginal-output", help="marginal summary CSV")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("edit", help="merge two adjacent blocks of a model")
    p.add_argument("model", help="model JSON")
    p.add_argument("--merge", required=True,
                   help="'low', 'high' or a 1-based block index k")
    p.add_argument("--data", help="training CSV, pools by its responses")
    _add_columns(p)
    p.add_argument("-o", "--output", required=True, help="new model JSON")
    p.add_argument("--report", help="write the report as JSON here")
    p.set_defaults(func=cmd_edit)

    p = sub.add_parser("simulate",
                       help="complexity number under coupled noise")
    p.add_argument("--config", help="simulation JSON file")
    p.add_argument("--n", type=int, help="sample size for linear mu")
    p.add_argument("--mu", default="linear",
                   help="'linear' or a CSV file of location parameters")
    p.add_argument("--mu-column", default="mu")
    p.add_argument("--sigmas", type=float, nargs="+")
    p.add_argument("--noise", default="gaussian",
                   choices=["gaussian", "student-t", "uniform"])
    p.add_argument("--df", type=float, default=5.0,
                   help="degrees of freedom of student-t noise")
    p.add_argument("--replicates", type=int, default=1000)
    p.add_argument("--seed", type=int)
    p.add_argument("--n-jobs", type=int, default=1)
    p.add_argument("-o", "--output", help="curve CSV, stdout if absent")
    p.add_argument("--replicates-output",
                   help="CSV of K per replicate and sigma")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("diagnose",
                       help="reliability diagram points and losses")
    p.add_argument("input", help="CSV with predictions and outcomes")
    p.add_argument("--prediction", default="prediction")
    p.add_argument("--response", default=DEFAULT_RESPONSE)
    p.add_argument("--weight", default=DEFAULT_WEIGHT)
    p.add_argument("-o", "--output", help="reliability CSV")
    p.add_argument("--report", help="write the loss table as JSON here")
    p.set_defaults(func=cmd_diagnose)
    return parser


def _read_dataset(path, args):
    return DatasetFile.from_csv(path, response=args.response,
                                weight=args.weight, score=args.score)


def _load_model(path):
    try:
        return load_model(path)
    except OSError as exc:
        raise InvalidModel(str(path), "cannot read: {}".format(
            exc.strerror or exc))


def _write_report(report, path):
    with open(str(path), "w") as fl:
        json.dump(report, fl, indent=4, default=json_default)


def _print_report(report):
    print("complexity K = {}".format(report["complexity"]))
    print(pd.DataFrame(report["blocks"]).to_string(index=False))
    print("max auto-calibration gap = {:.3g}".format(
        report["max_autocalibration_gap"]))
    print("balance gap = {:.3g}".format(report["balance_gap"]))
    print(pd.DataFrame(report["losses"]).set_index("model").to_string())


def cmd_recalibrate(args):
    dataset = _read_dataset(args.input, args)
    data = merge_ties(dataset.samples())
    model = recalibrate(data)
    save_model(model, args.output, input_digest=dataset.digest)
    report = recalibration_report(model, data)
    if args.report:
        _write_report(report, args.report)
    _print_report(report)
    return EXIT_OK


def cmd_predict(args):
    model = _load_model(args.model)
    frame = read_table(args.input)
    scores = numeric_column(frame, args.score)
    if args.mode == "step":
        values, blocks = model.predict_step(scores)
        frame["prediction"] = values
        frame["block"] = blocks
    else:
        frame["prediction"] = model.predict_midpoint(scores)
    write_csv(frame, args.output if args.output else sys.stdout)
    return EXIT_OK


def cmd_partition(args):
    model = _load_model(args.model)
    dataset = _read_dataset(args.input, args)
    labeling = assign_partition(model, dataset.score)
    frame = dataset.to_frame(response=args.response, weight=args.weight,
                             score=args.score)
    frame["block"] = labeling.labels
    frame["block_value"] = labeling.block_values[labeling.labels - 1]
    write_csv(frame, args.output)

    covariates = args.covariates or list(dataset.covariates.columns)
    tables = []
    for name in covariates:
        if name not in frame.columns:
            raise MissingColumn(name, list(frame.columns))
        column = frame[name].to_numpy()
        bins = None
        if args.bins:
            column = pd.to_numeric(pd.Series(column), errors="coerce")
            bins = args.bins
        table = marginal_summary(labeling, column, dataset.weight, bins)
        table.index = table.index.astype(str)
        table.insert(0, "covariate", name)
        tables.append(table.reset_index())
    if tables:
        marginal = pd.concat(tables, ignore_index=True)
        print(marginal.to_string(index=False))
        if args.marginal_output:
            write_csv(marginal, args.marginal_output)
    return EXIT_OK


def _parse_merge(value, model):
    if value == "low":
        return model.merge_low
    if value == "high":
        return model.merge_high
    try:
        k = int(value)
    except ValueError:
        raise ValueError("--merge must be 'low', 'high' or an integer, "
                         "got '{}'".format(value))
    return lambda data=None: model.merge_blocks(k, data)


def cmd_edit(args):
    model = _load_model(args.model)
    data = None
    digest = None
    if args.data:
        dataset = _read_dataset(args.data, args)
        data = merge_ties(dataset.samples())
        digest = dataset.digest
    edited = _parse_merge(args.merge, model)(data)
    save_model(edited, args.output, input_digest=digest)
    if data is not None:
        report = recalibration_report(edited, data)
        _print_report(report)
    else:
        report = OrderedDict([
            ("complexity", edited.complexity),
            ("blocks", edited.block_table().to_dict(orient="records")),
            ("edits", edited.edits),
        ])
        print("complexity K = {}".format(edited.complexity))
        print(edited.block_table().to_string(index=False))
    if args.report:
        _write_report(report, args.report)
    return EXIT_OK


def _simulation_config(args):
    if args.config:
        return SimulationConfig.from_json(args.config)
    params = OrderedDict([("sigmas", args.sigmas), ("noise", args.noise),
                          ("df", args.df), ("replicates", args.replicates),
                          ("seed", args.seed)])
    if args.mu == "linear":
        params["mu"] = "linear"
        params["n"] = args.n
    else:
        params["mu"] = {"csv": args.mu, "column": args.mu_column}
        if args.n is not None:
            params["n"] = args.n
    if args.sigmas is None:
        del params["sigmas"]
    return SimulationConfig.from_dict(params)


def cmd_simulate(args):
    config = _simulation_config(args)
    curve = complexity_curve(config, n_jobs=args.n_jobs)
    write_csv(curve.to_frame(), args.output if args.output else sys.stdout)
    if args.replicates_output:
        write_csv(curve.replicate_frame(), args.replicates_output,
                  index=True)
    count = check_pointwise_monotone(config, curve)
    print("violations = {}".format(count), file=sys.stderr)
    if count:
        raise TheoremViolation(count)
    return EXIT_OK


def cmd_diagnose(args):
    frame = read_table(args.input)
    predictions = numeric_column(frame, args.prediction)
    outcomes = numeric_column(frame, args.response)
    if args.weight in frame.columns or args.weight != DEFAULT_WEIGHT:
        weights = numeric_column(frame, args.weight)
    else:
        weights = np.ones_like(outcomes)
    points = reliability_points(predictions, outcomes, weights)
    if args.output:
        write_csv(points, args.output)
    print(points.to_string(index=False))
    null = np.full_like(outcomes,
                        np.sum(weights * outcomes) / np.sum(weights))
    table = loss_table(outcomes, weights, OrderedDict([
        ("null model", null), ("prediction", predictions)]))
    print(table.to_string())
    if args.report:
        _write_report(OrderedDict([
            ("complexity", int(points.shape[0])),
            ("losses", table.reset_index().rename(
                columns={"index": "model"}).to_dict(orient="records")),
        ]), args.report)
    return EXIT_OK


def setup_logging(verbose=0, quiet=False):
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """
    Run one command and return its exit code
    """
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.quiet)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        logger.error("%s", exc)
        return EXIT_THEOREM
    except OSError as exc:
        logger.error("%s", exc)
        return EXIT_IO
    except (IsoRecalError, ValueError, IndexError) as exc:
        logger.error("%s", exc)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
