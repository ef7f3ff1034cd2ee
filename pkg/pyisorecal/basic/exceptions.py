# -*- coding: utf-8 -*-
"""
Exceptions raised by pyIsoRecal

Created on Oct 19 2026
"""
from __future__ import (absolute_import, division, print_function,
                        unicode_literals)


class IsoRecalError(Exception):
    """base class of all package errors"""


class EmptyDataset(IsoRecalError, ValueError):
    def __init__(self, what="dataset"):
        super(EmptyDataset, self).__init__(
            "EmptyDataset: {} has no samples".format(what))


class InvalidSample(IsoRecalError, ValueError):
    def __init__(self, index, reason):
        self.index = index
        where = "" if index is None else " at index {}".format(index)
        super(InvalidSample, self).__init__(
            "InvalidSample: {}{}".format(reason, where))


class TooLarge(IsoRecalError, ValueError):
    def __init__(self, n, limit):
        self.n = n
        super(TooLarge, self).__init__(
            "TooLarge: n={} exceeds the limit of {}".format(n, limit))


class OutOfRange(IsoRecalError, IndexError):
    def __init__(self, k, complexity):
        self.k = k
        super(OutOfRange, self).__init__(
            "OutOfRange: cannot merge block {} and {} of a fit with "
            "K={}".format(k, k + 1, complexity))


class WouldBreakMonotonicity(IsoRecalError, ValueError):
    def __init__(self, k):
        self.k = k
        super(WouldBreakMonotonicity, self).__init__(
            "WouldBreakMonotonicity: merging block {} with {} breaks the "
            "strict ordering of block values".format(k, k + 1))


class FitDataMismatch(IsoRecalError, ValueError):
    def __init__(self, n_fit, n_data):
        super(FitDataMismatch, self).__init__(
            "FitDataMismatch: fit has n={}, data has n={}".format(
                n_fit, n_data))


class NonPositiveValue(IsoRecalError, ValueError):
    def __init__(self, index, what="value"):
        self.index = index
        super(NonPositiveValue, self).__init__(
            "NonPositiveValue: {} at index {} must be > 0".format(
                what, index))


class LengthMismatch(IsoRecalError, ValueError):
    def __init__(self, **lengths):
        items = ", ".join(
            "{}={}".format(k, v) for k, v in sorted(lengths.items()))
        super(LengthMismatch, self).__init__(
            "LengthMismatch: {}".format(items))


class InvalidConfig(IsoRecalError, ValueError):
    def __init__(self, field, reason):
        self.field = field
        super(InvalidConfig, self).__init__(
            "InvalidConfig: {}: {}".format(field, reason))


class MissingColumn(IsoRecalError, ValueError):
    def __init__(self, column, available=()):
        self.column = column
        super(MissingColumn, self).__init__(
            "MissingColumn: no column named '{}' (found: {})".format(
                column, ", ".join(available)))


class MalformedInput(IsoRecalError, ValueError):
    def __init__(self, row, column, reason):
        self.row = row
        self.column = column
        super(MalformedInput, self).__init__(
            "MalformedInput: row {}, column '{}': {}".format(
                row, column, reason))


class UnsupportedModelVersion(IsoRecalError, ValueError):
    def __init__(self, version):
        self.version = version
        super(UnsupportedModelVersion, self).__init__(
            "UnsupportedModelVersion: {}".format(version))


class TheoremViolation(IsoRecalError):
    def __init__(self, count):
        self.count = count
        super(TheoremViolation, self).__init__(
            "TheoremViolation: complexity increased with sigma in {} "
            "coupled comparisons".format(count))


class InvalidModel(IsoRecalError, ValueError):
    def __init__(self, field, reason):
        self.field = field
        super(InvalidModel, self).__init__(
            "InvalidModel: {}: {}".format(field, reason))
