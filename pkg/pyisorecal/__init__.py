from pyisorecal.basic.exceptions import (
    IsoRecalError, EmptyDataset, InvalidSample, TooLarge, OutOfRange,
    WouldBreakMonotonicity, FitDataMismatch, NonPositiveValue,
    LengthMismatch, InvalidConfig, MissingColumn, MalformedInput,
    UnsupportedModelVersion, InvalidModel, TheoremViolation)
from pyisorecal.basic.sample import WeightedSample, OrderedDataset
from pyisorecal.basic.fit import Block, IsotonicFit
from pyisorecal.basic.losses import LossKind, pointwise_loss
from pyisorecal.basic.dataset_file import DatasetFile, write_csv
from pyisorecal.basic.model_file import (
    save_model, load_model, model_to_dict, model_from_dict)

from pyisorecal.isotonic.ties import TieMergePolicy, merge_ties
from pyisorecal.isotonic.pav import pav_fit, merge_blocks
from pyisorecal.isotonic.oracles import (
    minmax_fit, brute_force_fit, kkt_certificate)

from pyisorecal.calibration.recalibrator import (
    Recalibrator, recalibrate, predict_midpoint, predict_step)
from pyisorecal.calibration.partition import (
    PartitionLabeling, assign_partition, marginal_summary, cohort_profile)
from pyisorecal.calibration.diagnostics import (
    check_autocalibration, balance_gap, mean_loss, rmse,
    loss_improvement_check, loss_table, reliability_points,
    recalibration_report)

from pyisorecal.simulation.config import (
    SimulationConfig, NoiseFamily, linear_mu)
from pyisorecal.simulation.coupled import (
    ComplexityCurve, sample_coupled, complexity_curve,
    check_pointwise_monotone)

from pyisorecal._version import __version__
