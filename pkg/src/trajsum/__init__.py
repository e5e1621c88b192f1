"""Attractive-location extraction and mobility metrics for symbolic trajectories."""

from trajsum._kernels import BACKEND, HAVE_COMPILED
from trajsum.core import (
    DatasetStats,
    FrequencyTable,
    LocationSymbol,
    SummaryTrajectory,
    SummaryUnit,
    SymbolicTrajectory,
    TrajPoint,
    dataset_stats,
    distinct_locations,
    frequency_table,
    trajectory_from_pairs,
    unit_frequency_table,
)
from trajsum.seqscan import (
    DEFAULT_PARAMS,
    PointClass,
    PointKind,
    SeqScanParams,
    StreamingSummarizer,
    classify_points,
    dataset_goodness,
    dataset_summarization_rate,
    occurrence_weight,
    summarization_rate,
    summarize,
    summarize_dataset,
    symbol_weight,
    trajectory_goodness,
    unit_goodness,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HAVE_COMPILED",
    "DEFAULT_PARAMS",
    "DatasetStats",
    "FrequencyTable",
    "LocationSymbol",
    "PointClass",
    "PointKind",
    "SeqScanParams",
    "StreamingSummarizer",
    "SummaryTrajectory",
    "SummaryUnit",
    "SymbolicTrajectory",
    "TrajPoint",
    "classify_points",
    "dataset_goodness",
    "dataset_stats",
    "dataset_summarization_rate",
    "distinct_locations",
    "frequency_table",
    "occurrence_weight",
    "summarization_rate",
    "summarize",
    "summarize_dataset",
    "symbol_weight",
    "trajectory_from_pairs",
    "trajectory_goodness",
    "unit_frequency_table",
    "unit_goodness",
]
