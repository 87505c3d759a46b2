"""Fuzzy set comparison with a fused similarity/distance measure."""

from .analysis import (
    ClassificationResult,
    ComparisonMatrix,
    classify,
    matrix,
    rank,
    select_best,
    weight_sweep,
)
from .errors import AmbiguousClassificationError, ValidationError
from .fileio import read_ratings, read_set, write_set
from .fusion import (
    ComparativeConfig,
    ComparisonReport,
    WeightVector,
    comparative,
    comparative_complement,
    comparative_from_measures,
    owa,
)
from .measures import (
    AlphaGrid,
    GridSpec,
    SampleGrid,
    alpha_distance,
    interval_hausdorff,
    interval_hausdorff_directional,
    jaccard,
)
from .sets import FuzzySet, Interval, SetProfile, Universe, build_from_samples

__version__ = "0.1.0"

__all__ = [
    "AlphaGrid",
    "AmbiguousClassificationError",
    "ClassificationResult",
    "ComparativeConfig",
    "ComparisonMatrix",
    "ComparisonReport",
    "FuzzySet",
    "GridSpec",
    "Interval",
    "SampleGrid",
    "SetProfile",
    "Universe",
    "ValidationError",
    "WeightVector",
    "alpha_distance",
    "build_from_samples",
    "classify",
    "comparative",
    "comparative_complement",
    "comparative_from_measures",
    "interval_hausdorff",
    "interval_hausdorff_directional",
    "jaccard",
    "matrix",
    "owa",
    "rank",
    "read_ratings",
    "read_set",
    "select_best",
    "weight_sweep",
    "write_set",
    "__version__",
]
