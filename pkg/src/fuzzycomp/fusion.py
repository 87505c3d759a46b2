"""Fusing similarity and distance into one signed comparative value.

The comparative measure folds (1 - similarity) and the normalized directional
distance through an OWA operator ordered by magnitude. Its sign follows the
distance sign; magnitude 0 means identical, 1 means maximally apart. The
complement flips the reading so that 1 means identical, which is the handier
form for classification.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ValidationError
from .measures import AlphaGrid, GridSpec, alpha_distance, jaccard
from .sets import TOL, FuzzySet


@dataclass(frozen=True)
class WeightVector:
    """OWA weights; non-negative, summing to 1."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValidationError("weight vector cannot be empty")
        if any(v < 0.0 or v > 1.0 for v in vals):
            raise ValidationError(f"weights must lie in [0, 1], got {vals}")
        if abs(sum(vals) - 1.0) > TOL:
            raise ValidationError(f"weights must sum to 1, got sum {sum(vals)}")

    def __len__(self) -> int:
        return len(self.values)


DEFAULT_WEIGHTS = WeightVector((0.7, 0.3))


@dataclass(frozen=True)
class ComparativeConfig:
    """Knobs for the comparative measure."""

    weights: WeightVector = DEFAULT_WEIGHTS
    alpha_levels: int = 100
    lambda_override: float | None = None
    directional: bool = True
    strict_convexity: bool = False
    grid: GridSpec = field(default_factory=GridSpec)

    def __post_init__(self):
        if len(self.weights) != 2:
            raise ValidationError(
                f"comparative fusion needs exactly 2 weights, got {len(self.weights)}"
            )
        if self.lambda_override is not None and self.lambda_override <= 0.0:
            raise ValidationError(
                f"lambda must be positive, got {self.lambda_override}"
            )


@dataclass(frozen=True)
class ComparisonReport:
    """All measures for one ordered pair of sets."""

    similarity: float
    distance: float
    normalized_distance: float
    comparative: float
    complement: float
    lambda_: float


def owa(
    values: Sequence[float],
    weights: WeightVector,
    ordering: str = "standard",
) -> float:
    """Ordered weighted average of values.

    ordering "standard" sorts the values descending before applying the
    weights positionally; "absolute" sorts by descending magnitude, which
    lets a signed input keep its sign through the aggregation.
    """
    if ordering not in ("standard", "absolute"):
        raise ValidationError(f"unknown OWA ordering: {ordering!r}")
    if len(values) != len(weights):
        raise ValidationError(
            f"got {len(values)} values for {len(weights)} weights"
        )
    key = abs if ordering == "absolute" else None
    ranked = sorted((float(v) for v in values), key=key, reverse=True)
    total = 0.0
    for w, v in zip(weights.values, ranked):
        total += w * v
    return total


def comparative_from_measures(
    similarity: float,
    normalized_distance: float,
    weights: WeightVector = DEFAULT_WEIGHTS,
) -> float:
    """Fuse a precomputed similarity and normalized distance.

    The dissimilarity (1 - s) enters with the sign of the distance so the
    fused value keeps the distance's direction; ordering by magnitude then
    makes the dominant evidence carry the larger weight.
    """
    if not 0.0 <= similarity <= 1.0:
        raise ValidationError(f"similarity out of range [0, 1]: {similarity}")
    if not -1.0 <= normalized_distance <= 1.0:
        raise ValidationError(
            f"normalized distance out of range [-1, 1]: {normalized_distance}"
        )
    dissim = 1.0 - similarity
    if normalized_distance < 0.0:
        dissim = -dissim
    return owa((dissim, normalized_distance), weights, ordering="absolute")


def comparative(
    a: FuzzySet,
    b: FuzzySet,
    config: ComparativeConfig | None = None,
) -> ComparisonReport:
    """Measure how far and in which direction b sits from a.

    Computes jaccard similarity on the configured sample grid, the
    alpha-cut distance (directional unless configured otherwise), normalizes
    the distance by lambda (the universe width unless overridden), and fuses
    the two through the magnitude-ordered OWA.
    """
    if config is None:
        config = ComparativeConfig()
    s = jaccard(a, b, config.grid.build(a.universe))
    d = alpha_distance(
        a,
        b,
        AlphaGrid(config.alpha_levels),
        directional=config.directional,
        strict_convex=config.strict_convexity,
    )
    lam = (
        config.lambda_override
        if config.lambda_override is not None
        else a.universe.width
    )
    nd = d / lam
    if not -1.0 <= nd <= 1.0:
        raise ValidationError(
            f"normalized distance out of range [-1, 1]: {nd} (lambda too small)"
        )
    c = comparative_from_measures(s, nd, config.weights)
    return ComparisonReport(
        similarity=s,
        distance=d,
        normalized_distance=nd,
        comparative=c,
        complement=comparative_complement(c),
        lambda_=lam,
    )


def comparative_complement(c: float) -> float:
    """Flip the comparative reading so 1 means identical.

    Positive side maps c to 1 - c; negative side to -1 - c, preserving the
    sign convention.
    """
    if not -1.0 <= c <= 1.0:
        raise ValidationError(f"comparative value out of range [-1, 1]: {c}")
    return 1.0 - c if c >= 0.0 else -1.0 - c
