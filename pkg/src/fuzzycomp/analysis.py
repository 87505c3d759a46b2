"""Workflows built on the comparative measure: pairwise matrices, ranking
candidates against a reference, nearest-prototype classification, and
sensitivity sweeps over the fusion weights.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .errors import AmbiguousClassificationError, ValidationError
from .fusion import (
    ComparativeConfig,
    ComparisonReport,
    WeightVector,
    comparative,
    comparative_from_measures,
)
from .sets import FuzzySet

# Two scores this close count as a tie.
TIE_TOL = 1e-9


@dataclass(frozen=True)
class ComparisonMatrix:
    """Full pairwise comparison table; entries[i][j] compares sets i -> j."""

    names: tuple[str, ...]
    entries: tuple[tuple[ComparisonReport, ...], ...]


@dataclass(frozen=True)
class ClassificationResult:
    best_label: str
    scores: dict[str, float]
    margin: float


def _check_unique_names(names: Sequence[str]) -> None:
    seen = set()
    for n in names:
        if n in seen:
            raise ValidationError(f"duplicate set name: {n!r}")
        seen.add(n)


def matrix(
    sets: Sequence[FuzzySet],
    config: ComparativeConfig | None = None,
) -> ComparisonMatrix:
    """Compare every ordered pair. The diagonal is the zero comparison and,
    under the directional measure, entries mirror with flipped sign."""
    if len(sets) < 2:
        raise ValidationError("matrix needs at least 2 sets")
    _check_unique_names([s.name for s in sets])
    rows = tuple(
        tuple(comparative(a, b, config) for b in sets) for a in sets
    )
    return ComparisonMatrix(names=tuple(s.name for s in sets), entries=rows)


def rank(
    reference: FuzzySet,
    candidates: Sequence[FuzzySet],
    config: ComparativeConfig | None = None,
) -> list[tuple[str, ComparisonReport]]:
    """Order candidates from most to least similar to the reference.

    Sorts ascending by |comparative|; equal magnitudes fall back to the
    candidate name so the ordering is total and reproducible.
    """
    if not candidates:
        raise ValidationError("rank needs at least 1 candidate")
    _check_unique_names([c.name for c in candidates])
    scored = [(c.name, comparative(reference, c, config)) for c in candidates]
    scored.sort(key=lambda item: (abs(item[1].comparative), item[0]))
    return scored


def select_best(scores: Mapping[str, float]) -> tuple[str, float]:
    """Pick the label whose complement score sits nearest 1 in magnitude.

    The complement's magnitude runs toward 1 for a perfect match while its
    sign only records direction, so candidates are compared by |score|.
    Returns (label, margin over the runner-up); a tie is refused rather than
    broken silently.
    """
    if len(scores) < 2:
        raise ValidationError("selection needs at least 2 scored labels")
    ordered = sorted(scores.items(), key=lambda kv: (-abs(kv[1]), kv[0]))
    (best, best_score), (second, second_score) = ordered[0], ordered[1]
    margin = abs(best_score) - abs(second_score)
    if margin <= TIE_TOL:
        raise AmbiguousClassificationError([best, second])
    return best, margin


def classify(
    prototypes: Mapping[str, FuzzySet],
    value: FuzzySet,
    config: ComparativeConfig | None = None,
) -> ClassificationResult:
    """Assign the input to the prototype it matches best.

    Each prototype is compared against the input (prototype first, so the
    sign reads as "where the input sits relative to the word"), and scored by
    the complement.
    """
    if len(prototypes) < 2:
        raise ValidationError("classify needs at least 2 prototypes")
    scores = {
        label: comparative(proto, value, config).complement
        for label, proto in prototypes.items()
    }
    best, margin = select_best(scores)
    return ClassificationResult(best_label=best, scores=scores, margin=margin)


def weight_sweep(
    similarity: float,
    normalized_distance: float,
    steps: int = 11,
) -> list[tuple[float, float, float]]:
    """Comparative value as the first OWA weight runs from 0 to 1.

    Returns (w1, w2, c) rows for `steps` uniformly spaced weight splits.
    Because the OWA ordering is fixed by the inputs, c is affine in w1.
    """
    if steps < 2:
        raise ValidationError(f"sweep needs at least 2 steps, got {steps}")
    rows = []
    for w1 in np.linspace(0.0, 1.0, steps):
        w1 = float(w1)
        w2 = 1.0 - w1
        c = comparative_from_measures(
            similarity, normalized_distance, WeightVector((w1, w2))
        )
        rows.append((w1, w2, c))
    return rows
