"""Brute-force reference implementations for the test suite.

These deliberately avoid the optimized code paths: cuts come from scanning a
dense x-grid instead of inverting segments, the level-weighted distance is the
literal weighted sum over discrete levels, and the OWA reference runs its own
selection sort. A bug in the fast implementations cannot validate itself here.
Expect these to be orders of magnitude slower; they exist for cross-checking,
not for use in applications.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .sets import FuzzySet

# Scan density: fine enough that endpoint quantization (half a grid step)
# cannot push the reference outside the documented agreement tolerance even
# when the directional branch choice sits near a magnitude tie.
DENSE_POINTS = 100_001


@dataclass(frozen=True)
class DenseSet:
    """Membership sampled on a very fine uniform grid (>= 10^4 points)."""

    xs: np.ndarray
    mus: np.ndarray

    def __post_init__(self):
        if len(self.xs) < 10_000:
            raise ValidationError(
                f"dense grid needs >= 10000 points, got {len(self.xs)}"
            )
        if len(self.xs) != len(self.mus):
            raise ValidationError("xs and mus lengths differ")

    @classmethod
    def from_set(cls, fs: FuzzySet, n: int = DENSE_POINTS) -> "DenseSet":
        xs = np.linspace(fs.universe.min, fs.universe.max, n)
        return cls(xs=xs, mus=np.asarray(fs.membership(xs)))


def oracle_jaccard(a: DenseSet, b: DenseSet) -> float:
    """Plain min/max sum ratio over the dense grid."""
    if len(a.xs) != len(b.xs) or not np.array_equal(a.xs, b.xs):
        raise ValidationError("grid mismatch: dense sets sampled differently")
    return float(np.minimum(a.mus, b.mus).sum() / np.maximum(a.mus, b.mus).sum())


def _scan_cuts(dense: DenseSet, levels: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cut endpoints per level via exhaustive grid scan, no interpolation.

    The leftmost grid point with membership >= alpha is the first index where
    the running maximum reaches alpha; rightmost symmetrically. Levels above
    the sampled height are clamped to it so the peak still yields a cut.
    """
    capped = np.minimum(levels, dense.mus.max())
    prefix = np.maximum.accumulate(dense.mus)
    left_idx = np.searchsorted(prefix, capped, side="left")
    suffix = np.maximum.accumulate(dense.mus[::-1])
    right_idx = len(dense.mus) - 1 - np.searchsorted(suffix, capped, side="left")
    return dense.xs[left_idx], dense.xs[right_idx]


def oracle_alpha_distance(
    a: FuzzySet,
    b: FuzzySet,
    m: int = 10_000,
    directional: bool = False,
) -> float:
    """Literal level-weighted sum over m levels with scanned cuts."""
    if a.universe != b.universe:
        raise ValidationError("universe mismatch")
    da = DenseSet.from_set(a)
    db = DenseSet.from_set(b)
    levels = np.arange(1, m + 1) / m
    al, ar = _scan_cuts(da, levels)
    bl, br = _scan_cuts(db, levels)
    dl = bl - al
    dr = br - ar
    if directional:
        h = np.where(np.abs(dl) > np.abs(dr), dl, dr)
    else:
        h = np.maximum(np.abs(dl), np.abs(dr))
    return float((levels * h).sum() / levels.sum())


def oracle_owa(values, weights, ordering: str = "standard") -> float:
    """Naive OWA: hand-rolled selection sort, then a left-to-right fold."""
    remaining = [float(v) for v in values]
    ranked = []
    while remaining:
        best = 0
        for i in range(1, len(remaining)):
            if ordering == "absolute":
                bigger = abs(remaining[i]) > abs(remaining[best])
            else:
                bigger = remaining[i] > remaining[best]
            if bigger:
                best = i
        ranked.append(remaining.pop(best))
    total = 0.0
    for w, v in zip(weights.values, ranked):
        total += w * v
    return total
