"""Piecewise-linear fuzzy sets over a bounded universe.

A fuzzy set is stored as an ordered list of (x, mu) breakpoints. Membership
between breakpoints is linear interpolation; outside the breakpoint span it
is zero, even where the universe extends further.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .errors import ValidationError

# Equality tolerance for normality and convexity checks.
TOL = 1e-9


@dataclass(frozen=True)
class Universe:
    """Closed real interval on which fuzzy sets live."""

    min: float
    max: float

    def __post_init__(self):
        if not (np.isfinite(self.min) and np.isfinite(self.max)):
            raise ValidationError("universe bounds must be finite")
        if not self.min < self.max:
            raise ValidationError(
                f"universe min must be below max, got [{self.min}, {self.max}]"
            )

    @property
    def width(self) -> float:
        return self.max - self.min


@dataclass(frozen=True)
class Interval:
    """Closed interval, possibly degenerate (left == right)."""

    left: float
    right: float

    def __post_init__(self):
        if self.left > self.right:
            raise ValidationError(
                f"interval left must not exceed right, got [{self.left}, {self.right}]"
            )

    @property
    def width(self) -> float:
        return self.right - self.left


@dataclass(frozen=True)
class SetProfile:
    """Shape summary of a fuzzy set."""

    height: float
    is_normal: bool
    is_convex: bool
    support: Interval


@dataclass(frozen=True)
class FuzzySet:
    """Named piecewise-linear membership function.

    points holds (x, mu) breakpoints with strictly increasing x, every x
    inside the universe and every mu in [0, 1]. At least one breakpoint must
    carry positive membership.
    """

    name: str
    universe: Universe
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        pts = tuple((float(x), float(m)) for x, m in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValidationError("fuzzy set needs at least one breakpoint")
        xs = [x for x, _ in pts]
        mus = [m for _, m in pts]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise ValidationError("breakpoint x values must be strictly increasing")
        if xs[0] < self.universe.min or xs[-1] > self.universe.max:
            raise ValidationError("breakpoints fall outside the universe")
        if any(m < 0.0 or m > 1.0 for m in mus):
            raise ValidationError("membership values must lie in [0, 1]")
        if all(m == 0.0 for m in mus):
            raise ValidationError("at least one breakpoint must have mu > 0")

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([x for x, _ in self.points])

    @cached_property
    def mus(self) -> np.ndarray:
        return np.array([m for _, m in self.points])

    def membership(self, x):
        """Degree of membership at x; scalar in, scalar out, array in, array out."""
        out = np.interp(x, self.xs, self.mus, left=0.0, right=0.0)
        if np.isscalar(x) or np.ndim(x) == 0:
            return float(out)
        return out

    def alpha_cut(self, alpha: float) -> Interval | None:
        """Enclosing interval of {x : membership(x) >= alpha}, or None when empty.

        Boundary points are recovered by inverting the linear segments that
        cross the level. Non-convex sets yield the span from the first to the
        last crossing.
        """
        if not 0.0 < alpha <= 1.0:
            raise ValidationError(f"invalid alpha: {alpha} not in (0, 1]")
        mus = self.mus
        if alpha > mus.max():
            return None
        xs = self.xs
        j = int(np.argmax(mus >= alpha))
        if j == 0:
            left = xs[0]
        else:
            left = xs[j - 1] + (alpha - mus[j - 1]) * (xs[j] - xs[j - 1]) / (
                mus[j] - mus[j - 1]
            )
        k = len(mus) - 1 - int(np.argmax(mus[::-1] >= alpha))
        if k == len(mus) - 1:
            right = xs[-1]
        else:
            right = xs[k] + (mus[k] - alpha) * (xs[k + 1] - xs[k]) / (
                mus[k] - mus[k + 1]
            )
        return Interval(float(left), float(right))

    def profile(self) -> SetProfile:
        """Height, normality, convexity and support of the set."""
        mus = self.mus
        xs = self.xs
        height = float(mus.max())
        # Convex means the breakpoint memberships rise (or stay level) to a
        # peak and never rise again after falling.
        falling = False
        convex = True
        for a, b in zip(mus, mus[1:]):
            if b < a - TOL:
                falling = True
            elif b > a + TOL and falling:
                convex = False
                break
        pos = np.flatnonzero(mus > 0.0)
        first, last = int(pos[0]), int(pos[-1])
        left = xs[first - 1] if first > 0 else xs[first]
        right = xs[last + 1] if last < len(xs) - 1 else xs[last]
        support = Interval(float(left), float(right))
        return SetProfile(
            height=height,
            is_normal=abs(height - 1.0) <= TOL,
            is_convex=convex,
            support=support,
        )


def build_from_samples(
    samples: Sequence[float],
    universe: Universe,
    bins: Sequence[float],
    name: str = "data",
) -> FuzzySet:
    """Build a fuzzy set from raw sample values.

    Each sample is assigned to the nearest bin center (ties round up), the
    counts are divided by the largest count, and the normalized histogram
    becomes the breakpoints. The result is always normal; it need not be
    convex.

    :param samples: raw numeric observations, all inside the universe.
    :param universe: the value range the bins describe.
    :param bins: strictly increasing bin centers.
    :param name: name recorded on the resulting set.
    """
    data = np.asarray(list(samples), dtype=float)
    if data.size == 0:
        raise ValidationError("no data: cannot build a set from zero samples")
    centers = np.asarray(list(bins), dtype=float)
    if centers.size == 0:
        raise ValidationError("no bins given")
    if np.any(np.diff(centers) <= 0):
        raise ValidationError("bin centers must be strictly increasing")
    bad = (data < universe.min) | (data > universe.max)
    if np.any(bad):
        raise ValidationError(
            f"out of range: sample {data[bad][0]} outside "
            f"[{universe.min}, {universe.max}]"
        )
    edges = (centers[:-1] + centers[1:]) / 2.0
    idx = np.searchsorted(edges, data, side="right")
    counts = np.bincount(idx, minlength=centers.size)
    mus = counts / counts.max()
    points = tuple(zip(centers.tolist(), mus.tolist()))
    return FuzzySet(name=name, universe=universe, points=points)
