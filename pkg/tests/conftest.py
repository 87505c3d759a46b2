"""Shared fixtures: randomized set corpora over [0, 10].

The corpora are seeded so every run exercises the same cases; the suite's
tolerance claims are statements about these corpora.
"""
import numpy as np
import pytest

from fuzzycomp import FuzzySet, Universe

SEED = 20260814
CORPUS_UNIVERSE = Universe(0.0, 10.0)

# Smallest segment a generated set may have. Keeps every shoulder wide enough
# that the default 201-point sample grid resolves it.
MIN_SEG = 0.5


def random_convex_set(rng, name: str) -> FuzzySet:
    """Random normal triangular or trapezoidal set over [0, 10]."""
    k = 3 if rng.random() < 0.5 else 4
    while True:
        xs = np.sort(rng.uniform(0.0, 10.0, k))
        if np.all(np.diff(xs) >= MIN_SEG):
            break
    if k == 3:
        pts = ((xs[0], 0.0), (xs[1], 1.0), (xs[2], 0.0))
    else:
        pts = ((xs[0], 0.0), (xs[1], 1.0), (xs[2], 1.0), (xs[3], 0.0))
    return FuzzySet(name, CORPUS_UNIVERSE, pts)


def random_nested_triple(rng) -> tuple[FuzzySet, FuzzySet, FuzzySet]:
    """A, B, C with pointwise membership ordering mu_A <= mu_B <= mu_C."""
    center = rng.uniform(4.0, 6.0)
    plat_l, plat_r = [0.0], [0.0]
    sup_l = [rng.uniform(0.4, 1.0)]
    sup_r = [rng.uniform(0.4, 1.0)]
    for _ in range(2):
        plat_l.append(plat_l[-1] + rng.uniform(0.0, 0.5))
        plat_r.append(plat_r[-1] + rng.uniform(0.0, 0.5))
        sup_l.append(max(sup_l[-1], plat_l[-1]) + rng.uniform(0.4, 1.0))
        sup_r.append(max(sup_r[-1], plat_r[-1]) + rng.uniform(0.4, 1.0))
    sets = []
    for i, name in enumerate("ABC"):
        lo, hi = center - sup_l[i], center + sup_r[i]
        pl, pr = center - plat_l[i], center + plat_r[i]
        if pl == pr:
            pts = ((lo, 0.0), (pl, 1.0), (hi, 0.0))
        else:
            pts = ((lo, 0.0), (pl, 1.0), (pr, 1.0), (hi, 0.0))
        sets.append(FuzzySet(name, CORPUS_UNIVERSE, pts))
    return tuple(sets)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture(scope="session")
def pair_corpus():
    gen = np.random.default_rng(SEED)
    return [
        (random_convex_set(gen, "A"), random_convex_set(gen, "B"))
        for _ in range(1000)
    ]


@pytest.fixture(scope="session")
def triple_corpus():
    gen = np.random.default_rng(SEED + 1)
    return [
        (
            random_convex_set(gen, "A"),
            random_convex_set(gen, "B"),
            random_convex_set(gen, "C"),
        )
        for _ in range(1000)
    ]


@pytest.fixture(scope="session")
def nested_corpus():
    gen = np.random.default_rng(SEED + 2)
    return [random_nested_triple(gen) for _ in range(1000)]
