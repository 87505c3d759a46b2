"""Acceptance suite: the eight contract-level checks, one verdict line each.

Run with -s (or read the captured output of a failing test) to see the
verdict lines; `pytest -v` additionally reports one PASSED/FAILED row per
criterion.
"""
import time
from collections import Counter
from contextlib import contextmanager

import numpy as np
import pytest

from fuzzycomp import (
    AlphaGrid,
    FuzzySet,
    Universe,
    ValidationError,
    WeightVector,
    alpha_distance,
    build_from_samples,
    comparative,
    comparative_complement,
    comparative_from_measures,
    jaccard,
    owa,
    read_set,
    select_best,
    weight_sweep,
    write_set,
)
from fuzzycomp.cli import main
from fuzzycomp.oracle import (
    DenseSet,
    oracle_alpha_distance,
    oracle_jaccard,
    oracle_owa,
)
from fuzzycomp.fusion import ComparativeConfig


@contextmanager
def verdict(label):
    try:
        yield
    except BaseException:
        print(f"[acceptance] {label}: FAIL")
        raise
    print(f"[acceptance] {label}: PASS")


def test_c1_weight_sweep_reproduces_pinned_columns():
    overlapping = [
        0.331, 0.380, 0.428, 0.477, 0.526, 0.574,
        0.623, 0.672, 0.721, 0.769, 0.818,
    ]
    disjoint = [
        0.331, 0.398, 0.465, 0.532, 0.598, 0.665,
        0.732, 0.799, 0.866, 0.933, 1.0,
    ]
    with verdict("C1 weight sweep columns within 0.001"):
        start = time.perf_counter()
        for inputs, expected in (
            ((0.182, 0.331), overlapping),
            ((0.0, 0.331), disjoint),
        ):
            rows = weight_sweep(*inputs, steps=11)
            assert len(rows) == 11
            for (w1, w2, c), target in zip(rows, expected):
                assert c == pytest.approx(target, abs=1e-3), (w1, c, target)
        assert time.perf_counter() - start < 1.0


def test_c2_classification_fusion_reproduces_pinned_complements():
    measured = {"Poor": (0.081, 5.573), "OK": (0.493, 1.064), "Great": (0.469, -3.360)}
    expected = {"Poor": 0.171, "OK": 0.609, "Great": -0.516}
    lam = 9.0
    with verdict("C2 fusion stage complements within 0.001 and winner OK"):
        start = time.perf_counter()
        scores = {}
        for label, (s, d) in measured.items():
            c = comparative_from_measures(s, d / lam, WeightVector((0.7, 0.3)))
            scores[label] = comparative_complement(c)
            assert scores[label] == pytest.approx(expected[label], abs=1e-3)
        best, _ = select_best(scores)
        assert best == "OK"
        assert time.perf_counter() - start < 1.0


def test_c3_sign_agreement_of_recomputed_fusion():
    # Six measured (similarity, distance) pairs on a width-4 universe. The
    # published fused values are not reproducible from these inputs, so the
    # qualitative claims are the contract: the fused sign must follow the
    # distance sign, and the disjoint pair (index 4) must score a larger
    # magnitude than the almost-disjoint pair (index 0).
    sims = [0.050, 0.067, 0.170, 0.242, 0.0, 0.892]
    dists = [-3.628, 2.936, 2.723, -1.999, 3.258, 0.169]
    lam = 4.0
    with verdict("C3 fused sign follows distance; disjoint pair dominates"):
        cs = [
            comparative_from_measures(s, d / lam, WeightVector((0.7, 0.3)))
            for s, d in zip(sims, dists)
        ]
        for c, d in zip(cs, dists):
            assert c * d > 0.0, (c, d)
        assert abs(cs[4]) > abs(cs[0])


def test_c4_invariant_suite(pair_corpus, triple_corpus, nested_corpus):
    cfg_dir = ComparativeConfig(directional=True)
    cfg_sym = ComparativeConfig(directional=False)
    with verdict("C4 invariant suite over 1000-case corpora"):
        start = time.perf_counter()
        for a, b in pair_corpus:
            # Self-identity, exact to tolerance, plus its converse.
            assert abs(comparative(a, a, cfg_dir).comparative) <= 1e-9
            c_ab_dir = comparative(a, b, cfg_dir).comparative
            c_ba_dir = comparative(b, a, cfg_dir).comparative
            assert c_ab_dir != 0.0
            # Partial symmetry: equal magnitude, opposite sign.
            assert abs(abs(c_ab_dir) - abs(c_ba_dir)) <= 1e-9
            assert c_ab_dir * c_ba_dir < 0.0
            # Symmetry and separability without direction.
            c_ab_sym = comparative(a, b, cfg_sym).comparative
            c_ba_sym = comparative(b, a, cfg_sym).comparative
            assert abs(c_ab_sym - c_ba_sym) <= 1e-9
            assert -1e-9 <= c_ab_sym <= 1.0 + 1e-9
        for a, b, c in nested_corpus:
            # Transitivity on pointwise-nested sets.
            assert (
                comparative(a, b, cfg_sym).comparative
                <= comparative(a, c, cfg_sym).comparative + 1e-9
            )
        for a, b, c in triple_corpus:
            # Triangle inequality.
            assert (
                comparative(a, c, cfg_sym).comparative
                <= comparative(a, b, cfg_sym).comparative
                + comparative(b, c, cfg_sym).comparative
                + 1e-9
            )
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0, f"invariant suite took {elapsed:.1f}s"


def test_c5_oracle_agreement(pair_corpus):
    with verdict("C5 oracle agreement within 5e-3; OWA exact"):
        start = time.perf_counter()
        worst_j = worst_d = 0.0
        for a, b in pair_corpus:
            da, db = DenseSet.from_set(a), DenseSet.from_set(b)
            worst_j = max(worst_j, abs(jaccard(a, b) - oracle_jaccard(da, db)))
            for directional in (False, True):
                ref = oracle_alpha_distance(a, b, directional=directional)
                fast = alpha_distance(a, b, directional=directional)
                worst_d = max(worst_d, abs(fast - ref))
        assert worst_j < 5e-3, f"jaccard drifted {worst_j} from the reference"
        assert worst_d < 5e-3, f"distance drifted {worst_d} from the reference"
        gen = np.random.default_rng(7)
        for _ in range(1000):
            vals = tuple(gen.uniform(-1, 1, 2))
            w1 = float(gen.uniform(0, 1))
            w = WeightVector((w1, 1.0 - w1))
            for ordering in ("standard", "absolute"):
                assert owa(vals, w, ordering) == oracle_owa(vals, w, ordering)
        elapsed = time.perf_counter() - start
        assert elapsed < 60.0, f"oracle sweep took {elapsed:.1f}s"


def test_c6_level_count_convergence(pair_corpus):
    with verdict("C6 doubling alpha levels moves the distance < 1e-3"):
        g100, g200 = AlphaGrid(100), AlphaGrid(200)
        for a, b in pair_corpus:
            for directional in (False, True):
                d100 = alpha_distance(a, b, g100, directional=directional)
                d200 = alpha_distance(a, b, g200, directional=directional)
                assert abs(d200 - d100) < 1e-3, (a.points, b.points)


def test_c7_construction_is_exact():
    universe = Universe(1, 5)
    bins = [1, 2, 3, 4, 5]
    gen = np.random.default_rng(11)
    cases = [
        [3] * 7,
        [1] * 5 + [5] * 5,
        [1] * 2 + [2] * 4 + [3] * 8 + [4] * 4 + [5] * 2,
    ]
    cases += [
        gen.integers(1, 6, size=int(gen.integers(1, 500))).tolist()
        for _ in range(200)
    ]
    with verdict("C7 built memberships equal count/max exactly"):
        for samples in cases:
            fs = build_from_samples(samples, universe, bins)
            counts = Counter(samples)
            peak = max(counts.values())
            assert fs.profile().height == 1.0
            for x, mu in fs.points:
                assert mu == counts.get(int(x), 0) / peak


def test_c8_round_trip_and_cli_contract(tmp_path, pair_corpus, capsys):
    awkward = FuzzySet(
        "awkward",
        Universe(0.0, 10.0),
        ((0.1 + 0.2, 5e-324), (1.0 / 3.0, 1.0), (np.pi, 0.12345678901234567)),
    )
    with verdict("C8 bit-exact round trip; exit codes 0/1/2; determinism"):
        for i, fs in enumerate([awkward] + [p[0] for p in pair_corpus[:50]]):
            path = tmp_path / f"rt{i}.json"
            write_set(fs, path)
            back = read_set(path)
            assert back.points == fs.points
            assert back.universe == fs.universe
            assert back.name == fs.name

        a = tmp_path / "a.json"
        b = tmp_path / "b.json"
        other = tmp_path / "other.json"
        write_set(FuzzySet("a", Universe(0, 10), ((1, 0), (2, 1), (3, 0))), a)
        write_set(FuzzySet("b", Universe(0, 10), ((3, 0), (4, 1), (5, 0))), b)
        write_set(FuzzySet("o", Universe(0, 9), ((3, 0), (4, 1), (5, 0))), other)

        assert main(["compare", str(a), str(b)]) == 0
        assert main(["compare", str(a), str(other)]) == 1
        assert main(["compare", str(a), str(tmp_path / "missing.json")]) == 2
        with pytest.raises(SystemExit) as info:
            main(["compare", str(a), str(b), "--bogus"])
        assert info.value.code == 2
        capsys.readouterr()

        for argv in (
            ["compare", str(a), str(b), "--format", "json"],
            ["matrix", str(a), str(b)],
            ["rank", "--reference", str(a), str(b)],
            ["sweep-weights", str(a), str(b)],
            ["plot-data", str(a), str(b), "--samples", "21"],
            ["validate", str(a)],
        ):
            assert main(argv) == 0
            first = capsys.readouterr()
            assert main(argv) == 0
            second = capsys.readouterr()
            assert first.out == second.out
