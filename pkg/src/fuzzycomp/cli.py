"""Command line interface.

Exit codes: 0 success, 1 validation error (bad content or measure
preconditions), 2 I/O or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .analysis import classify, matrix, rank, weight_sweep
from .errors import ValidationError
from .fileio import read_ratings, read_set, write_set
from .fusion import (
    ComparativeConfig,
    WeightVector,
    comparative,
)
from .measures import AlphaGrid, GridSpec, alpha_distance, jaccard
from .sets import Universe, build_from_samples


def _fmt(x, precision: int) -> str:
    return f"{float(x):.{precision}g}"


def _parse_weights(text: str) -> WeightVector:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(f"expected two comma-separated weights, got {text!r}")
    try:
        vals = tuple(float(p) for p in parts)
    except ValueError as exc:
        raise ValidationError(f"non-numeric weight in {text!r}") from exc
    return WeightVector(vals)


def _parse_grid(text: str) -> GridSpec:
    if text == "integers":
        return GridSpec(kind="integers")
    if text.startswith("uniform:"):
        try:
            n = int(text.split(":", 1)[1])
        except ValueError as exc:
            raise ValidationError(f"bad grid size in {text!r}") from exc
        return GridSpec(kind="uniform", n=n)
    raise ValidationError(
        f"unknown grid {text!r}; expected 'integers' or 'uniform:N'"
    )


def _parse_pair(text: str, what: str) -> tuple[float, float]:
    for sep in (":", ","):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                return float(lo), float(hi)
            except ValueError:
                break
    raise ValidationError(f"expected {what} as MIN:MAX, got {text!r}")


def _parse_bins(text: str) -> list[float]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        try:
            start, stop = int(lo), int(hi)
        except ValueError as exc:
            raise ValidationError(f"bad bin range {text!r}") from exc
        if stop < start:
            raise ValidationError(f"empty bin range {text!r}")
        return [float(v) for v in range(start, stop + 1)]
    try:
        return [float(p) for p in text.split(",")]
    except ValueError as exc:
        raise ValidationError(f"non-numeric bin in {text!r}") from exc


def _config_from_args(args) -> ComparativeConfig:
    return ComparativeConfig(
        weights=_parse_weights(args.weights),
        alpha_levels=args.alpha_levels,
        lambda_override=args.lambda_,
        directional=args.directional,
        strict_convexity=args.strict_convex,
        grid=_parse_grid(args.grid),
    )


def _report_fields(report, precision: int) -> list[tuple[str, str]]:
    return [
        ("similarity", _fmt(report.similarity, precision)),
        ("distance", _fmt(report.distance, precision)),
        ("normalized_distance", _fmt(report.normalized_distance, precision)),
        ("comparative", _fmt(report.comparative, precision)),
        ("complement", _fmt(report.complement, precision)),
        ("lambda", _fmt(report.lambda_, precision)),
    ]


def _emit_csv(rows) -> None:
    for row in rows:
        print(",".join(row))


def cmd_build(args) -> int:
    values = read_ratings(args.csv, args.column)
    universe = Universe(*_parse_pair(args.universe, "universe"))
    bins = _parse_bins(args.bins)
    name = args.name if args.name is not None else Path(args.out).stem
    fs = build_from_samples(values, universe, bins, name=name)
    write_set(fs, args.out)
    p = fs.profile()
    print(
        f"wrote {args.out}: {len(values)} samples, height {_fmt(p.height, args.precision)}, "
        f"normal {str(p.is_normal).lower()}, convex {str(p.is_convex).lower()}, "
        f"support [{_fmt(p.support.left, args.precision)}, "
        f"{_fmt(p.support.right, args.precision)}]"
    )
    return 0


def cmd_compare(args) -> int:
    a = read_set(args.set_a)
    b = read_set(args.set_b)
    config = _config_from_args(args)
    if args.measure == "jaccard":
        s = jaccard(a, b, config.grid.build(a.universe))
        print(_fmt(s, args.precision))
        return 0
    if args.measure == "distance":
        d = alpha_distance(
            a,
            b,
            AlphaGrid(config.alpha_levels),
            directional=config.directional,
            strict_convex=config.strict_convexity,
        )
        print(_fmt(d, args.precision))
        return 0
    report = comparative(a, b, config)
    fields = _report_fields(report, args.precision)
    if args.format == "json":
        print(json.dumps({k: float(v) for k, v in fields}, indent=2))
    else:
        width = max(len(k) for k, _ in fields)
        for k, v in fields:
            print(f"{k:<{width}}  {v}")
    return 0


def cmd_matrix(args) -> int:
    sets = [read_set(p) for p in args.sets]
    config = _config_from_args(args)
    result = matrix(sets, config)
    if args.format == "json":
        doc = {
            "names": list(result.names),
            "entries": [
                [
                    {k: float(v) for k, v in _report_fields(rep, args.precision)}
                    for rep in row
                ]
                for row in result.entries
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    rows = [["name", *result.names]]
    for name, row in zip(result.names, result.entries):
        rows.append(
            [name]
            + [_fmt(getattr(rep, args.value), args.precision) for rep in row]
        )
    _emit_csv(rows)
    return 0


def cmd_rank(args) -> int:
    reference = read_set(args.reference)
    candidates = [read_set(p) for p in args.candidates]
    config = _config_from_args(args)
    ranked = rank(reference, candidates, config)
    if args.format == "json":
        doc = [
            {
                "rank": i + 1,
                "name": name,
                **{k: float(v) for k, v in _report_fields(rep, args.precision)},
            }
            for i, (name, rep) in enumerate(ranked)
        ]
        print(json.dumps(doc, indent=2))
        return 0
    rows = [["rank", "name", "comparative", "complement", "similarity", "distance"]]
    for i, (name, rep) in enumerate(ranked):
        rows.append(
            [
                str(i + 1),
                name,
                _fmt(rep.comparative, args.precision),
                _fmt(rep.complement, args.precision),
                _fmt(rep.similarity, args.precision),
                _fmt(rep.distance, args.precision),
            ]
        )
    _emit_csv(rows)
    return 0


def cmd_classify(args) -> int:
    value = read_set(args.input)
    prototypes = {}
    for p in args.prototypes:
        fs = read_set(p)
        if fs.name in prototypes:
            raise ValidationError(f"duplicate prototype label: {fs.name!r}")
        prototypes[fs.name] = fs
    config = _config_from_args(args)
    result = classify(prototypes, value, config)
    if args.format == "json":
        doc = {
            "best": result.best_label,
            "margin": float(_fmt(result.margin, args.precision)),
            "scores": {
                k: float(_fmt(v, args.precision)) for k, v in result.scores.items()
            },
        }
        print(json.dumps(doc, indent=2))
        return 0
    for label, score in result.scores.items():
        print(f"{label}  {_fmt(score, args.precision)}")
    print(f"best  {result.best_label}")
    print(f"margin  {_fmt(result.margin, args.precision)}")
    return 0


def cmd_sweep(args) -> int:
    have_sets = len(args.sets) > 0
    have_measures = args.similarity is not None or args.norm_distance is not None
    if have_sets and have_measures:
        raise ValidationError("give either two set files or both measures, not both")
    if have_sets:
        if len(args.sets) != 2:
            raise ValidationError(
                f"sweep needs exactly 2 set files, got {len(args.sets)}"
            )
        a = read_set(args.sets[0])
        b = read_set(args.sets[1])
        config = _config_from_args(args)
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
    else:
        if args.similarity is None or args.norm_distance is None:
            raise ValidationError(
                "sweep needs --similarity and --norm-distance when no set files given"
            )
        s, nd = args.similarity, args.norm_distance
    rows = weight_sweep(s, nd, steps=args.steps)
    out = [["w1", "w2", "c"]]
    for w1, w2, c in rows:
        out.append([_fmt(w1, args.precision), _fmt(w2, args.precision), _fmt(c, args.precision)])
    _emit_csv(out)
    if args.figure:
        from .plotting import render_sweep

        render_sweep(rows, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_plotdata(args) -> int:
    sets = [read_set(p) for p in args.sets]
    universe = sets[0].universe
    for fs in sets[1:]:
        if fs.universe != universe:
            raise ValidationError("universe mismatch: sets span different universes")
    names = [fs.name for fs in sets]
    if len(set(names)) != len(names):
        raise ValidationError("duplicate set names in plot data")
    xs = np.linspace(universe.min, universe.max, args.samples)
    curves = {fs.name: np.asarray(fs.membership(xs)) for fs in sets}
    rows = [["x", *names]]
    for i, x in enumerate(xs):
        rows.append(
            [_fmt(x, args.precision)]
            + [_fmt(curves[n][i], args.precision) for n in names]
        )
    _emit_csv(rows)
    if args.figure:
        from .plotting import render_membership

        render_membership(xs, curves, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_validate(args) -> int:
    fs = read_set(args.set)
    p = fs.profile()
    print(f"name  {fs.name}")
    print(f"universe  [{_fmt(fs.universe.min, args.precision)}, {_fmt(fs.universe.max, args.precision)}]")
    print(f"breakpoints  {len(fs.points)}")
    print(f"height  {_fmt(p.height, args.precision)}")
    print(f"normal  {str(p.is_normal).lower()}")
    print(f"convex  {str(p.is_convex).lower()}")
    print(
        f"support  [{_fmt(p.support.left, args.precision)}, "
        f"{_fmt(p.support.right, args.precision)}]"
    )
    return 0


def _add_config_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--weights",
        default="0.7,0.3",
        metavar="W1,W2",
        help="OWA weights, two values summing to 1 (default 0.7,0.3)",
    )
    p.add_argument(
        "--alpha-levels",
        type=int,
        default=100,
        metavar="M",
        help="alpha level count for the cut distance (default 100)",
    )
    p.add_argument(
        "--lambda",
        dest="lambda_",
        type=float,
        default=None,
        metavar="L",
        help="distance normalizer (default: universe width)",
    )
    d = p.add_mutually_exclusive_group()
    d.add_argument(
        "--directional",
        dest="directional",
        action="store_true",
        help="signed distance, positive when the second set sits right (default)",
    )
    d.add_argument(
        "--symmetric",
        dest="directional",
        action="store_false",
        help="unsigned distance",
    )
    p.set_defaults(directional=True)
    p.add_argument(
        "--grid",
        default="uniform:201",
        metavar="SPEC",
        help="similarity sample grid: 'integers' or 'uniform:N' (default uniform:201)",
    )
    p.add_argument(
        "--strict-convex",
        action="store_true",
        help="reject non-convex sets in the cut distance",
    )


def _add_precision_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--precision",
        type=int,
        default=6,
        metavar="P",
        help="significant digits in numeric output (default 6)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzycomp",
        description="Compare fuzzy sets with a fused similarity/distance measure.",
        epilog="exit codes: 0 success, 1 validation error, 2 I/O or usage error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a fuzzy set from a ratings CSV")
    p.add_argument("csv", help="CSV file with one rating per row")
    p.add_argument("--column", default="rating", help="rating column name")
    p.add_argument("--universe", required=True, metavar="MIN:MAX")
    p.add_argument(
        "--bins",
        required=True,
        metavar="SPEC",
        help="bin centers: comma list or LO..HI integer range",
    )
    p.add_argument("--name", default=None, help="set name (default: output stem)")
    p.add_argument("--out", required=True, help="output set JSON path")
    _add_precision_flag(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("compare", help="compare two fuzzy sets")
    p.add_argument("set_a")
    p.add_argument("set_b")
    p.add_argument(
        "--measure",
        choices=["comparative", "jaccard", "distance"],
        default="comparative",
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    _add_config_flags(p)
    _add_precision_flag(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("matrix", help="pairwise comparison matrix")
    p.add_argument("sets", nargs="+", help="set JSON files")
    p.add_argument(
        "--value",
        choices=["comparative", "complement", "similarity", "distance"],
        default="comparative",
        help="which value fills the CSV cells",
    )
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_config_flags(p)
    _add_precision_flag(p)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("rank", help="order candidates by closeness to a reference")
    p.add_argument("--reference", required=True, help="reference set JSON")
    p.add_argument("candidates", nargs="+", help="candidate set JSON files")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    _add_config_flags(p)
    _add_precision_flag(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("classify", help="nearest-prototype classification")
    p.add_argument("--input", required=True, help="input set JSON")
    p.add_argument("prototypes", nargs="+", help="prototype set JSON files")
    p.add_argument("--format", choices=["text", "json"], default="text")
    _add_config_flags(p)
    _add_precision_flag(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser(
        "sweep-weights",
        help="comparative value as the weight split varies",
    )
    p.add_argument("sets", nargs="*", help="two set JSON files (optional)")
    p.add_argument("--similarity", type=float, default=None)
    p.add_argument(
        "--norm-distance",
        dest="norm_distance",
        type=float,
        default=None,
        help="normalized distance in [-1, 1]",
    )
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--figure", default=None, help="also render a PNG to this path")
    _add_config_flags(p)
    _add_precision_flag(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("plot-data", help="sampled membership columns for plotting")
    p.add_argument("sets", nargs="+", help="set JSON files")
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--figure", default=None, help="also render a PNG to this path")
    _add_precision_flag(p)
    p.set_defaults(func=cmd_plotdata)

    p = sub.add_parser("validate", help="check a set document and print its profile")
    p.add_argument("set", help="set JSON file")
    _add_precision_flag(p)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
