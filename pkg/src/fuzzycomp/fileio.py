"""Reading and writing fuzzy sets and rating samples.

Set documents are JSON objects:

    {"name": "OK", "universe": {"min": 1, "max": 5}, "points": [[1, 0.25], ...]}

Floats are serialized at full precision, so write followed by read returns an
identical set bit for bit.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

from .errors import ValidationError
from .sets import FuzzySet, Universe


def set_to_document(fs: FuzzySet) -> dict:
    return {
        "name": fs.name,
        "universe": {"min": fs.universe.min, "max": fs.universe.max},
        "points": [[x, mu] for x, mu in fs.points],
    }


def set_from_document(doc) -> FuzzySet:
    if not isinstance(doc, dict):
        raise ValidationError("set document must be a JSON object")
    try:
        name = doc["name"]
        uni = doc["universe"]
        points = doc["points"]
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"set document missing field: {exc}") from exc
    if not isinstance(name, str):
        raise ValidationError("set name must be a string")
    if not isinstance(uni, dict) or "min" not in uni or "max" not in uni:
        raise ValidationError('universe must be an object with "min" and "max"')
    if not isinstance(points, list) or not all(
        isinstance(p, list) and len(p) == 2 for p in points
    ):
        raise ValidationError("points must be a list of [x, mu] pairs")
    for p in points:
        if not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in p):
            raise ValidationError(f"non-numeric breakpoint: {p}")
    universe = Universe(float(uni["min"]), float(uni["max"]))
    return FuzzySet(
        name=name,
        universe=universe,
        points=tuple((float(x), float(mu)) for x, mu in points),
    )


def write_set(fs: FuzzySet, path) -> None:
    Path(path).write_text(json.dumps(set_to_document(fs), indent=2) + "\n")


def read_set(path) -> FuzzySet:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON: {exc}") from exc
    return set_from_document(doc)


def read_ratings(path, column: str) -> list[float]:
    """One numeric value per row under the named column.

    Errors report the file line number (the header is line 1).
    """
    values = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise ValidationError(f"{path}: column {column!r} not found")
        for lineno, row in enumerate(reader, start=2):
            raw = row.get(column)
            if raw is None or raw.strip() == "":
                raise ValidationError(f"{path}: row {lineno}: empty value")
            try:
                values.append(float(raw))
            except ValueError as exc:
                raise ValidationError(
                    f"{path}: row {lineno}: not a number: {raw!r}"
                ) from exc
    return values
