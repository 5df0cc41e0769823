"""Repeated benchmark measurements: parsing, validation and per-setup summaries.

Dataset files are CSV with a ``setup,repeat,<dir>:<metric>,...`` header, where
``<dir>`` is ``input`` (a cost, lower is better) or ``output`` (a benefit,
higher is better). A JSON mirror with the same content is accepted for files
ending in ``.json``.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
import statistics
import warnings
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import (DatasetError, MalformedHeader, NonNumericValue,
                     NonPositiveInput, TooFewSetups, UnevenRepeats)


class Direction(enum.Enum):
    INPUT = "input"
    OUTPUT = "output"


class SingleRepeatWarning(UserWarning):
    """Emitted when every setup was measured once, so all spreads are zero."""


@dataclass(frozen=True)
class MetricSpec:
    name: str
    direction: Direction

    @property
    def column(self) -> str:
        return f"{self.direction.value}:{self.name}"


@dataclass(frozen=True)
class MeasurementRecord:
    setup: str
    repeat: int
    values: Mapping[str, float]


@dataclass(frozen=True)
class Dataset:
    metrics: tuple[MetricSpec, ...]
    records: tuple[MeasurementRecord, ...]

    def __post_init__(self):
        object.__setattr__(self, "metrics", tuple(self.metrics))
        object.__setattr__(self, "records", tuple(self.records))
        validate(self)

    @property
    def setups(self) -> list[str]:
        """Setup names in order of first appearance."""
        return list(dict.fromkeys(r.setup for r in self.records))

    @property
    def inputs(self) -> list[MetricSpec]:
        return [m for m in self.metrics if m.direction is Direction.INPUT]

    @property
    def outputs(self) -> list[MetricSpec]:
        return [m for m in self.metrics if m.direction is Direction.OUTPUT]

    @property
    def repeats(self) -> int:
        return Counter(r.setup for r in self.records)[self.records[0].setup]


@dataclass(frozen=True)
class SetupSummary:
    """Per-metric mean and sample standard deviation for one setup."""

    setup: str
    metrics: tuple[MetricSpec, ...]
    mean: Mapping[str, float]
    stddev: Mapping[str, float]

    def input_means(self) -> tuple[float, ...]:
        return tuple(self.mean[m.name] for m in self.metrics if m.direction is Direction.INPUT)

    def output_means(self) -> tuple[float, ...]:
        return tuple(self.mean[m.name] for m in self.metrics if m.direction is Direction.OUTPUT)


def validate(dataset: Dataset) -> None:
    names = [m.name for m in dataset.metrics]
    if any(not n for n in names):
        raise MalformedHeader("metric names must be non-empty")
    dup = [n for n, c in Counter(names).items() if c > 1]
    if dup:
        raise MalformedHeader(f"duplicate metric names: {', '.join(dup)}")
    if not any(m.direction is Direction.INPUT for m in dataset.metrics):
        raise MalformedHeader("at least one input: metric is required")
    if not any(m.direction is Direction.OUTPUT for m in dataset.metrics):
        raise MalformedHeader("at least one output: metric is required")

    expected = set(names)
    inputs = {m.name for m in dataset.inputs}
    seen: set[tuple[str, int]] = set()
    for rec in dataset.records:
        if not rec.setup:
            raise DatasetError("empty setup name")
        if rec.repeat < 1:
            raise DatasetError(f"setup {rec.setup!r}: repeat must be >= 1, got {rec.repeat}")
        if (rec.setup, rec.repeat) in seen:
            raise DatasetError(f"setup {rec.setup!r}: repeat {rec.repeat} appears twice")
        seen.add((rec.setup, rec.repeat))
        if set(rec.values) != expected:
            raise DatasetError(
                f"setup {rec.setup!r} repeat {rec.repeat}: metrics {sorted(rec.values)} "
                f"do not match declared {sorted(expected)}")
        for name, v in rec.values.items():
            if not math.isfinite(v):
                raise DatasetError(f"setup {rec.setup!r} repeat {rec.repeat}: {name} is not finite")
            if name in inputs and v <= 0:
                raise NonPositiveInput(
                    f"setup {rec.setup!r} repeat {rec.repeat}: input {name} = {v!r} must be > 0")

    counts = Counter(r.setup for r in dataset.records)
    if len(counts) < 2:
        raise TooFewSetups(f"need at least 2 setups, found {len(counts)}")
    if len(set(counts.values())) > 1:
        detail = ", ".join(f"{s}={c}" for s, c in counts.items())
        raise UnevenRepeats(f"setups have differing repeat counts: {detail}")


def _parse_metric_column(col: str) -> MetricSpec:
    prefix, sep, name = col.partition(":")
    if not sep or prefix not in ("input", "output"):
        raise MalformedHeader(f"metric column {col!r} needs an input: or output: prefix")
    return MetricSpec(name.strip(), Direction(prefix))


def parse_dataset(text: str, fmt: str = "csv") -> Dataset:
    """Parse a dataset from CSV (default) or its JSON mirror."""
    if fmt == "json":
        return _parse_json(text)
    if fmt != "csv":
        raise ValueError(f"unknown dataset format {fmt!r}")

    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise MalformedHeader("empty file") from None
    if header[:2] != ["setup", "repeat"]:
        raise MalformedHeader("header must start with setup,repeat")
    if len(header) < 3:
        raise MalformedHeader("no metric columns")
    metrics = [_parse_metric_column(c) for c in header[2:]]

    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != len(header):
            raise DatasetError(f"row {lineno}: expected {len(header)} fields, got {len(row)}")
        setup = row[0].strip()
        try:
            repeat = int(row[1])
        except ValueError:
            raise NonNumericValue(lineno, "repeat", row[1]) from None
        values = {}
        for spec, col, raw in zip(metrics, header[2:], row[2:]):
            try:
                v = float(raw)
            except ValueError:
                raise NonNumericValue(lineno, col, raw) from None
            if not math.isfinite(v):
                raise NonNumericValue(lineno, col, raw)
            if spec.direction is Direction.INPUT and v <= 0:
                raise NonPositiveInput(f"row {lineno}, column {col!r}: input must be > 0, got {raw.strip()}")
            values[spec.name] = v
        records.append(MeasurementRecord(setup, repeat, values))
    return Dataset(tuple(metrics), tuple(records))


def _parse_json(text: str) -> Dataset:
    try:
        doc = json.loads(text)
        metrics = [MetricSpec(str(m["name"]), Direction(m["direction"])) for m in doc["metrics"]]
        raw_records = doc["records"]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise MalformedHeader(f"invalid JSON dataset: {exc}") from None
    records = []
    for k, r in enumerate(raw_records):
        try:
            setup, repeat, raw_values = str(r["setup"]), int(r["repeat"]), dict(r["values"])
        except (KeyError, TypeError, ValueError) as exc:
            raise DatasetError(f"record {k}: malformed ({exc})") from None
        values = {}
        for name, v in raw_values.items():
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise NonNumericValue(k, name, repr(v))
            values[name] = float(v)
        records.append(MeasurementRecord(setup, repeat, values))
    return Dataset(tuple(metrics), tuple(records))


def load_dataset(path: str | Path) -> Dataset:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_dataset(text, "json" if path.suffix.lower() == ".json" else "csv")


def serialize_dataset(dataset: Dataset, fmt: str = "csv") -> str:
    if fmt == "json":
        doc = {
            "metrics": [{"name": m.name, "direction": m.direction.value} for m in dataset.metrics],
            "records": [{"setup": r.setup, "repeat": r.repeat,
                         "values": {m.name: r.values[m.name] for m in dataset.metrics}}
                        for r in dataset.records],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["setup", "repeat"] + [m.column for m in dataset.metrics])
    for r in dataset.records:
        writer.writerow([r.setup, r.repeat] + [repr(r.values[m.name]) for m in dataset.metrics])
    return buf.getvalue()


def _mean_std(values: list[float]) -> tuple[float, float]:
    # statistics works in exact rational arithmetic, so results do not
    # depend on the order of the repeats
    if len(values) == 1 or min(values) == max(values):
        return values[0], 0.0
    return statistics.mean(values), statistics.stdev(values)


def summarize(dataset: Dataset) -> list[SetupSummary]:
    """Mean and Bessel-corrected standard deviation per setup and metric."""
    grouped: dict[str, list[MeasurementRecord]] = {}
    for rec in dataset.records:
        grouped.setdefault(rec.setup, []).append(rec)
    if dataset.repeats == 1:
        warnings.warn("single repeat per setup: all standard deviations are zero",
                      SingleRepeatWarning, stacklevel=2)
    out = []
    for setup, recs in grouped.items():
        mean, std = {}, {}
        for m in dataset.metrics:
            mean[m.name], std[m.name] = _mean_std([r.values[m.name] for r in recs])
        out.append(SetupSummary(setup, dataset.metrics, mean, std))
    return out

