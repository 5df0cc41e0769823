"""Pareto dominance over setup points: inputs are minimized, outputs maximized."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch


@dataclass(frozen=True)
class Point:
    setup: str
    inputs: tuple[float, ...]
    outputs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(map(float, self.inputs)))
        object.__setattr__(self, "outputs", tuple(map(float, self.outputs)))


def _check_dims(a: Point, b: Point) -> None:
    if len(a.inputs) != len(b.inputs) or len(a.outputs) != len(b.outputs):
        raise DimensionMismatch(
            f"{a.setup!r} has shape ({len(a.inputs)}, {len(a.outputs)}), "
            f"{b.setup!r} has ({len(b.inputs)}, {len(b.outputs)})")


def dominates(a: Point, b: Point) -> bool:
    """Strong Pareto dominance: no worse everywhere and strictly better somewhere."""
    _check_dims(a, b)
    strict = False
    for x, y in zip(a.inputs, b.inputs):
        if x > y:
            return False
        strict = strict or x < y
    for x, y in zip(a.outputs, b.outputs):
        if x < y:
            return False
        strict = strict or x > y
    return strict


def pareto_frontier(points: Sequence[Point]) -> frozenset[str]:
    """Names of the points no other point dominates."""
    if not points:
        raise ValueError("pareto_frontier needs at least one point")
    for p in points[1:]:
        _check_dims(points[0], p)
    return frozenset(
        p.setup for p in points
        if not any(dominates(q, p) for q in points if q is not p)
    )
