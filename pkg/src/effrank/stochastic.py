"""Parametric bootstrap of relative efficiency.

Each replicate draws every setup's metrics from independent Gaussians fitted
to its repeats, recomputes all efficiencies on the drawn data and records each
setup's score. Replicate ``b`` uses the stream ``CounterRNG(seed).spawn(b)``,
further split per setup and metric name, so results are bit-identical across
runs and worker counts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .efficiency import FrontierForm, point_efficiencies
from .errors import EmptySample
from .measurements import Direction, SetupSummary
from .pareto import Point
from .rng import CounterRNG
from .simplex import DEFAULT_OPTIONS, SimplexOptions


@dataclass(frozen=True)
class BootstrapConfig:
    replicates: int = 1000
    seed: int = 0
    form: FrontierForm = FrontierForm.CONVEX
    positivity_floor: float = 1e-9
    # execution only; never affects the numbers
    workers: int = 1

    def __post_init__(self):
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not self.positivity_floor > 0:
            raise ValueError("positivity_floor must be > 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


@dataclass(frozen=True)
class BoxplotStats:
    min: float
    whisker_low: float
    q1: float
    median: float
    q3: float
    whisker_high: float
    max: float

    def as_dict(self) -> dict[str, float]:
        return {k: getattr(self, k) for k in
                ("min", "whisker_low", "q1", "median", "q3", "whisker_high", "max")}


@dataclass(frozen=True)
class BootstrapDistribution:
    setup: str
    samples: tuple[float, ...]
    stats: BoxplotStats


def boxplot_stats(samples: Sequence[float]) -> BoxplotStats:
    """Linear-interpolation quartiles with Tukey 1.5 IQR whiskers."""
    x = np.sort(np.asarray(samples, dtype=float))
    if x.size == 0:
        raise EmptySample("boxplot_stats needs at least one sample")
    q1, median, q3 = np.quantile(x, [0.25, 0.5, 0.75], method="linear")
    iqr = q3 - q1
    inside = x[(x >= q1 - 1.5 * iqr) & (x <= q3 + 1.5 * iqr)]
    # floating-point quantiles can land a hair outside [x_min, x_max] on constant input
    q1, median, q3 = (min(max(float(v), x[0]), x[-1]) for v in (q1, median, q3))
    return BoxplotStats(float(x[0]), min(float(inside[0]), q1), q1, median, q3,
                        max(float(inside[-1]), q3), float(x[-1]))


def sample_setup(summary: SetupSummary, rng: CounterRNG,
                 positivity_floor: float = 1e-9) -> Point:
    """Draw one noisy observation of a setup; inputs are clamped at the floor."""
    ins, outs = [], []
    for m in summary.metrics:
        mu, sd = summary.mean[m.name], summary.stddev[m.name]
        value = mu + sd * rng.spawn(m.name).normal() if sd > 0 else mu
        if m.direction is Direction.INPUT:
            ins.append(max(value, positivity_floor))
        else:
            outs.append(value)
    return Point(summary.setup, tuple(ins), tuple(outs))


def replicate_thetas(summaries: Sequence[SetupSummary], config: BootstrapConfig, b: int,
                     options: SimplexOptions = DEFAULT_OPTIONS) -> list[float]:
    stream = CounterRNG(config.seed).spawn(b)
    points = [sample_setup(s, stream.spawn(s.setup), config.positivity_floor)
              for s in summaries]
    return [r.theta for r in point_efficiencies(points, config.form, options, replicate=b)]


def _run_chunk(args) -> list[list[float]]:
    summaries, config, start, stop, options = args
    return [replicate_thetas(summaries, config, b, options) for b in range(start, stop)]


def bootstrap_efficiencies(summaries: Sequence[SetupSummary], config: BootstrapConfig,
                           options: SimplexOptions = DEFAULT_OPTIONS) -> list[BootstrapDistribution]:
    if not summaries:
        raise ValueError("bootstrap_efficiencies needs at least one setup")
    summaries = list(summaries)
    B = config.replicates
    if config.workers == 1:
        rows = [replicate_thetas(summaries, config, b, options) for b in range(1, B + 1)]
    else:
        step = -(-B // (4 * config.workers))
        chunks = [(summaries, config, lo, min(lo + step, B + 1), options)
                  for lo in range(1, B + 1, step)]
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            rows = [row for part in pool.map(_run_chunk, chunks) for row in part]

    out = []
    for i, s in enumerate(summaries):
        samples = tuple(row[i] for row in rows)
        out.append(BootstrapDistribution(s.setup, samples, boxplot_stats(samples)))
    return out
