"""Command-line front end: ``effrank {efficiency,frontier,bootstrap,rank} DATA``."""

from __future__ import annotations

import argparse
import csv
import enum
import io
import json
import sys
import warnings
from dataclasses import dataclass
from typing import TextIO

from .efficiency import FrontierForm, efficiency_scores
from .errors import DatasetError, NumericalFailure, SolverFailure
from .measurements import SingleRepeatWarning, load_dataset, summarize
from .pareto import Point, pareto_frontier
from .ranking import DominanceGraph, dominance_graph, rank_report
from .simplex import format_lp
from .stochastic import BootstrapConfig, bootstrap_efficiencies

STAT_FIELDS = ("min", "whisker_low", "q1", "median", "q3", "whisker_high", "max")


class Command(enum.Enum):
    EFFICIENCY = "efficiency"
    FRONTIER = "frontier"
    BOOTSTRAP = "bootstrap"
    RANK = "rank"


class OutputFormat(enum.Enum):
    JSON = "json"
    CSV = "csv"
    DOT = "dot"


@dataclass(frozen=True)
class RunConfig:
    input_path: str
    command: Command
    form: FrontierForm = FrontierForm.CONVEX
    replicates: int = 1000
    seed: int = 0
    tolerance: float = 1e-12
    output_format: OutputFormat = OutputFormat.CSV
    scale_percent: bool = True
    raw_samples: bool = False
    debug_lp: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.output_format is OutputFormat.DOT and self.command is not Command.RANK:
            raise ValueError("--format dot is only available for the rank command")
        if self.tolerance < 0:
            raise ValueError("--tolerance must be >= 0")

    def as_dict(self) -> dict:
        # worker count is deliberately absent: it must not change the report
        return {
            "command": self.command.value,
            "input": self.input_path,
            "form": self.form.value,
            "replicates": self.replicates,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "scale_percent": self.scale_percent,
        }


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(graph: DominanceGraph) -> str:
    """DOT digraph of the reduced dominance edges, winner -> loser."""
    lines = ["digraph dominance {"]
    lines += [f"  {_dot_id(n)};" for n in sorted(graph.nodes)]
    lines += [f"  {_dot_id(u)} -> {_dot_id(v)};" for u, v in sorted(graph.reduced_edges)]
    lines.append("}")
    return "\n".join(lines) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _json(config: RunConfig, setups: list[dict], **extra) -> str:
    doc = {"config": config.as_dict(), "setups": setups, **extra}
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _report(config: RunConfig) -> str:
    dataset = load_dataset(config.input_path)
    summaries = summarize(dataset)
    scale = 100.0 if config.scale_percent else 1.0
    fmt = config.output_format

    def stats_dict(stats) -> dict[str, float]:
        return {k: v * scale for k, v in stats.as_dict().items()}

    if config.command is Command.FRONTIER:
        points = [Point(s.setup, s.input_means(), s.output_means()) for s in summaries]
        front = pareto_frontier(points)
        if fmt is OutputFormat.CSV:
            return _csv(["setup", "frontier"],
                        [[s.setup, str(s.setup in front).lower()] for s in summaries])
        return _json(config, [{"name": s.setup, "frontier": s.setup in front} for s in summaries])

    results = efficiency_scores(summaries, config.form)
    if config.command is Command.EFFICIENCY:
        if fmt is OutputFormat.CSV:
            return _csv(["setup", "theta"], [[r.setup, r.theta * scale] for r in results])
        return _json(config, [{"name": r.setup, "theta": r.theta * scale,
                               "peer_weights": dict(r.peer_weights)} for r in results])

    boot = BootstrapConfig(config.replicates, config.seed, config.form, workers=config.workers)
    dists = bootstrap_efficiencies(summaries, boot)
    if config.command is Command.BOOTSTRAP:
        if fmt is OutputFormat.CSV:
            header = ["setup", *STAT_FIELDS]
            if config.raw_samples:
                header += [f"sample_{b}" for b in range(1, config.replicates + 1)]
            rows = []
            for d in dists:
                row = [d.setup, *stats_dict(d.stats).values()]
                if config.raw_samples:
                    row += [v * scale for v in d.samples]
                rows.append(row)
            return _csv(header, rows)
        setups = []
        for d in dists:
            entry = {"name": d.setup, "stats": stats_dict(d.stats)}
            if config.raw_samples:
                entry["samples"] = [v * scale for v in d.samples]
            setups.append(entry)
        return _json(config, setups)

    graph = dominance_graph(dists, config.tolerance)
    if fmt is OutputFormat.DOT:
        return render_dot(graph)
    points = [Point(s.setup, s.input_means(), s.output_means()) for s in summaries]
    records = rank_report(results, dists, graph, pareto_frontier(points))
    if fmt is OutputFormat.CSV:
        return _csv(
            ["rank", "setup", "theta", *STAT_FIELDS, "frontier", "dominates", "dominated_by"],
            [[r.rank, r.setup, r.theta * scale, *stats_dict(r.stats).values(),
              str(r.frontier).lower(), ";".join(r.dominates), ";".join(r.dominated_by)]
             for r in records])
    by_name = {d.setup: d for d in dists}
    setups = []
    for r in records:
        entry = {"name": r.setup, "rank": r.rank, "theta": r.theta * scale,
                 "frontier": r.frontier, "stats": stats_dict(r.stats),
                 "dominates": list(r.dominates), "dominated_by": list(r.dominated_by)}
        if config.raw_samples:
            entry["samples"] = [v * scale for v in by_name[r.setup].samples]
        setups.append(entry)
    return _json(config, setups,
                 edges=[list(e) for e in graph.edges],
                 reduced_edges=[list(e) for e in graph.reduced_edges])


def run(config: RunConfig, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", SingleRepeatWarning)
            text = _report(config)
    except (OSError, UnicodeDecodeError, DatasetError) as exc:
        print(f"effrank: error: {exc}", file=stderr)
        return 1
    except (SolverFailure, NumericalFailure) as exc:
        print(f"effrank: solver failure: {exc}", file=stderr)
        lp = getattr(exc, "lp", None)
        if config.debug_lp and lp is not None:
            stderr.write(format_lp(lp))
        return 2
    for w in caught:
        print(f"effrank: warning: {w.message}", file=stderr)
    stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="dataset file (.csv, or .json for the JSON mirror)")
    common.add_argument("--form", choices=[f.value for f in FrontierForm], default="convex")
    common.add_argument("--replicates", type=int, default=1000, metavar="B")
    common.add_argument("--seed", type=int, default=0, metavar="S")
    common.add_argument("--tolerance", type=float, default=1e-12, metavar="T",
                        help="absolute tolerance of the dominance test")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default="csv")
    common.add_argument("--raw-samples", action="store_true",
                        help="include every bootstrap sample in the report")
    common.add_argument("--no-percent", action="store_true",
                        help="report efficiencies in [0, 1] instead of percent")
    common.add_argument("--debug-lp", action="store_true",
                        help="dump the failing linear program on solver errors")
    common.add_argument("--workers", type=int, default=1,
                        help="processes for bootstrap replicates (output is unaffected)")

    parser = argparse.ArgumentParser(
        prog="effrank",
        description="Rank setups by stochastic multi-dimensional relative efficiency.")
    sub = parser.add_subparsers(dest="command", required=True)
    for cmd, text in [
        (Command.EFFICIENCY, "deterministic efficiency per setup"),
        (Command.FRONTIER, "Pareto frontier membership"),
        (Command.BOOTSTRAP, "bootstrap efficiency boxplot statistics"),
        (Command.RANK, "full ranking with stochastic dominance"),
    ]:
        sub.add_parser(cmd.value, parents=[common], help=text)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            input_path=args.input,
            command=Command(args.command),
            form=FrontierForm(args.form),
            replicates=args.replicates,
            seed=args.seed,
            tolerance=args.tolerance,
            output_format=OutputFormat(args.format),
            scale_percent=not args.no_percent,
            raw_samples=args.raw_samples,
            debug_lp=args.debug_lp,
            workers=args.workers,
        )
        BootstrapConfig(config.replicates, config.seed, workers=config.workers)
    except ValueError as exc:
        print(f"effrank: error: {exc}", file=sys.stderr)
        return 1
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
