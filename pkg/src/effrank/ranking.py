"""Stochastic-dominance ordering of setups from bootstrap distributions."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .efficiency import EfficiencyResult
from .errors import InconsistentSetups, UnequalSampleCounts
from .stochastic import BootstrapDistribution, BoxplotStats


class DominanceRelation(enum.Enum):
    FIRST_DOMINATES = "first"
    SECOND_DOMINATES = "second"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominanceGraph:
    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    reduced_edges: tuple[tuple[str, str], ...]


@dataclass(frozen=True)
class RankRecord:
    rank: int
    setup: str
    theta: float
    stats: BoxplotStats
    frontier: bool
    dominates: tuple[str, ...]
    dominated_by: tuple[str, ...]


def _samples(d) -> Sequence[float]:
    return d.samples if isinstance(d, BootstrapDistribution) else d


def stochastic_dominance(a, b, tolerance: float = 1e-12) -> DominanceRelation:
    """Empirical first-order dominance by comparing sorted samples rank by rank.

    ``a`` and ``b`` are bootstrap distributions or plain sample sequences of
    equal length.
    """
    xa, xb = sorted(_samples(a)), sorted(_samples(b))
    if len(xa) != len(xb):
        raise UnequalSampleCounts(f"{len(xa)} vs {len(xb)} samples")
    a_ge = b_ge = True
    a_gt = b_gt = False
    for u, v in zip(xa, xb):
        if u < v - tolerance:
            a_ge = False
        if v < u - tolerance:
            b_ge = False
        if u > v + tolerance:
            a_gt = True
        if v > u + tolerance:
            b_gt = True
    if a_ge and a_gt:
        return DominanceRelation.FIRST_DOMINATES
    if b_ge and b_gt:
        return DominanceRelation.SECOND_DOMINATES
    return DominanceRelation.INCOMPARABLE


def transitive_reduction(nodes: Iterable[str], edges: Iterable[tuple[str, str]]) -> list[tuple[str, str]]:
    """Drop every edge u->v that is implied by a longer path; input must be acyclic."""
    succ: dict[str, set[str]] = {n: set() for n in nodes}
    for u, v in edges:
        succ[u].add(v)

    def reachable_without(u: str, v: str) -> bool:
        stack = [w for w in succ[u] if w != v]
        seen = set(stack)
        while stack:
            w = stack.pop()
            if w == v:
                return True
            for x in succ[w]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return False

    return sorted((u, v) for u in succ for v in succ[u] if not reachable_without(u, v))


def dominance_graph(dists: Sequence[BootstrapDistribution], tolerance: float = 1e-12) -> DominanceGraph:
    sizes = {len(d.samples) for d in dists}
    if len(sizes) > 1:
        raise UnequalSampleCounts(f"distributions have differing sample counts {sorted(sizes)}")
    edges = []
    for i, a in enumerate(dists):
        for b in dists[i + 1:]:
            rel = stochastic_dominance(a, b, tolerance)
            if rel is DominanceRelation.FIRST_DOMINATES:
                edges.append((a.setup, b.setup))
            elif rel is DominanceRelation.SECOND_DOMINATES:
                edges.append((b.setup, a.setup))
    nodes = tuple(sorted(d.setup for d in dists))
    edges.sort()
    return DominanceGraph(nodes, tuple(edges), tuple(transitive_reduction(nodes, edges)))


def rank_report(results: Sequence[EfficiencyResult], dists: Sequence[BootstrapDistribution],
                graph: DominanceGraph, frontier: Iterable[str] | None = None) -> list[RankRecord]:
    """One record per setup, best median bootstrap efficiency first.

    ``frontier`` names the Pareto-optimal setups; when omitted, a setup counts
    as frontier when its deterministic efficiency is 1.
    """
    theta = {r.setup: r.theta for r in results}
    by_name = {d.setup: d for d in dists}
    names = set(theta)
    if (names != set(by_name) or names != set(graph.nodes)
            or len(theta) != len(results) or len(by_name) != len(dists)):
        raise InconsistentSetups("results, distributions and graph cover different setups")
    front = set(frontier) if frontier is not None else {s for s, t in theta.items() if t == 1.0}
    if not front <= names:
        raise InconsistentSetups(f"unknown frontier setups: {sorted(front - names)}")

    order = sorted(names, key=lambda s: (-by_name[s].stats.median, s))
    return [
        RankRecord(
            rank=k,
            setup=s,
            theta=theta[s],
            stats=by_name[s].stats,
            frontier=s in front,
            dominates=tuple(sorted(v for u, v in graph.edges if u == s)),
            dominated_by=tuple(sorted(u for u, v in graph.edges if v == s)),
        )
        for k, s in enumerate(order, start=1)
    ]
