"""Input-oriented envelopment LP for relative efficiency.

For a target setup ``i`` the LP is

    minimize theta
    s.t.  sum_k lam_k * x[k, l] <= theta * x[i, l]   for each input l
          sum_k lam_k * y[k, j] >= y[i, j]           for each output j
          lam >= 0, theta free
          sum_k lam_k == 1                           (convex frontier only)

One peer-weight vector ``lam`` is shared by the input and output rows. With a
single input and output and the affine frontier this reduces to the classical
ratio ``(y_i / x_i) / max_k (y_k / x_k)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DimensionMismatch, SolverFailure
from .measurements import SetupSummary
from .pareto import Point
from .simplex import (DEFAULT_OPTIONS, Bound, Constraint, LinearProgram,
                      Relation, SimplexOptions, Status, solve_lp)


class FrontierForm(enum.Enum):
    CONVEX = "convex"
    AFFINE = "affine"


@dataclass(frozen=True)
class EfficiencyResult:
    setup: str
    theta: float
    peer_weights: Mapping[str, float]
    form: FrontierForm
    status: Status = Status.OPTIMAL


def build_dea_lp(points: Sequence[Point], target: int, form: FrontierForm) -> LinearProgram:
    """Envelopment LP over variables ``(theta, lam_1, ..., lam_n)``."""
    n = len(points)
    if not 0 <= target < n:
        raise DimensionMismatch(f"target index {target} out of range for {n} points")
    L, J = len(points[0].inputs), len(points[0].outputs)
    if L < 1 or J < 1:
        raise DimensionMismatch("need at least one input and one output")
    for p in points:
        if len(p.inputs) != L or len(p.outputs) != J:
            raise DimensionMismatch(f"point {p.setup!r} does not have {L} inputs and {J} outputs")
    me = points[target]

    rows = []
    for l in range(L):
        rows.append(Constraint((-me.inputs[l],) + tuple(p.inputs[l] for p in points),
                               Relation.LE, 0.0))
    for j in range(J):
        rows.append(Constraint((0.0,) + tuple(p.outputs[j] for p in points),
                               Relation.GE, me.outputs[j]))
    if form is FrontierForm.CONVEX:
        rows.append(Constraint((0.0,) + (1.0,) * n, Relation.EQ, 1.0))
    objective = (1.0,) + (0.0,) * n
    bounds = (Bound.FREE,) + (Bound.NONNEGATIVE,) * n
    return LinearProgram(objective, tuple(rows), bounds)


def point_efficiencies(points: Sequence[Point], form: FrontierForm,
                       options: SimplexOptions = DEFAULT_OPTIONS,
                       replicate: int | None = None) -> list[EfficiencyResult]:
    if not points:
        raise ValueError("no points")
    if len(points) == 1:
        p = points[0]
        return [EfficiencyResult(p.setup, 1.0, {p.setup: 1.0}, form)]
    results = []
    for i, p in enumerate(points):
        lp = build_dea_lp(points, i, form)
        sol = solve_lp(lp, options)
        if sol.status is not Status.OPTIMAL:
            raise SolverFailure(f"efficiency LP ended {sol.status.value}",
                                setup=p.setup, replicate=replicate, lp=lp)
        theta = sol.variables[0]
        # lam = e_i at theta = 1 is always feasible, so anything above 1 is round-off
        if theta > 1.0 - options.feas_tol:
            theta = 1.0
        weights = {q.setup: lam for q, lam in zip(points, sol.variables[1:])}
        results.append(EfficiencyResult(p.setup, theta, weights, form, sol.status))
    return results


def efficiency_scores(summaries: Sequence[SetupSummary], form: FrontierForm,
                      options: SimplexOptions = DEFAULT_OPTIONS) -> list[EfficiencyResult]:
    """Relative efficiency of every setup, evaluated at the measurement means."""
    points = [Point(s.setup, s.input_means(), s.output_means()) for s in summaries]
    return point_efficiencies(points, form, options)
