"""Dense two-phase primal simplex for small linear programs.

Minimizes ``c @ z`` subject to rows ``a @ z (<=|>=|=) b`` with each variable
either nonnegative or free. Free variables are split into positive and
negative parts. Rows are scaled to unit max-norm before pivoting, so the
feasibility tolerance is an absolute bound on scaled rows.

The tableau is kept as plain Python lists: the efficiency LPs solved here
have a handful of rows and a few dozen columns, where list arithmetic is
several times faster than per-pivot numpy dispatch.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionMismatch, NumericalFailure


class Relation(enum.Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class Bound(enum.Enum):
    NONNEGATIVE = "nonnegative"
    FREE = "free"


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[float, ...]
    relation: Relation
    rhs: float

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(map(float, self.coefficients)))
        object.__setattr__(self, "rhs", float(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """``minimize objective @ z`` over ``constraints``; bounds default to nonnegative."""

    objective: tuple[float, ...]
    constraints: tuple[Constraint, ...]
    bounds: tuple[Bound, ...] = ()

    def __post_init__(self):
        c = tuple(map(float, self.objective))
        object.__setattr__(self, "objective", c)
        object.__setattr__(self, "constraints", tuple(self.constraints))
        bounds = tuple(self.bounds) or (Bound.NONNEGATIVE,) * len(c)
        object.__setattr__(self, "bounds", bounds)
        if len(bounds) != len(c):
            raise DimensionMismatch(
                f"{len(bounds)} variable bounds for {len(c)} objective coefficients")
        for k, row in enumerate(self.constraints):
            if len(row.coefficients) != len(c):
                raise DimensionMismatch(
                    f"constraint {k} has {len(row.coefficients)} coefficients, expected {len(c)}")
        # a sum of finite floats is nan/inf only if some entry is (or it overflows)
        total = sum(c) + sum(sum(row.coefficients) + row.rhs for row in self.constraints)
        if not math.isfinite(total):
            if not (all(map(math.isfinite, c)) and all(
                    all(map(math.isfinite, row.coefficients)) and math.isfinite(row.rhs)
                    for row in self.constraints)):
                raise ValueError("linear program contains non-finite entries")

    @property
    def num_variables(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LpSolution:
    status: Status
    objective_value: float | None = None
    variables: tuple[float, ...] | None = None
    iterations: int = 0


@dataclass(frozen=True)
class SimplexOptions:
    feas_tol: float = 1e-9
    pivot_tol: float = 1e-10
    # consecutive degenerate pivots tolerated before switching to Bland's rule
    degenerate_limit: int = 50
    max_iterations: int = 10_000


DEFAULT_OPTIONS = SimplexOptions()


@dataclass
class _Tableau:
    rows: list[list[float]]          # each row: coefficients..., rhs
    basis: list[int]
    ncols: int
    artificial_start: int
    options: SimplexOptions
    iterations: int = 0
    bland: bool = False
    degenerate_run: int = 0
    active: list[bool] = field(default_factory=list)

    def pivot(self, obj: list[float], r: int, c: int) -> None:
        prow = self.rows[r]
        inv = 1.0 / prow[c]
        prow = [v * inv for v in prow]
        prow[c] = 1.0
        self.rows[r] = prow
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f != 0.0:
                new = [a - f * b for a, b in zip(row, prow)]
                new[c] = 0.0
                self.rows[i] = new
        f = obj[c]
        if f != 0.0:
            obj[:] = [a - f * b for a, b in zip(obj, prow)]
            obj[c] = 0.0
        self.basis[r] = c
        self.iterations += 1

    def optimize(self, obj: list[float]) -> bool:
        """Pivot to optimality; return False when the objective is unbounded.

        Dantzig pricing, switching to Bland's rule after a run of degenerate
        pivots. In the ratio test near-ties go to the smallest basic index.
        """
        opts = self.options
        tol, ptol, feas_tol = opts.feas_tol, opts.pivot_tol, opts.feas_tol
        active, basis, rows = self.active, self.basis, self.rows
        cols = [j for j in range(self.ncols) if active[j]]
        isfinite = math.isfinite
        while True:
            # pricing
            c = -1
            if self.bland:
                for j in cols:
                    if obj[j] < -tol:
                        c = j
                        break
            else:
                best = -tol
                for j in cols:
                    v = obj[j]
                    if v < best:
                        best, c = v, j
            if c < 0:
                return True
            # ratio test
            r, best_ratio = -1, math.inf
            for i, row in enumerate(rows):
                a = row[c]
                if a <= ptol:
                    continue
                rhs = row[-1]
                ratio = (rhs if rhs > 0.0 else 0.0) / a
                slack = 1e-13 * (1.0 + ratio)
                if r < 0 or ratio < best_ratio - slack:
                    r, best_ratio = i, ratio
                elif ratio <= best_ratio + slack and basis[i] < basis[r]:
                    r, best_ratio = i, ratio
            if r < 0:
                return False
            if self.iterations >= opts.max_iterations:
                raise NumericalFailure(
                    f"simplex exceeded {opts.max_iterations} iterations")
            if rows[r][-1] <= feas_tol:
                self.degenerate_run += 1
                if self.degenerate_run > opts.degenerate_limit:
                    self.bland = True
            else:
                self.degenerate_run = 0
            self.pivot(obj, r, c)
            if not isfinite(sum(obj)):
                raise NumericalFailure("tableau overflow; rescale the instance")


def solve_lp(lp: LinearProgram, options: SimplexOptions = DEFAULT_OPTIONS) -> LpSolution:
    # structural columns as (original variable, sign); free variables get two
    expand: list[tuple[int, float]] = []
    for k, b in enumerate(lp.bounds):
        expand.append((k, 1.0))
        if b is Bound.FREE:
            expand.append((k, -1.0))
    nstruct = len(expand)

    scaled: list[tuple[list[float], Relation, float]] = []
    for con in lp.constraints:
        coefs = con.coefficients
        s = max(map(abs, coefs), default=0.0)
        rel, rhs = con.relation, con.rhs
        if s == 0.0:
            ok = ((rel is Relation.LE and 0.0 <= rhs + options.feas_tol)
                  or (rel is Relation.GE and 0.0 >= rhs - options.feas_tol)
                  or (rel is Relation.EQ and abs(rhs) <= options.feas_tol))
            if not ok:
                return LpSolution(Status.INFEASIBLE)
            continue
        if rhs < 0.0:
            s = -s
            if rel is Relation.LE:
                rel = Relation.GE
            elif rel is Relation.GE:
                rel = Relation.LE
        rhs /= s
        a = [sign * coefs[k] / s for k, sign in expand]
        scaled.append((a, rel, rhs))


    nslack = sum(1 for _, rel, _ in scaled if rel is not Relation.EQ)
    nart = sum(1 for _, rel, _ in scaled if rel is not Relation.LE)
    total = nstruct + nslack + nart
    art_start = nstruct + nslack

    rows: list[list[float]] = []
    basis: list[int] = []
    s_idx, a_idx = nstruct, art_start
    for a, rel, rhs in scaled:
        row = a + [0.0] * (nslack + nart) + [rhs]
        if rel is Relation.LE:
            row[s_idx] = 1.0
            basis.append(s_idx)
            s_idx += 1
        else:
            if rel is Relation.GE:
                row[s_idx] = -1.0
                s_idx += 1
            row[a_idx] = 1.0
            basis.append(a_idx)
            a_idx += 1
        rows.append(row)

    tab = _Tableau(rows, basis, total, art_start, options, active=[True] * total)

    if nart:
        # phase 1: minimize the sum of artificials
        obj = [0.0] * (total + 1)
        for j in range(art_start, total):
            obj[j] = 1.0
        for i, bv in enumerate(basis):
            if bv >= art_start:
                obj = [o - v for o, v in zip(obj, rows[i])]
        tab.optimize(obj)
        if -obj[-1] > options.feas_tol:
            return LpSolution(Status.INFEASIBLE, iterations=tab.iterations)
        _drive_out_artificials(tab)
        for j in range(art_start, total):
            tab.active[j] = False

    cost = [sign * lp.objective[k] for k, sign in expand] + [0.0] * (total - nstruct + 1)
    obj = list(cost)
    for i, bv in enumerate(tab.basis):
        cb = cost[bv]
        if cb != 0.0:
            obj = [o - cb * v for o, v in zip(obj, tab.rows[i])]
    tab.bland = False
    tab.degenerate_run = 0
    if not tab.optimize(obj):
        return LpSolution(Status.UNBOUNDED, iterations=tab.iterations)

    x = [0.0] * total
    for i, bv in enumerate(tab.basis):
        x[bv] = max(tab.rows[i][-1], 0.0)
    z = [0.0] * lp.num_variables
    for col, (k, sign) in enumerate(expand):
        z[k] += sign * x[col]
    value = math.fsum(c * v for c, v in zip(lp.objective, z))
    return LpSolution(Status.OPTIMAL, value, tuple(z), tab.iterations)


def _drive_out_artificials(tab: _Tableau) -> None:
    """Pivot zero-level artificials out of the basis; drop redundant rows."""
    ptol = tab.options.pivot_tol
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] < tab.artificial_start:
            i += 1
            continue
        row = tab.rows[i]
        best_j, best = -1, ptol
        for j in range(tab.artificial_start):
            if abs(row[j]) > best:
                best_j, best = j, abs(row[j])
        if best_j < 0:
            del tab.rows[i]
            del tab.basis[i]
            continue
        tab.pivot([0.0] * (tab.ncols + 1), i, best_j)
        i += 1


def format_lp(lp: LinearProgram) -> str:
    """Plain-text ``minimize / subject to`` dump, for bug reports."""

    def linear(coefs: Sequence[float]) -> str:
        terms = [f"{c!r} z{k}" for k, c in enumerate(coefs) if c != 0.0]
        return " + ".join(terms) if terms else "0"

    lines = ["minimize", f"  {linear(lp.objective)}", "subject to"]
    for con in lp.constraints:
        lines.append(f"  {linear(con.coefficients)} {con.relation.value} {con.rhs!r}")
    free = [f"z{k}" for k, b in enumerate(lp.bounds) if b is Bound.FREE]
    nonneg = [f"z{k}" for k, b in enumerate(lp.bounds) if b is Bound.NONNEGATIVE]
    if nonneg:
        lines.append(f"  {', '.join(nonneg)} >= 0")
    if free:
        lines.append(f"  {', '.join(free)} free")
    return "\n".join(lines) + "\n"
