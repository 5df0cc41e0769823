"""Independent reference computations used by the test-suite.

None of these touch the simplex engine: LPs are checked by enumerating
vertices and extreme rays with numpy linear algebra, and univariate
efficiencies by the closed-form output/input ratio.
"""

from __future__ import annotations

import itertools

import numpy as np

from effrank.simplex import Bound, LinearProgram, Relation, Status


def _rows(lp: LinearProgram):
    """All constraints as (a, sense, b) with sense +1 for >=, -1 for <=, 0 for =."""
    sense = {Relation.GE: 1, Relation.LE: -1, Relation.EQ: 0}
    rows = [(np.array(c.coefficients, float), sense[c.relation], c.rhs) for c in lp.constraints]
    n = lp.num_variables
    for j in range(n):
        e = np.zeros(n)
        e[j] = 1.0
        rows.append((e, 1, 0.0))
    return rows


def _satisfied(A, S, b, X, tol):
    """Feasibility of each point in X (k x n) for rows A x (S) b."""
    lhs = X @ A.T                       # k x m
    viol = np.where(S > 0, b - lhs, np.where(S < 0, lhs - b, np.abs(lhs - b)))
    scale = np.maximum(1.0, np.abs(A).max(axis=1))
    return (viol <= tol * scale).all(axis=1)


def vertex_oracle(lp: LinearProgram, tol: float = 1e-9) -> tuple[Status, float | None]:
    """Brute-force LP solution for nonnegative variables.

    The feasible set is a pointed polyhedron, so it is empty iff it has no
    vertex, and the objective is unbounded below iff some extreme ray of the
    recession cone has negative cost.
    """
    if any(b is Bound.FREE for b in lp.bounds):
        raise ValueError("vertex_oracle handles nonnegative variables only")
    n = lp.num_variables
    rows = _rows(lp)
    A = np.array([r[0] for r in rows])
    S = np.array([r[1] for r in rows])
    b = np.array([r[2] for r in rows])
    c = np.array(lp.objective, float)

    subsets = np.array(list(itertools.combinations(range(len(rows)), n)))
    M = A[subsets]                      # k x n x n
    rhs = b[subsets]
    ok = np.abs(np.linalg.det(M)) > 1e-9
    if not ok.any():
        return Status.INFEASIBLE, None
    X = np.linalg.solve(M[ok], rhs[ok][..., None])[..., 0]
    X = X[_satisfied(A, S, b, X, tol)]
    if len(X) == 0:
        return Status.INFEASIBLE, None

    # extreme rays: n-1 independent active homogeneous rows
    if n == 1:
        rays = np.array([[1.0], [-1.0]])
    else:
        subsets = np.array(list(itertools.combinations(range(len(rows)), n - 1)))
        _, sv, vt = np.linalg.svd(A[subsets])
        full_rank = sv[:, -1] > 1e-9
        d = vt[full_rank, -1, :]
        rays = np.concatenate([d, -d])
    rays = rays[_satisfied(A, S, np.zeros_like(b), rays, tol)]
    if len(rays) and (rays @ c < -1e-9).any():
        return Status.UNBOUNDED, None
    return Status.OPTIMAL, float((X @ c).min())


def ratio_efficiency(x, y) -> np.ndarray:
    """Classical univariate efficiency: (y_i / x_i) / max_k (y_k / x_k)."""
    r = np.asarray(y, float) / np.asarray(x, float)
    return r / r.max()


def random_lp(rng: np.random.Generator, max_vars: int = 6, max_rows: int = 8) -> LinearProgram:
    from effrank.simplex import Constraint
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(1, max_rows + 1))
    rels = [Relation.LE, Relation.LE, Relation.LE, Relation.GE, Relation.EQ]
    rows = []
    if rng.random() < 0.5 and m > 1:
        # a bounding row keeps a good share of instances bounded
        rows.append(Constraint((1.0,) * n, Relation.LE, float(rng.integers(1, 21))))
    while len(rows) < m:
        a = rng.integers(-5, 6, size=n).astype(float)
        rows.append(Constraint(tuple(a), rels[int(rng.integers(len(rels)))],
                               float(rng.integers(-4, 11))))
    c = rng.integers(-5, 6, size=n).astype(float)
    return LinearProgram(tuple(c), tuple(rows))
