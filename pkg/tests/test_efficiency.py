import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog

from conftest import make_points, make_summaries
from effrank.efficiency import (FrontierForm, build_dea_lp, efficiency_scores,
                                point_efficiencies)
from effrank.errors import DimensionMismatch
from effrank.pareto import Point, dominates
from effrank.simplex import Relation
from oracles import ratio_efficiency

CONVEX, AFFINE = FrontierForm.CONVEX, FrontierForm.AFFINE


def thetas(rows, form):
    return [r.theta for r in point_efficiencies(make_points(rows), form)]


def test_lp_shape():
    pts = make_points([("A", [1], [1]), ("B", [2], [1])])
    convex = build_dea_lp(pts, 0, CONVEX)
    assert convex.num_variables == 3
    assert [c.relation for c in convex.constraints] == [Relation.LE, Relation.GE, Relation.EQ]
    affine = build_dea_lp(pts, 0, AFFINE)
    assert [c.relation for c in affine.constraints] == [Relation.LE, Relation.GE]


def test_lp_errors():
    pts = make_points([("A", [1], [1]), ("B", [2], [1])])
    with pytest.raises(DimensionMismatch):
        build_dea_lp(pts, 2, CONVEX)
    with pytest.raises(DimensionMismatch):
        build_dea_lp(pts + [Point("C", [1, 2], [1])], 0, CONVEX)


def test_single_setup():
    [r] = efficiency_scores(make_summaries([("A", [3], [2])]), CONVEX)
    assert r.theta == 1.0 and r.peer_weights == {"A": 1.0}


def test_two_setup_ratio():
    assert thetas([("A", [1], [1]), ("B", [2], [1])], AFFINE) == pytest.approx([1, 0.5])


def test_three_setup_forms():
    rows = [("A", [1], [1]), ("B", [2], [3]), ("C", [4], [4])]
    # affine: ratios 1, 1.5, 1 -> A and C at 2/3
    assert thetas(rows, AFFINE) == pytest.approx([2 / 3, 1, 2 / 3])
    # convex: A is the cheapest point and C the only one reaching output 4
    assert thetas(rows, CONVEX) == pytest.approx([1, 1, 1])


def test_identical_setups():
    assert thetas([("A", [2], [3]), ("B", [2], [3])], CONVEX) == [1.0, 1.0]


def test_convex_peer_weights_sum_to_one():
    rng = np.random.default_rng(3)
    rows = [(str(i), rng.uniform(1, 5, 2), rng.uniform(1, 5, 1)) for i in range(8)]
    for r in point_efficiencies(make_points(rows), CONVEX):
        assert sum(r.peer_weights.values()) == pytest.approx(1, abs=1e-9)
        assert min(r.peer_weights.values()) >= 0


def highs_theta(points, i, form):
    """The same envelopment LP solved by HiGHS."""
    X = np.array([p.inputs for p in points]).T
    Y = np.array([p.outputs for p in points]).T
    n = len(points)
    A_ub = np.vstack([np.hstack([-X[:, [i]], X]), np.hstack([np.zeros((Y.shape[0], 1)), -Y])])
    b_ub = np.concatenate([np.zeros(X.shape[0]), -Y[:, i]])
    kw = {}
    if form is CONVEX:
        kw = dict(A_eq=np.hstack([[0.0], np.ones(n)])[None, :], b_eq=[1.0])
    res = linprog(np.eye(n + 1)[0], A_ub=A_ub, b_ub=b_ub, bounds=[(None, None)] + [(0, None)] * n,
                  method="highs", **kw)
    return res.fun


@pytest.mark.parametrize("form", [CONVEX, AFFINE])
def test_matches_highs(form):
    rng = np.random.default_rng(5)
    for _ in range(20):
        n = int(rng.integers(2, 12))
        rows = [(str(i), rng.uniform(0.1, 10, 3), rng.uniform(0.1, 10, 2)) for i in range(n)]
        pts = make_points(rows)
        got = [r.theta for r in point_efficiencies(pts, form)]
        want = [highs_theta(pts, i, form) for i in range(n)]
        assert got == pytest.approx(want, abs=1e-7)


def instances(max_n=10, L=2, J=1):
    val = st.floats(0.1, 10, allow_nan=False)
    return st.integers(2, max_n).flatmap(lambda n: st.lists(
        st.tuples(st.lists(val, min_size=L, max_size=L), st.lists(val, min_size=J, max_size=J)),
        min_size=n, max_size=n)).map(lambda rows: [(f"s{k}", x, y) for k, (x, y) in enumerate(rows)])


@given(instances(L=1, J=1))
def test_univariate_affine_matches_ratio(rows):
    x = [r[1][0] for r in rows]
    y = [r[2][0] for r in rows]
    assert thetas(rows, AFFINE) == pytest.approx(list(ratio_efficiency(x, y)), abs=1e-6)


@given(instances())
def test_basic_invariants(rows):
    for form in (CONVEX, AFFINE):
        t = thetas(rows, form)
        assert all(0 < v <= 1 for v in t)
        assert max(t) == 1.0


@given(instances())
def test_convex_at_least_affine(rows):
    for c, a in zip(thetas(rows, CONVEX), thetas(rows, AFFINE)):
        assert c >= a - 1e-9


@given(instances(), st.lists(st.floats(0.1, 10), min_size=10, max_size=10))
def test_extra_input_never_lowers(rows, extra):
    wider = [(name, list(x) + [extra[k]], y) for k, (name, x, y) in enumerate(rows)]
    for form in (CONVEX, AFFINE):
        for a, b in zip(thetas(rows, form), thetas(wider, form)):
            assert b >= a - 1e-9


@given(instances(), st.tuples(st.lists(st.floats(0.1, 10), min_size=2, max_size=2),
                              st.lists(st.floats(0.1, 10), min_size=1, max_size=1)))
def test_new_setup_never_raises(rows, new):
    bigger = rows + [("new", *new)]
    for form in (CONVEX, AFFINE):
        for a, b in zip(thetas(rows, form), thetas(bigger, form)):
            assert b <= a + 1e-9


@given(instances(), st.integers(0, 1), st.sampled_from([1e-3, 0.5, 7.0, 1e3]))
def test_input_scale_invariance(rows, col, c):
    scaled = [(name, [v * c if l == col else v for l, v in enumerate(x)], y) for name, x, y in rows]
    for form in (CONVEX, AFFINE):
        assert thetas(scaled, form) == pytest.approx(thetas(rows, form), abs=1e-9)


@given(instances(), st.floats(0.05, 0.95), st.integers(0, 9), st.integers(0, 9))
def test_dominance_bound(rows, c, i, j):
    i, j = i % len(rows), j % len(rows)
    if i == j:
        return
    # make j a c-scaled, output-superior copy of i
    name_j = rows[j][0]
    rows = list(rows)
    rows[j] = (name_j, [c * v for v in rows[i][1]], [v * 1.1 for v in rows[i][2]])
    pts = make_points(rows)
    assert dominates(pts[j], pts[i])
    for form in (CONVEX, AFFINE):
        assert thetas(rows, form)[i] <= c + 1e-9
