import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from effrank.measurements import Direction, MetricSpec, SetupSummary  # noqa: E402
from effrank.pareto import Point  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def make_summaries(rows, spreads=None, n_inputs=None):
    """Summaries from ``(name, inputs, outputs)`` triples; spreads default to 0."""
    L = len(rows[0][1]) if n_inputs is None else n_inputs
    J = len(rows[0][2])
    metrics = tuple([MetricSpec(f"x{l}", Direction.INPUT) for l in range(L)]
                    + [MetricSpec(f"y{j}", Direction.OUTPUT) for j in range(J)])
    out = []
    for k, (name, xs, ys) in enumerate(rows):
        mean = {f"x{l}": float(v) for l, v in enumerate(xs)}
        mean.update({f"y{j}": float(v) for j, v in enumerate(ys)})
        if spreads is None:
            std = {m: 0.0 for m in mean}
        else:
            sx, sy = spreads[k]
            std = {f"x{l}": float(v) for l, v in enumerate(sx)}
            std.update({f"y{j}": float(v) for j, v in enumerate(sy)})
        out.append(SetupSummary(name, metrics, mean, std))
    return out


def make_points(rows):
    return [Point(name, xs, ys) for name, xs, ys in rows]


@pytest.fixture
def ab_csv(tmp_path):
    path = tmp_path / "ab.csv"
    path.write_text("setup,repeat,input:latency_ms,output:top1\nA,1,1,1\nB,1,2,1\n")
    return path


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("[")[1].split("]")[0])):
        terminalreporter.write_line(line)
