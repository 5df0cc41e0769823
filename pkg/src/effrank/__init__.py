"""Rank system setups by stochastic multi-dimensional relative efficiency."""

from .efficiency import (EfficiencyResult, FrontierForm, build_dea_lp,
                         efficiency_scores, point_efficiencies)
from .measurements import (Dataset, Direction, MeasurementRecord, MetricSpec,
                           SetupSummary, load_dataset, parse_dataset,
                           serialize_dataset, summarize)
from .pareto import Point, dominates, pareto_frontier
from .ranking import (DominanceGraph, DominanceRelation, RankRecord,
                      dominance_graph, rank_report, stochastic_dominance)
from .simplex import (Bound, Constraint, LinearProgram, LpSolution, Relation,
                      SimplexOptions, Status, solve_lp)
from .stochastic import (BootstrapConfig, BootstrapDistribution, BoxplotStats,
                         bootstrap_efficiencies, boxplot_stats, sample_setup)

__version__ = "0.1.0"
