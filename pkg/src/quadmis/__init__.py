"""Continuous local search for maximum independent sets.

The solver relaxes set membership to [0,1]^n, minimizes a quadratic
penalty/reward objective with clipped Adam steps from many random starts,
and rounds any iterate whose sign pattern certifies a maximal independent
set.
"""

from .bench import (
    PRESETS,
    BenchInstance,
    BenchRow,
    BenchSuite,
    BenchSummary,
    bench_suite,
    parse_suite,
    resolve_config,
    write_summary,
)
from .checker import (
    ContractViolation,
    direct_mis_check,
    fast_mis_check,
    support,
    threshold,
)
from .generators import InvalidEdgeCount, gen_er, gen_gnm, gnm_edge_count
from .graph import Graph, InvalidEdge, NodeSet
from .graph_io import (
    ParseError,
    load_graph,
    parse_dimacs,
    parse_edge_list,
    write_dimacs,
    write_edge_list,
    write_report,
)
from .initialization import (
    DegenerateDegreeMean,
    InitSpec,
    degree_mean,
    gaussian_around_mean,
    load_mean_file,
    random_init,
)
from .objective import (
    DimensionError,
    InvalidGamma,
    ObjectiveParams,
    evaluate,
    gamma_floor_wei,
    gamma_select,
    gradient,
)
from .optimizer import (
    AdamState,
    NumericalError,
    RunOutcome,
    SolveReport,
    SolverConfig,
    adam_step,
    run_resampling,
    run_single,
    solve,
)
from .oracle import OracleResult, TooLarge, exact_mis, greedy_min_degree

__version__ = "0.1.0"

__all__ = [
    "AdamState",
    "BenchInstance",
    "BenchRow",
    "BenchSuite",
    "BenchSummary",
    "ContractViolation",
    "DegenerateDegreeMean",
    "DimensionError",
    "Graph",
    "InitSpec",
    "InvalidEdge",
    "InvalidEdgeCount",
    "InvalidGamma",
    "NodeSet",
    "NumericalError",
    "ObjectiveParams",
    "OracleResult",
    "ParseError",
    "PRESETS",
    "RunOutcome",
    "SolveReport",
    "SolverConfig",
    "TooLarge",
    "adam_step",
    "bench_suite",
    "degree_mean",
    "direct_mis_check",
    "evaluate",
    "exact_mis",
    "fast_mis_check",
    "gamma_floor_wei",
    "gamma_select",
    "gaussian_around_mean",
    "gen_er",
    "gen_gnm",
    "gnm_edge_count",
    "gradient",
    "greedy_min_degree",
    "load_graph",
    "load_mean_file",
    "parse_dimacs",
    "parse_edge_list",
    "parse_suite",
    "random_init",
    "resolve_config",
    "run_resampling",
    "run_single",
    "solve",
    "support",
    "threshold",
    "write_dimacs",
    "write_edge_list",
    "write_report",
    "write_summary",
]
