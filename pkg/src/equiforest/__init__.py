"""Equitable partitions of graphs into induced forests."""

from .certify import (
    Certificate,
    Partition,
    Verdict,
    graph_hash,
    is_forest,
    is_in_out_star_forest,
    is_linear_forest,
    is_stable_set,
    is_star_forest,
    verify_partition,
)
from .coloring import (
    Coloring,
    exact_chromatic,
    exact_coloring,
    exact_oriented_star_coloring,
    greedy_acyclic,
    greedy_star,
    verify_acyclic,
    verify_oriented_consistent,
    verify_proper,
    verify_star,
)
from .degenerate import (
    SplitterConfig,
    equitable_forests,
    forests_from_degenerate,
    kdeg_split,
    plan_route,
)
from .errors import (
    BudgetExceeded,
    CapExceeded,
    EquiforestError,
    EquitabilityDrift,
    HeuristicFailure,
    InvalidColoring,
    InvalidPartition,
    NoRoute,
)
from .extend import PartitionOracle, extend_partition, identity_oracle, trim_forest
from .formats import parse_arc_list, parse_edge_list, parse_graph6, write_graph6
from .generators import generate
from .graph import Graph, GraphError, Orientation, degeneracy, induced_subgraph
from .merge import merge_partition, merge_partition_oriented, select_merge_pair
from .oracle import brute_force_equitable, cross_validate

__version__ = "0.1.0"
