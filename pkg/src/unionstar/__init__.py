"""Union vertex-distinguishing edge colorings built from star partitions of ``P([k])``."""

from .coloring import (
    EdgeColoring,
    VerificationReport,
    color_forest,
    color_graph,
    color_onestar,
    empty_mode_bound,
    lower_bound,
    read_coloring,
    union_vertex_coloring,
    verify,
    write_coloring,
)
from .forest import OneStarAnatomy, analyze_onestar, is_onestar, spanning_onestar_forest
from .graph import Graph, components, generate, read_graph, write_graph
from .labels import Label, is_forest_partition, is_m_star
from .oracle import SearchBudget, exact_index, exists_coloring
from .stars import double, double_plus_singleton, double_split, partition, partition_with_empty

__version__ = "0.1.0"
