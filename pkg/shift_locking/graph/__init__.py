"""
@file
@brief Shortcuts to *graph*.
"""

from .debruijn import WeightedDigraph, DirectedCycle, build_graph, assign_weights, haar_weights
from .debruijn import cycle_to_periodic_point
from .mean_cycle import MeanCycleResult, GapResult, max_mean_cycle_karp, enumerate_cycles
from .mean_cycle import gap, gap_by_enumeration
from .graph_io import graph_to_json, read_graph_json, write_graph_json
