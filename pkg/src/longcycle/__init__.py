"""Long simple cycles in undirected networks.

A small toolkit around one NP-hard problem: find the longest simple cycle.
It ships the probabilistic ant-based heuristic with inverse pheromone
reinforcement, the multi-start local-search baseline it is measured
against, an exact backtracking oracle for small graphs, and a benchmark
harness that reproduces published results on public network instances.
"""
from .graph import (Cycle, Graph, ParseDiagnostics, ParseError, PruneResult,
                    parse_dimacs, parse_edge_list, parse_gml, prune_leaves,
                    validate_cycle)
from .pheromone import (PheromoneState, init_pheromones, sample_neighbor,
                        sample_visit_order, update_pheromones)
from .construction import construct_cycle, probe_from_root
from .local_search import (LS_III, LS_IV, LsBudget, local_search, quad_grow,
                           quad_swap, tri_grow, tri_swap)
from .solvers import (RunReport, SolverConfig, anth_ls, exact_longest_cycle,
                      msls)
from .bench import (AggregateReport, ExperimentSpec, export_cycle_dot,
                    load_graph, run_experiment, summarize, write_report)

__version__ = "0.1.0"

__all__ = [
    "AggregateReport", "Cycle", "ExperimentSpec", "Graph", "LS_III", "LS_IV",
    "LsBudget", "ParseDiagnostics", "ParseError", "PheromoneState",
    "PruneResult", "RunReport", "SolverConfig", "anth_ls", "construct_cycle",
    "exact_longest_cycle", "export_cycle_dot", "init_pheromones",
    "load_graph", "local_search", "msls", "parse_dimacs", "parse_edge_list",
    "parse_gml", "probe_from_root", "prune_leaves", "quad_grow", "quad_swap",
    "run_experiment", "sample_neighbor", "sample_visit_order", "summarize",
    "tri_grow", "tri_swap", "update_pheromones", "validate_cycle",
    "write_report",
]
