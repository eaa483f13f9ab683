"""Exact generalized-domination partition solvers, reduction constructions and a conveyor flow shop solver."""
from .errors import DomaticLabError, TimedOut, TooLarge
from .graph import DecoratedGraph, Graph, Partition, build_graph, disjoint_union, join
from .quantities import alpha, beta, chromatic_number, domatic_number, gamma
from .sigma_rho import MENU, SigmaRhoSpec, parse_spec
from .solver import SolveResult, Status, brute_force_partition, exists_partition

__version__ = "0.1.0"

__all__ = [
    "DecoratedGraph",
    "DomaticLabError",
    "Graph",
    "MENU",
    "Partition",
    "SigmaRhoSpec",
    "SolveResult",
    "Status",
    "TimedOut",
    "TooLarge",
    "alpha",
    "beta",
    "brute_force_partition",
    "build_graph",
    "chromatic_number",
    "disjoint_union",
    "domatic_number",
    "exists_partition",
    "gamma",
    "join",
    "parse_spec",
]
