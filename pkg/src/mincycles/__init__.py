"""Minimal codewords of binary codes and cycles of multigraphs.

Exact counting engines, closed-form bounds, the extremal graph families and
randomized checks of the bounds.
"""

from .bounds import bound_report, entropy, figure1_table, mu_bounds, mu_g, solve_R0
from .cycles import (
    count_cycles,
    count_cycles_backtrack,
    count_cycles_codespace,
    count_paths,
    cycles_through_edge,
    f_multipath,
)
from .eulerian import theorem6_verdict
from .gf2 import BitWord, LinearCode, decompose, is_minimal, make_code, minimal_report
from .graph import Multigraph, cycle_code, is_cycle, parse_graph, properties

__version__ = "0.1.0"
