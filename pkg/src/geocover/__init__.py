"""Exact solver for metric geodesic cover numbers of finite multigraphs.

Candidate covers live on the 2-subdivision, retractedness is a combinatorial
germ condition, and realizability as shortest paths is decided by an exact
rational feasibility LP.  See the README for the command-line interface.
"""

from .cover import (Cover, apply_symmetry, covers_all_segments, find_covers,
                    is_minimal_in_reroutings, is_minimal_in_symmetries,
                    is_retracted, path_permutation, reroutings)
from .driver import (CoverNumberReport, CoverWitness, SearchConfig,
                     cover_number, distinct_optimal_covers, lower_bound,
                     upper_bound)
from .errors import (BudgetExceededError, CoverageError, FileFormatError,
                     GeocoverError, InconsistentConfigError,
                     InvalidParameterError, SizeGuardError,
                     UnknownStandardGraphError)
from .lp import (FeasibilityResult, LPProgram, build_feasibility_program,
                 check_fixed_weights, solve_feasibility)
from .metrics import (dijkstra, make_weighting, normalize_weighting,
                      scale_weighting, shortest_path_length, unit_weighting)
from .multigraph import (Automorphism, Multigraph, automorphisms,
                         build_standard, identity_automorphism)
from .paths import PathPool, PathSeq, enumerate_simple_paths
from .subdivision import (SubdividedGraph, contract_midpoints,
                          lift_automorphism, two_subdivision)
from .tripleconfig import (OrientedPathSystem, TripleConfig, check_admissible,
                           classify_three, compatible_orientation_two,
                           config_to_graph, construct_metric_two,
                           enumerate_group, realize_system, system_feasible)

__version__ = "0.1.0"
