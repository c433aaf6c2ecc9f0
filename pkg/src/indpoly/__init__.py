"""Quadratic-size extended formulations for independence polytopes of
regular matroids, built from decomposition trees and certified exactly
at desk scale."""

from .gf2 import Gf2Matrix, assemble_1sum, assemble_2sum, assemble_3sum
from .matroid import BinaryMatroid, MatroidError
from .graphic import (Graph, cographic_independence_ef,
                      graphic_independence_ef, network_matrix,
                      spanning_forest_ef)
from .extform import (ExtendedFormulation, affine_complement, couple,
                      fix_variable, intersection, lp_feasible_point,
                      lp_optimize, monotonize, product, vrep_lift)
from .decomp import (CographicLeaf, DecompError, GraphicLeaf, SmallLeaf, Sum,
                     build_ef, defining_matrix, find_1sums, g_bound,
                     glue_elements, make_sum, node_matroid, parse_tree_file,
                     sum_independent_sets, validate, write_tree)
from .verify import (CertificationReport, IndependenceFamily, VerifyError,
                     certify_equality, greedy_cross_check, rectangle_cover,
                     validity_of_exchange_claim)
from .lpfile import write_lp

__version__ = "0.1.0"
