"""Quantum tori of punctured bordered surfaces at roots of unity.

Builds the exchange, H and K matrices of a triangulated surface, the
antisymmetric matrix P of the A-torus and its reduced analog, and computes
the center and the rank over the center at a root of unity.
"""

from .amatrix import AMatrices, p_matrices, reduced_blocks, structural, verify_block_lemmas
from .center import (CenterReport, RootParams, center_lattice, closed_form_rank, gamma,
                     lambda_partial, rank, reduced_torus_data, root_params, torus_data,
                     x_family, z_prediction)
from .cohomology import cocycle_subgroups, cw_complex, j_map
from .quiver import h_matrix, q_matrix, small_vertices
from .surface import (Surface, Triangulation, build_mu_triangulation, build_surface, builtin,
                      load_triangulation)
from .zlattice import Lattice, kernel_mod, quotient_order, skew_normal_form, snf

__version__ = "0.1.0"
