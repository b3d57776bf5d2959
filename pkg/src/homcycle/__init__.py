"""Minimum-weight Z2-homologous cycles on closed triangulated manifolds.

Chains are bit-masks over simplex indices, so most of the linear algebra is
plain integer XOR.
"""

from .complex import Chain, SimplicialComplex, boundary_chain, build_complex, is_cycle, verify_closed_pseudomanifold
from .covering import CoveringVertex, deck_act, lift_path, materialize_cover
from .errors import *  # noqa: F401,F403
from .homology import (
    HomologyBasis,
    betti_numbers,
    betti_z2,
    h1_basis,
    hn1_basis,
    homology_basis,
    is_homologous,
    is_null_homologous,
    is_simple_cycle,
)
from .index import IndexTable, build_index_function, index_of_chain, single_cycle_index
from .io import parse_chain, parse_chain_blocks, parse_mesh, parse_weights, serialize_chain, serialize_mesh
from .meshes import MeshBundle, bundled_names, generate
from .mincycle import MinCycleResult, WeightFunction, chain_weight, min_cycle_fixed_vertex_index, min_cycle_in_class
from .oracle import brute_min_in_class, coset_min, cup_form_invariants, elimination_min_in_class, form_invariants

__version__ = "0.1.0"
