"""Rough set algebras as core regular double Stone algebras.

Build the principal rough set algebra of a finite approximation space, check
the double Stone algebra laws by exhaustive substitution, and verify the
isomorphisms with the ternary partition lattice and powers of the
three-element chain.
"""
from ._kernels import BACKEND
from .algebra import (FiniteAlgebra, InconsistencyError, LawReport, StructureError,
                      TooLargeError, atoms, center, check_all, check_bounded_distributive_lattice,
                      check_center_boolean, check_center_characterizations,
                      check_core_decomposition, check_dsa, check_dsa_equations,
                      check_dual_pseudocomplement, check_pseudocomplement, check_regular,
                      check_stone_identities, core, crdsa_isomorphic_by_center, dense_set,
                      dual_dense_set, generate_subalgebra, is_crdsa, is_isomorphic_bruteforce)
from .chain import (C3, PointwiseC3, build_c3, build_c3_power, c3_plus, c3_star, parse_vector,
                    render_vector, vec_join, vec_meet, vec_plus, vec_star)
from .morphisms import (AlgebraMap, NotCRDSAError, alpha, alpha_inv, alpha_map, class_collapse,
                        embed_prsa_into_c3u, is_embedding, is_homomorphism, is_isomorphism, phi,
                        phi_map, roundtrip_doubling)
from .space import (ApproximationSpace, RoughPair, SpaceError, SpaceParseError, boundary,
                    build_doubling_space, build_prsa, carrier_size, center_of_prsa, core_witness,
                    crisp_sets, enumerate_carrier, format_space, is_crdsa_space, is_rough_pair,
                    lower_approx, parse_space, rough_pair, upper_approx)
from .ternary import (TP_H, TernaryPartition, TernaryPartitionAlgebra, build_tp_algebra,
                      tp_join, tp_join_all, tp_leq, tp_meet, tp_meet_all, tp_plus, tp_star)

__version__ = "0.1.0"
