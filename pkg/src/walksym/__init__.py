"""Exact random-walk symmetry checks for finite simple graphs.

Decides walk-regularity, equality of return probabilities, hitting-time
symmetry, vertex-transitivity and distance-regularity, and computes the
resistance invariants ``R_d`` and ``R_pi`` in exact rational arithmetic.
"""
__version__ = "0.1.0"

from .electrical import (
    commute_identity_check,
    effective_resistance,
    hitting_matrix,
    hitting_time,
    is_reversible,
    r_pi,
    resistance_matrix,
    spectral_gap_estimate,
)
from .enumeration import enumerate_connected
from .exact import int_matrix_power_diags, solve_linear_exact, transition_matrix
from .graph import Graph, is_connected, make_family, parse_graph6, write_graph6
from .scanner import classify, r_pi_spectrum, scan_stream
from .symmetry import automorphism_orbits, canonical_form, is_distance_regular, is_vertex_transitive
from .walks import (
    closed_walk_count_profile,
    expected_return_time_exact,
    first_passage_distribution,
    is_walk_regular,
    satisfies_return_condition,
    simulate_return_frequency,
    walk_traversal_probability,
)
