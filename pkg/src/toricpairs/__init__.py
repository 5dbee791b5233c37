"""Exact toric surface computations and the classification of log smooth
toric del Pezzo pairs (X, D)."""
from .lattice import LatticeVector, det2, is_primitive, segment_lattice_count, solve_unimodular_pair
from .fan import (
    CompleteSmoothFan,
    blowdown,
    blowup,
    canonical_key,
    enumerate_fans,
    from_gamma_sequence,
    gamma_sequence,
    hirzebruch,
    picard_rank,
    projective_plane,
    validate,
)
from .divisor import (
    InvariantDivisor,
    SupportSet,
    canonical_divisor,
    intersect_curve,
    intersection_matrix,
    is_ample,
    linearly_equivalent,
    log_anticanonical,
    principal_divisor,
)
from .polytope import DivisorPolytope, facet_volume, lattice_points, polytope_of
from .classify import (
    ClassificationRecord,
    classify_pairs,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_3,
    verify_volumes,
)

__version__ = "0.1.0"
