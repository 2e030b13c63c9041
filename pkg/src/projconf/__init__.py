"""Exact classification of ordered five-point configurations in P^3."""
from .classifier import OrbitClass, classify, orbit_dimension, orbit_from_tag, orbit_representative, same_orbit
from .closure import (
    ClosureDescription,
    face_degeneration,
    fibre_closure,
    fibre_closure_verdict,
    ideal_generators,
    ideal_vanishes,
    orbit_closure_description,
)
from .enumeration import build_poset, enumerate_image, export_dot, prec, preceq, verify_realizability
from .errors import ProjconfError
from .families import ProjParam
from .io import parse_config
from .linalg import ProjConfig, coordinates_in_span, minor, rank
from .rankmatrix import RankMatrix, compute_rank_matrix, faces, leq, rank_type, rank_type_label, reduction, rho
from .splitting import (
    Splitting,
    compute_splitting,
    image_membership,
    pprime_membership,
    representative,
    rho_inverse,
)

__version__ = "0.1.0"
