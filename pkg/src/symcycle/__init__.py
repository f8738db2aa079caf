"""Exact combinatorics of hypercube vertices and the symmetric 2t-cycle."""

from .errors import (
    DimensionError,
    DomainError,
    InvalidDecompositionError,
    ResourceLimitError,
    SymCycleError,
)
from .hypercube import (
    IntervalRun,
    QTerm,
    Tope,
    cycle_vertex,
    decompose,
    interval_runs,
    negative_part,
    negative_tope,
    positive_tope,
    predicted_q_size,
    q_set,
    q_size,
    recompose,
    rho,
    separation_set,
    tope_from_negative_set,
)
from .identities import (
    BoundaryType,
    norm_of_disjoint_union,
    sigma,
    x_closed_form,
    x_of_disjoint_union,
    x_superset_delta,
)
from .smirnov import (
    ALPHA,
    BETA,
    THETA,
    CompositionTriple,
    Letter,
    LetterCounts,
    composition_count,
    decode_pair,
    encode_pair,
    gf_coefficient,
    smirnov_count_closed,
    smirnov_count_dp,
    smirnov_enumerate,
)
from .statistics import (
    BoundaryCase,
    PairQuery,
    boundary_case_of,
    brute_force_pairs,
    brute_force_topes,
    count_pairs_case,
    count_pairs_case_structural,
    count_pairs_total,
    count_topes_with_negpart_and_qsize,
    count_topes_with_qsize,
)

__version__ = "0.1.0"
