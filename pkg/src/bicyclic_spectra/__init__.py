"""Degree-weighted adjacency spectra of bicyclic graphs.

Construct the weighted adjacency matrix A_f(G) for a catalogue of symmetric
weight functions, compute spectral radii, replay the spectral-monotone graph
transforms, enumerate bicyclic isomorphism classes at small order, and verify
the extremal structure results through exact quotient polynomials and
verification campaigns (see the `verify` module and the CLI).
"""

from .graphs import (
    BaseGraph,
    Graph,
    GraphError,
    NamedFamily,
    attach_pendants,
    base_graph,
    from_edge_text,
    graph6_decode,
    graph6_encode,
    graph_g1,
    graph_g2,
    graph_g3,
    graph_g4,
    graph_h_n3_2,
    make_infinity,
    make_named,
    make_theta,
    to_edge_text,
)
from .weights import (
    PStarReport,
    WeightFunction,
    WeightSpecError,
    check_pstar,
    evaluate,
    evaluate_exact,
    parse_weight,
    rational_pstar_functions,
)
from .spectral import (
    SpectralError,
    SpectralResult,
    WeightedMatrix,
    build_matrix,
    build_matrix_exact,
    full_spectrum,
    matrix_rho,
    rho_f,
    spectral_radius,
)
from .transforms import TransformError, TransformOutcome, kelmans, pendant_shift
from .enumeration import (
    EnumerationError,
    EnumerationReport,
    are_isomorphic,
    canonical_form,
    enumerate_bicyclic,
    enumerate_with_max_degree,
    graph_from_certificate,
    targeted_max_degree_family,
)
from .polynomials import (
    Polynomial,
    PolynomialError,
    char_poly,
    count_real_roots,
    descartes_bounds,
    eval_at_sqrt,
    max_real_root,
    real_roots,
    sign_at_sqrt,
)
from .quotient import (
    QuotientMatrix,
    SignCondition,
    equitable_refine,
    evaluate_sign_ledger,
    family_quotient,
    named_polynomial,
    partition_g1,
    partition_g2,
    partition_g3,
    partition_g4,
    phi1_sign_holds,
    quotient_matrix,
)
from .verify import (
    CaseRecord,
    VerificationReport,
    run_table,
    verify_extremal,
    verify_kelmans,
    verify_theorem41,
)

__version__ = "0.1.0"
