"""Exact positive-support spectra of discrete-time quantum walks on regular graphs.

The package builds the walk transition matrix on a graph's arc space, takes
positive supports of its powers with sign-exact integer arithmetic, evaluates
their closed-form spectra, and compares exact characteristic polynomials as
graph-isomorphism invariants.
"""

from .arcspace import (
    ArcSpace,
    build_arc_space,
    ins_matrix,
    outs_matrix,
    reversal_matrix,
    scaled_reflection_q,
    scaled_transition_matrix,
)
from .errors import (
    DivisibilityError,
    Graph6Error,
    HypothesisError,
    ParameterError,
    ValencyError,
)
from .generators import (
    circulant_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    generate,
    hypercube_graph,
    paley_graph,
    parse_generator_spec,
    petersen_graph,
    rook_graph,
    shrikhande_graph,
)
from .graph6 import (
    parse_graph6,
    parse_graph6_file,
    read_graph6_file,
    write_graph6,
    write_graph6_file,
)
from .graphs import (
    Graph,
    SrgParams,
    adjacency_matrix,
    degrees,
    is_connected,
    is_regular,
    relabel,
    srg_params,
)
from .intmat import (
    bareiss_determinant,
    berkowitz_charpoly,
    char_poly,
    format_matrix,
    int_eye,
    int_matrix,
    int_zeros,
    mat_equal,
    mat_mul,
    mat_pow,
    mat_trace,
    modular_charpoly,
    positive_support,
)
from .invariants import (
    BatchResult,
    CompareReport,
    InvariantProfile,
    batch_compare,
    batch_to_csv,
    batch_to_json,
    compare,
    profile,
)
from .jacobi import symmetric_eigenvalues
from .polynomials import (
    CharPoly,
    poly_divide_exact,
    poly_equal,
    poly_gcd,
    poly_mul,
    poly_pow,
    poly_roots,
    squarefree_decomposition,
)
from .supports import (
    ClosedFormSpectrum,
    QuadraticPair,
    RationalEigenvalue,
    SupportSet,
    adjacency_charpoly,
    build_support_set,
    char_poly_identity_check,
    charpoly_root_multiset,
    closed_form_charpoly_su,
    closed_form_charpoly_su2,
    closed_form_spectrum_su,
    closed_form_spectrum_su2,
    greedy_matching_distance,
    identity_suite,
    ihara_style_charpoly,
    max_matching_distance,
    su2_via_identity,
    support_u,
    support_u_power,
)

__version__ = "0.1.0"
