"""matchforce: exact combinatorics of forcing sets of perfect matchings.

Solvers for forcing numbers and spectra, recognizers and generators for
the graph families where those numbers are extremal, matching 2-switch
dynamics, and a small-graph verification harness, all on an immutable
bitmask graph substrate.
"""

from ._core import COMPILED_AVAILABLE, kernel_backend
from .errors import (
    CycleOverflowError,
    MatchforceError,
    MatchingOverflowError,
    NoPerfectMatchingError,
    ParseError,
    PreconditionError,
)
from .graph import (
    AlternatingCycle,
    Edge,
    Graph,
    PerfectMatching,
    alternating_four_cycles,
    apply_cycle,
    complement,
    components_masks,
    enumerate_alternating_cycles,
    enumerate_perfect_matchings,
    find_alternating_cycle,
    has_perfect_matching,
    induced_subgraph,
    is_alternating_cycle,
    is_bipartite,
    is_connected,
    odd_component_count,
    vertex_connectivity,
)
from .graphio import (
    load_graph,
    parse_edge_list,
    parse_graph6,
    read_graph6_collection,
    serialize_graph,
    to_edge_list,
    to_graph6,
)
from .forcing import (
    CyclePacking,
    ForcingCertificate,
    SpectrumReport,
    cycle_packing,
    cycle_packing_number,
    forcing_number,
    forcing_profile,
    is_forcing_set,
)
from .structure import (
    ClassificationResult,
    ClassTag,
    classify_min_forcing,
    has_fixed_double_bond,
    has_max_forcing_n_minus_1,
    is_complete_multipartite,
    is_knn_plus,
    is_minimal_max_forcing,
    matching_pairs_exact_four_cycles,
    max_independent_set_size,
    pairwise_alternating_condition,
)
from .extend import (
    DeficiencyWitness,
    NonTwoExtendableStructure,
    deficiency_witness,
    is_bicritical,
    is_brick,
    is_factor_critical,
    is_l_extendable,
    non_2_extendable_structure,
)
from .generate import (
    Connector,
    LabeledGraph,
    PairSignature,
    enumerate_labeled_graphs,
    gen_complete_multipartite,
    gen_h_k,
    gen_knn_plus,
    gen_minimal_from_signature,
    gen_non_2_extendable,
    gen_random,
    splitmix64,
)
from .switch import (
    ContinuityReport,
    SwitchGraph,
    SwitchPath,
    alternating_4_cycles,
    build_switch_graph,
    switch_path,
    two_switch,
    verify_spectrum_continuity,
    verify_switch_bound,
)
from .harness import (
    BlockResult,
    THEOREM_IDS,
    VerificationReport,
    builtin_corpus,
    family_corpus,
    random_graph6,
    verify_graphs,
)

__version__ = "0.1.0"
