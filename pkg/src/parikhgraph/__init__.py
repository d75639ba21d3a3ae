"""Parikh word-representable graphs: construction, recognition and analysis."""

from .errors import CapacityError, DomainError, NotRepresentableError, ParikhError
from .words import Word, ascending, core, core_positions, position_of, project, subword_count, support, word
from .graphs import (
    LabeledBipartiteGraph,
    are_isomorphic,
    bipartite,
    canonical_key,
    diameter,
    has_hamiltonian_cycle,
    is_connected,
    path_graph,
)
from .parikh import (
    ParikhGraph,
    ParikhVertex,
    StrongOrdering,
    binary_permutation,
    canonical_strong_ordering,
    is_strong_ordering,
    parikh_graph,
)
from .recognition import (
    IntervalDecomposition,
    SynthesisResult,
    compose_components,
    find_strong_ordering,
    interval_decomposition,
    recognize_binary,
    recognize_ternary,
    synthesize_any,
    synthesize_word,
)
from .analysis import (
    DiameterReport,
    binary_hamiltonian,
    count_slender_classes,
    diameter_report,
    hamiltonian_via_strong_ordering,
    longest_path_word,
    slender_word_for_partition,
    ternary_hamiltonian,
)

__version__ = "0.1.0"
