"""Quasi-chain bipartite graphs: recognition, enhanced words, labels and solvers."""

from .encoding import (
    Decomposition,
    Encoding,
    RewriteError,
    decompose,
    decomposition_from_word,
    encode_enhanced,
    free_top_edge,
    peel_vertex,
)
from .generators import (
    GeneratorSpec,
    SamplingError,
    antichain_q,
    double_chain,
    generate,
    random_quasi_chain,
    universal_chain,
)
from .graph import (
    A,
    B,
    BipartiteGraph,
    VertexRef,
    bipartite_complement,
    find_embedding,
    induced_subgraph,
    is_chain_graph,
    symmetric_difference,
)
from .implicit import (
    ContiguityLayout,
    VertexLabel,
    adjacent_from_labels,
    assign_labels,
    contiguity_layout,
)
from .letters import LetterDecoder, SimpleGraph, decode_letter_graph, lettericity_bruteforce
from .optimize import (
    BicliqueSolution,
    IndependentCover,
    balanced_biclique,
    dominating_subset_in,
    independent_cover,
    independent_dominating_set,
    max_edge_biclique,
    near_complete_balanced,
    near_complete_max_edge,
)
from .oracles import OracleBudgetError
from .permutations import (
    NotQuasiPermutationGraphError,
    pattern_contains,
    qp_graph,
    qp_graph_star,
    recover_permutation,
    star_gadget,
)
from .recognition import (
    NotQuasiChainError,
    QuasiChainCertificate,
    Unbalanced2P3,
    extract_witness,
    is_quasi_chain,
)
from .words import EnhancedWord, decode_enhanced, word_complement, word_reflect

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "A",
    "adjacent_from_labels",
    "antichain_q",
    "assign_labels",
    "B",
    "balanced_biclique",
    "BicliqueSolution",
    "bipartite_complement",
    "BipartiteGraph",
    "contiguity_layout",
    "ContiguityLayout",
    "decode_enhanced",
    "decode_letter_graph",
    "decompose",
    "Decomposition",
    "decomposition_from_word",
    "dominating_subset_in",
    "double_chain",
    "encode_enhanced",
    "Encoding",
    "EnhancedWord",
    "extract_witness",
    "find_embedding",
    "free_top_edge",
    "generate",
    "GeneratorSpec",
    "independent_cover",
    "independent_dominating_set",
    "IndependentCover",
    "induced_subgraph",
    "is_chain_graph",
    "is_quasi_chain",
    "LetterDecoder",
    "lettericity_bruteforce",
    "max_edge_biclique",
    "near_complete_balanced",
    "near_complete_max_edge",
    "NotQuasiChainError",
    "NotQuasiPermutationGraphError",
    "OracleBudgetError",
    "pattern_contains",
    "peel_vertex",
    "qp_graph",
    "qp_graph_star",
    "QuasiChainCertificate",
    "random_quasi_chain",
    "recover_permutation",
    "RewriteError",
    "SamplingError",
    "SimpleGraph",
    "star_gadget",
    "symmetric_difference",
    "Unbalanced2P3",
    "universal_chain",
    "VertexLabel",
    "VertexRef",
    "word_complement",
    "word_reflect",
]
