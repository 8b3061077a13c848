"""Exact optimal zero-error index codelengths for unicast side-information graphs."""

from indexcoding.bounds import gf2_rank, mais, minrank, minrank_witness
from indexcoding.codec import (
    CodeFormatError,
    GeneralCode,
    LinearCode,
    code_from_coloring,
    is_valid_code,
    linear_code_from_matrix,
    parse_code,
    serialize_code,
)
from indexcoding.confusion import (
    ConfusionGraph,
    build_confusion,
    chromatic_number,
    ell_star,
    find_coloring,
    is_k_colorable,
)
from indexcoding.graph import (
    CanonicalKey,
    Category,
    Digraph,
    GraphFormatError,
    canonical_key,
    categorize,
    digraph_from_key,
    enumerate_nonisomorphic,
    parse_digraph,
    serialize_digraph,
    undirected_girth,
)
from indexcoding.verify import (
    SweepSummary,
    VerificationError,
    VerificationRecord,
    analyze,
    check_lemma_mais2,
    check_monotonicity,
    check_structural_conditions,
    find_gap_graphs,
    load_cache,
    maximal_gap_classes,
    read_report,
    run_sweep,
    summarize,
    verify_theorem,
    write_report,
)

__all__ = [
    "CanonicalKey",
    "Category",
    "CodeFormatError",
    "ConfusionGraph",
    "Digraph",
    "GeneralCode",
    "GraphFormatError",
    "LinearCode",
    "SweepSummary",
    "VerificationError",
    "VerificationRecord",
    "analyze",
    "build_confusion",
    "canonical_key",
    "categorize",
    "check_lemma_mais2",
    "check_monotonicity",
    "check_structural_conditions",
    "chromatic_number",
    "code_from_coloring",
    "digraph_from_key",
    "ell_star",
    "enumerate_nonisomorphic",
    "find_coloring",
    "find_gap_graphs",
    "gf2_rank",
    "is_k_colorable",
    "is_valid_code",
    "linear_code_from_matrix",
    "load_cache",
    "mais",
    "maximal_gap_classes",
    "minrank",
    "minrank_witness",
    "parse_code",
    "parse_digraph",
    "read_report",
    "run_sweep",
    "serialize_code",
    "serialize_digraph",
    "summarize",
    "undirected_girth",
    "verify_theorem",
    "write_report",
]

__version__ = "0.1.0"
