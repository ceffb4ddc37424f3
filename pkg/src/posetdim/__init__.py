"""Order-dimension toolkit for finite posets.

Core data model (Poset, BipartitePoset), exact and brute-force dimension
solvers, standard-example detection, the peeling pipeline for bounding
the dimension of standard-example-free orders, and experiment harnesses.
"""

from . import errors
from .core import (
    BipartitePoset,
    Embedding,
    Poset,
    bipartition,
    derive_seed,
    embedding_valid,
    find_standard_example,
    kimble_split,
    load_poset,
    poset_from_relations,
    poset_from_text,
    poset_to_text,
    random_bipartite,
    random_poset,
    random_skfree_bipartite,
    save_poset,
    standard_example,
    standard_example_bipartite,
)
from .dimension import (
    CriticalPair,
    DimensionResult,
    LinearExtension,
    Realizer,
    all_linear_extensions,
    brute_force_dimension,
    check_extension,
    critical_pairs,
    exact_dimension,
    greedy_reversing_extensions,
    is_realizer,
    is_reversible,
    realizer_from_json,
    realizer_to_json,
    reverses,
)
from .skfree import (
    BinaryMatrix,
    GeneralBoundResult,
    PeelCertificate,
    PeelStep,
    PeelStepRecord,
    UBColoring,
    acquire_event_matrix,
    build_reversing_extensions,
    certificate_from_json,
    certificate_to_json,
    event_E_holds,
    event_probability_bound,
    extension_from_sigma,
    find_monochromatic,
    general_upper_bound,
    mates,
    peel_realizer,
    peel_step,
    sigma_permutations,
    step_extension_cap,
    subset_color,
    ub_coloring,
    valid_colors,
)
from .experiments import (
    GrowthRecord,
    growth_records_to_csv,
    run_growth_experiment,
    run_hiraguchi_scan,
    run_prob_lemma_trials,
    run_split_sandwich_scan,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryMatrix",
    "BipartitePoset",
    "CriticalPair",
    "DimensionResult",
    "Embedding",
    "GeneralBoundResult",
    "GrowthRecord",
    "LinearExtension",
    "PeelCertificate",
    "PeelStep",
    "PeelStepRecord",
    "Poset",
    "Realizer",
    "UBColoring",
    "acquire_event_matrix",
    "all_linear_extensions",
    "bipartition",
    "brute_force_dimension",
    "build_reversing_extensions",
    "certificate_from_json",
    "certificate_to_json",
    "check_extension",
    "critical_pairs",
    "derive_seed",
    "embedding_valid",
    "errors",
    "event_E_holds",
    "event_probability_bound",
    "exact_dimension",
    "extension_from_sigma",
    "find_monochromatic",
    "find_standard_example",
    "general_upper_bound",
    "greedy_reversing_extensions",
    "growth_records_to_csv",
    "is_realizer",
    "is_reversible",
    "kimble_split",
    "load_poset",
    "mates",
    "peel_realizer",
    "peel_step",
    "poset_from_relations",
    "poset_from_text",
    "poset_to_text",
    "random_bipartite",
    "random_poset",
    "random_skfree_bipartite",
    "realizer_from_json",
    "realizer_to_json",
    "reverses",
    "run_growth_experiment",
    "run_hiraguchi_scan",
    "run_prob_lemma_trials",
    "run_split_sandwich_scan",
    "save_poset",
    "sigma_permutations",
    "standard_example",
    "standard_example_bipartite",
    "step_extension_cap",
    "subset_color",
    "ub_coloring",
    "valid_colors",
]
