"""cliqueorder: exact maximum-clique solving with learned vertex orderings.

The package combines an exact branch-and-bound solver (greedy-coloring
bounds, dynamic near-root re-sorting, pluggable initial orderings), an
unsupervised per-instance optimizer that learns a clique-oriented ordering
by minimizing a Chebyshev-weighted permutation objective through a
Gumbel-Sinkhorn relaxation, brute-force oracles including an exhaustive
prefix-forcing verifier, a benchmark harness, a CLI, and a FastAPI service.
"""

from .assignment import AssignmentResult, hungarian
from .bench import CSV_HEADER, BenchRow, rows_to_csv, run_bench
from .chebyshev import (
    chebyshev,
    chebyshev_complement,
    cost_lemma,
    cost_stable,
    default_epsilon,
    default_sinkhorn_iters,
)
from .engine import (
    OptimizerConfig,
    clique_loss,
    gumbel_sample,
    init_logits,
    loss_gradient,
    optimize_ordering,
    sinkhorn,
)
from .graph import (
    Graph,
    VertexFeatures,
    degree_order,
    er_generate,
    features,
    from_dimacs,
    invert_perm,
    is_permutation,
    nonadjacency_matrix,
    perm_matrix,
    perm_to_sequence,
    random_order,
    relabel,
    sequence_to_perm,
    to_dimacs,
    zero_pad,
)
from .oracle import (
    LemmaReport,
    brute_force_assignment,
    brute_force_max_clique,
    brute_force_perm_min,
    enumerate_labeled_graphs,
    lemma_verify,
    perm_loss,
)
from .solver import (
    CliqueResult,
    ColorClasses,
    SolveReport,
    color_sort,
    initial_coloring,
    max_clique_dyn,
    solve_with_ordering,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # graph
    "Graph",
    "VertexFeatures",
    "er_generate",
    "from_dimacs",
    "to_dimacs",
    "relabel",
    "nonadjacency_matrix",
    "zero_pad",
    "degree_order",
    "random_order",
    "features",
    "perm_to_sequence",
    "sequence_to_perm",
    "invert_perm",
    "perm_matrix",
    "is_permutation",
    # chebyshev
    "chebyshev",
    "chebyshev_complement",
    "cost_lemma",
    "cost_stable",
    "default_epsilon",
    "default_sinkhorn_iters",
    # engine
    "OptimizerConfig",
    "init_logits",
    "gumbel_sample",
    "sinkhorn",
    "clique_loss",
    "loss_gradient",
    "optimize_ordering",
    # assignment
    "AssignmentResult",
    "hungarian",
    # solver
    "ColorClasses",
    "CliqueResult",
    "SolveReport",
    "initial_coloring",
    "color_sort",
    "max_clique_dyn",
    "solve_with_ordering",
    # oracle
    "LemmaReport",
    "brute_force_max_clique",
    "brute_force_perm_min",
    "brute_force_assignment",
    "perm_loss",
    "lemma_verify",
    "enumerate_labeled_graphs",
    # bench
    "CSV_HEADER",
    "BenchRow",
    "run_bench",
    "rows_to_csv",
]
