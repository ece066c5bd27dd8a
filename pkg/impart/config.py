"""
Configuration constants for induced multipartite graph parameter computations.

Ceilings bound the exponential routines so that a call either finishes at desk
scale or fails fast with CeilingExceededError.
"""

import os

# Computation ceilings (vertex or edge counts above these raise CeilingExceededError)
CHROMATIC_MAX_VERTICES = 30        # inclusion-exclusion table has 2^n int32 entries (4 GiB at 30)
INDEPENDENCE_MAX_VERTICES = 40     # branch and bound on stable sets
CHROMATIC_INDEX_MAX_EDGES = 40     # backtracking edge colouring with Δ colours
TREEWIDTH_MAX_VERTICES = 20        # elimination-order subset DP
PATHWIDTH_MAX_VERTICES = 20        # vertex-separation subset DP
PK_MAX_VERTICES = 16               # p(G, k) enumerates all 2^n induced subgraphs
ORACLE_MAX_CANDIDATES = 2_000_000  # deletion sets tried by the Large problem oracle

# Experiment limits
P1_EXHAUSTIVE_MAX_ORDER = 12       # check_P1 enumerates every subset of K_{n|k} up to this order
LEMMA_WIDTH_MAX_ORDER = 12         # tw/pw cells of the formula table are computed up to kn = 12
DEFAULT_P1_TRIALS = 200
DEFAULT_SEED = 0

# Tripartite Maximum Degree 4 reduction: k = 3, m = 0, and ℓ bounds p(G) whenever Δ(G) ≤ 4
TRIPARTITE_REDUCTION_K = 3
TRIPARTITE_REDUCTION_M = 0
TRIPARTITE_REDUCTION_MAX_DEGREE = 4
TRIPARTITE_REDUCTION_ELL = {
    "min_degree": 4,
    "max_degree": 4,
    "vertex_connectivity": 4,
    "edge_connectivity": 4,
    "chromatic_index": 5,  # Vizing: χ′ ≤ Δ + 1
}

# Run report
REPORT_SCHEMA_VERSION = 1

# CLI exit codes
EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_CEILING = 4

# Internal parallelism (corpus verification only)
THREADS_ENV_VAR = "IMPART_THREADS"


def worker_count() -> int:
    """Return the thread cap from IMPART_THREADS, defaulting to 1 when unset or invalid."""
    raw = os.environ.get(THREADS_ENV_VAR, "")
    try:
        value = int(raw)
    except ValueError:
        return 1
    return max(1, value)
