# Graph algorithms for induced multipartite graph parameters
from .graph import (
    Graph,
    Partition,
    new_graph,
    induced_subgraph,
    delete_vertices,
    complete_multipartite,
    lex_product_with_complete,
    disjoint_union,
    is_connected,
)
from .partiteness import ColoringWitness, is_bipartite, chromatic_number, is_k_partite
from .decompositions import TreeDecomposition, PathDecomposition
from .parameters import (
    order,
    size,
    min_degree,
    max_degree,
    vertex_connectivity,
    edge_connectivity,
    independence_number,
    chromatic_index,
    treewidth,
    pathwidth,
)
from .imgp import ParameterId, f_k, p_of_G_k, check_P1, check_P2, lemma_table
from .solvers import (
    Answer,
    ProblemInstance,
    ikpsp_decide,
    large_ikpsp_oracle,
    large_fpt_decide,
    verify_answer,
)
from .reductions import mss_to_ikpsp, tmd4_to_large, verify_theorem1_identity
