# Graph formats and instance generators
from .formats import (
    parse_edge_list,
    emit_edge_list,
    parse_graph6,
    emit_graph6,
    read_graph6_corpus,
    read_graph,
    write_graph,
)
from .generators import gen, labeled_graphs, random_graphs
