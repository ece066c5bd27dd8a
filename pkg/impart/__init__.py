# Induced multipartite graph parameters: exact solvers, reductions and CLI
