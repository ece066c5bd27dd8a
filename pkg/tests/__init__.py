# Test suite for induced multipartite graph parameters
