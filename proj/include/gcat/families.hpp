#pragma once

#include <cstddef>
#include <vector>

#include "gcat/graph.hpp"

namespace gcat {

MultiGraph point_graph();
/// Path with n edges.
MultiGraph path_graph(std::size_t n);
/// n-cycle; n = 1 is the one-loop graph and n = 2 a double edge.
MultiGraph cycle_graph(std::size_t n);
/// Star with n edges, center 0.
MultiGraph star_graph(std::size_t n);
/// One vertex with g loops.
MultiGraph rose_graph(std::size_t g);
/// Two vertices joined by three edges.
MultiGraph melon_graph();
/// G_g(a_1, ..., a_{g+1}): two vertices joined by g+1 paths of lengths a_i.
MultiGraph theta_graph(const std::vector<std::size_t>& lengths);
MultiGraph complete_graph(std::size_t n);
MultiGraph complete_bipartite_graph(std::size_t m, std::size_t n);
/// Every tree with exactly k edges up to isomorphism, canonical forms.
std::vector<MultiGraph> trees_with_edges(std::size_t k);

}  // namespace gcat
