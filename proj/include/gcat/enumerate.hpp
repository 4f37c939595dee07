#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

/// All forests of exactly k edges, as sorted edge lists in lexicographic order.
std::vector<std::vector<std::size_t>> forests_of_size(const MultiGraph& g, std::size_t k);

/// Mor(G, G2) in the contraction category. Throws std::invalid_argument when
/// the genera differ.
std::vector<Contraction> enumerate_contractions(std::shared_ptr<const MultiGraph> g,
                                                std::shared_ptr<const MultiGraph> g2);
std::vector<Contraction> enumerate_contractions(const MultiGraph& g, const MultiGraph& g2);
/// |Mor(G, G2)| without materializing morphisms.
std::uint64_t count_contractions(const MultiGraph& g, const MultiGraph& g2);

/// One representative per isomorphism class of reduced genus-g graphs, in
/// canonical form, sorted by (vertex count, canonical code).
std::vector<MultiGraph> enumerate_reduced_graphs(int g);

}  // namespace gcat
