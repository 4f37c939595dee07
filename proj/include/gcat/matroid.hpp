#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/polynomial.hpp"

namespace gcat {

/// Closed edge set of the graphic matroid. Edge sets are bitmasks, so graphs
/// are limited to 64 edges.
struct Flat {
  std::uint64_t edges = 0;
  /// Block id of every vertex; blocks are the components of (V, edges),
  /// numbered by least vertex.
  std::vector<std::size_t> block;
  std::size_t num_blocks = 0;
  std::size_t rank = 0;
  std::size_t corank = 0;

  bool contains(std::size_t e) const { return (edges >> e) & 1u; }
  std::vector<std::size_t> edge_list() const;
};

/// Smallest flat containing the edge mask.
Flat closure(const MultiGraph& g, std::uint64_t edges);

/// All flats, sorted by (rank, mask). Throws std::invalid_argument for a
/// disconnected graph or more than 64 edges.
std::vector<Flat> flats(const MultiGraph& g);

/// Characteristic polynomial of the graphic matroid; zero if G has a loop.
IntPolynomial characteristic_polynomial(const MultiGraph& g);

/// dim OS^i, with loops acting as zero generators.
Integer os_dimension(const MultiGraph& g, std::size_t i);

/// Kazhdan–Lusztig polynomial of the graphic matroid. Throws
/// std::invalid_argument if G has a loop or is disconnected. Results are
/// cached by the canonical form of the simplification; safe to call from
/// several threads.
IntPolynomial kl_polynomial(const MultiGraph& g);

/// #corank-1 flats - #rank-1 flats. Throws std::invalid_argument for loops
/// or rank < 3.
Integer first_kl_coefficient(const MultiGraph& g);

/// Simple graph with one edge per parallel class and no loops.
MultiGraph simplify(const MultiGraph& g);

}  // namespace gcat
