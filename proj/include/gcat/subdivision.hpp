#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

/// Strictly increasing map [m] -> [n], stored as f(1), ..., f(m) with values in 1..n.
using OrderedInjection = std::vector<std::size_t>;

bool is_ordered_injection(const OrderedInjection& f, std::size_t n);
/// f ∘ g for g: [k] -> [m] and f: [m] -> [n].
OrderedInjection compose_injections(const OrderedInjection& f, const OrderedInjection& g);
OrderedInjection identity_injection(std::size_t m);
/// All strictly increasing maps [m] -> [n] in lexicographic order.
std::vector<OrderedInjection> ordered_injections(std::size_t m, std::size_t n);

/// Edge of the base graph with a direction: the path v^0 ... v^m runs from
/// the tail to the head.
struct DirectedEdge {
  std::size_t edge = 0;
  bool reversed = false;
};

/// G(e, m): each site edge replaced in place by a path of m_i edges.
struct SubdividedGraph {
  std::shared_ptr<const MultiGraph> graph;
  std::vector<DirectedEdge> sites;
  std::vector<std::size_t> lengths;
  /// path_vertices[i][t] = v_i^t for t = 0..m_i.
  std::vector<std::vector<std::size_t>> path_vertices;
  /// path_edges[i][t-1] joins v_i^{t-1} and v_i^t.
  std::vector<std::vector<std::size_t>> path_edges;
  /// Image of each base vertex.
  std::vector<std::size_t> base_vertex;
  /// Image of each base edge that is not a site, npos for sites.
  std::vector<std::size_t> base_edge;
};

/// Throws std::invalid_argument on repeated sites, length mismatch, or a
/// loop with m_i = 0.
SubdividedGraph subdivide(const MultiGraph& g, const std::vector<DirectedEdge>& sites,
                          const std::vector<std::size_t>& lengths);

/// Φ_{G,e}(f): G(e, n) -> G(e, m) for f_i: [m_i] -> [n_i]. Path edge t at
/// site i survives iff t is in the image of f_i.
Contraction subdivision_map(const SubdividedGraph& source, const SubdividedGraph& target,
                            const std::vector<OrderedInjection>& f);

/// G(v, m): m_i new leaves attached at v_i.
struct SproutedGraph {
  std::shared_ptr<const MultiGraph> graph;
  std::vector<std::size_t> sites;
  std::vector<std::size_t> lengths;
  /// sprout_edges[i][t-1], sprout_leaves[i][t-1] for t = 1..m_i.
  std::vector<std::vector<std::size_t>> sprout_edges;
  std::vector<std::vector<std::size_t>> sprout_leaves;
};

/// Throws std::invalid_argument on repeated vertices or length mismatch.
SproutedGraph sprout(const MultiGraph& g, const std::vector<std::size_t>& vertices,
                     const std::vector<std::size_t>& lengths);

/// Ψ_{G,v}(f): G(v, n) -> G(v, m). Sprouts outside the image of f_i collapse onto v_i.
Contraction sprout_map(const SproutedGraph& source, const SproutedGraph& target,
                       const std::vector<OrderedInjection>& f);

}  // namespace gcat
