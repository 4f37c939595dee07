#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace gcat {

/// Half-edge 2k is the end of edge k at its first endpoint, 2k+1 the end at
/// its second endpoint.
using HalfEdge = std::size_t;

inline std::size_t edge_of(HalfEdge h) { return h / 2; }
inline int side_of(HalfEdge h) { return static_cast<int>(h % 2); }

struct EdgeEnds {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const EdgeEnds&, const EdgeEnds&) = default;
};

/// Finite multigraph with loops and parallel edges. Vertices and edges are
/// indexed densely; names are kept for I/O and do not take part in equality.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t vertices);
  MultiGraph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t add_vertex(std::string name = {});
  std::size_t add_edge(std::size_t u, std::size_t v, std::string name = {});

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_half_edges() const { return 2 * edges_.size(); }

  const EdgeEnds& ends(std::size_t e) const { return edges_.at(e); }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  bool is_loop(std::size_t e) const { return edges_[e].u == edges_[e].v; }
  std::size_t other_end(std::size_t e, std::size_t v) const;

  std::size_t vertex_of(HalfEdge h) const { return side_of(h) == 0 ? edges_[h / 2].u : edges_[h / 2].v; }
  /// Half-edges at v in increasing order.
  std::vector<HalfEdge> half_edges_at(std::size_t v) const;
  std::size_t valence(std::size_t v) const;
  std::vector<std::size_t> valences() const;
  /// Least half-edge at v. Requires valence(v) >= 1.
  HalfEdge base_half_edge(std::size_t v) const;

  const std::string& vertex_name(std::size_t v) const { return vertex_names_.at(v); }
  const std::string& edge_name(std::size_t e) const { return edge_names_.at(e); }
  void set_vertex_name(std::size_t v, std::string name) { vertex_names_.at(v) = std::move(name); }
  void set_edge_name(std::size_t e, std::string name) { edge_names_.at(e) = std::move(name); }

  bool empty() const { return vertex_names_.empty(); }
  bool is_connected() const;
  /// Component id of each vertex, numbered by least vertex.
  std::vector<std::size_t> components() const;
  std::size_t num_components() const;
  /// bridges()[e] is true iff removing e disconnects its component.
  std::vector<bool> bridges() const;
  bool has_loop() const;

  /// Structural equality: same vertex count and identical edge list.
  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<EdgeEnds> edges_;
};

struct NamedGraph {
  std::string id;
  MultiGraph graph;
};

/// |E| - |V| + 1. Throws std::invalid_argument on empty or disconnected input.
long genus(const MultiGraph& g);

/// Connected, no bridges, no valence-2 vertices; the one-vertex one-loop
/// graph also counts as reduced.
bool is_reduced(const MultiGraph& g);

/// True iff the edges in `edges` span a forest (no loops, no cycles).
bool is_forest(const MultiGraph& g, const std::vector<std::size_t>& edges);

std::string describe(const MultiGraph& g);

}  // namespace gcat
