#include "gcat/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gcat {

MultiGraph::MultiGraph(std::size_t vertices) {
  for (std::size_t v = 0; v < vertices; ++v) add_vertex();
}

MultiGraph::MultiGraph(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : MultiGraph(vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

std::size_t MultiGraph::add_vertex(std::string name) {
  std::size_t v = vertex_names_.size();
  vertex_names_.push_back(name.empty() ? "v" + std::to_string(v) : std::move(name));
  return v;
}

std::size_t MultiGraph::add_edge(std::size_t u, std::size_t v, std::string name) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw std::invalid_argument("add_edge: endpoint out of range");
  }
  std::size_t e = edges_.size();
  edges_.push_back({u, v});
  edge_names_.push_back(name.empty() ? "e" + std::to_string(e) : std::move(name));
  return e;
}

std::size_t MultiGraph::other_end(std::size_t e, std::size_t v) const {
  const auto& ends = edges_.at(e);
  if (ends.u == v) return ends.v;
  if (ends.v == v) return ends.u;
  throw std::invalid_argument("other_end: vertex is not an endpoint");
}

std::vector<HalfEdge> MultiGraph::half_edges_at(std::size_t v) const {
  std::vector<HalfEdge> hs;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u == v) hs.push_back(2 * e);
    if (edges_[e].v == v) hs.push_back(2 * e + 1);
  }
  return hs;
}

std::size_t MultiGraph::valence(std::size_t v) const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += (e.u == v) + (e.v == v);
  return n;
}

std::vector<std::size_t> MultiGraph::valences() const {
  std::vector<std::size_t> val(num_vertices(), 0);
  for (const auto& e : edges_) {
    ++val[e.u];
    ++val[e.v];
  }
  return val;
}

HalfEdge MultiGraph::base_half_edge(std::size_t v) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u == v) return 2 * e;
    if (edges_[e].v == v) return 2 * e + 1;
  }
  throw std::invalid_argument("base_half_edge: isolated vertex");
}

std::vector<std::size_t> MultiGraph::components() const {
  std::vector<std::size_t> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> id(num_vertices()), label(num_vertices(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    auto r = find(v);
    if (label[r] == SIZE_MAX) label[r] = next++;
    id[v] = label[r];
  }
  return id;
}

std::size_t MultiGraph::num_components() const {
  auto c = components();
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool MultiGraph::is_connected() const { return num_components() == 1; }

bool MultiGraph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const EdgeEnds& e) { return e.u == e.v; });
}

std::vector<bool> MultiGraph::bridges() const {
  // Lowpoint DFS over edges, so parallel edges are handled by skipping only
  // the tree edge itself.
  std::size_t n = num_vertices();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].u == edges_[e].v) continue;
    adj[edges_[e].u].push_back({edges_[e].v, e});
    adj[edges_[e].v].push_back({edges_[e].u, e});
  }
  std::vector<bool> bridge(edges_.size(), false);
  std::vector<std::size_t> disc(n, SIZE_MAX), low(n, 0);
  std::size_t time = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t v, std::size_t via) {
    disc[v] = low[v] = time++;
    for (const auto& [w, e] : adj[v]) {
      if (e == via) continue;
      if (disc[w] == SIZE_MAX) {
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > disc[v]) bridge[e] = true;
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (disc[v] == SIZE_MAX) dfs(v, SIZE_MAX);
  }
  return bridge;
}

long genus(const MultiGraph& g) {
  if (g.empty()) throw std::invalid_argument("genus: empty graph");
  if (!g.is_connected()) throw std::invalid_argument("genus: graph is not connected");
  return static_cast<long>(g.num_edges()) - static_cast<long>(g.num_vertices()) + 1;
}

bool is_reduced(const MultiGraph& g) {
  if (g.empty() || !g.is_connected()) return false;
  if (g.num_vertices() == 1 && g.num_edges() == 1) return true;
  for (auto v : g.valences()) {
    if (v == 2) return false;
  }
  auto b = g.bridges();
  return std::find(b.begin(), b.end(), true) == b.end();
}

bool is_forest(const MultiGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto e : edges) {
    auto a = find(g.ends(e).u), b = find(g.ends(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::string describe(const MultiGraph& g) {
  std::ostringstream os;
  os << g.num_vertices() << " vertices [";
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (e) os << ' ';
    os << g.ends(e).u << '-' << g.ends(e).v;
  }
  os << ']';
  return os.str();
}

}  // namespace gcat
