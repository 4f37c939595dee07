#include "gcat/families.hpp"

#include <map>
#include <stdexcept>

#include "gcat/isomorphism.hpp"

namespace gcat {

MultiGraph point_graph() { return MultiGraph(1); }

MultiGraph path_graph(std::size_t n) {
  MultiGraph g(n + 1);
  for (std::size_t k = 0; k < n; ++k) g.add_edge(k, k + 1);
  return g;
}

MultiGraph cycle_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cycle_graph: need at least one edge");
  MultiGraph g(n);
  for (std::size_t k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n);
  return g;
}

MultiGraph star_graph(std::size_t n) {
  MultiGraph g(n + 1);
  for (std::size_t k = 1; k <= n; ++k) g.add_edge(0, k);
  return g;
}

MultiGraph rose_graph(std::size_t g) {
  MultiGraph r(1);
  for (std::size_t k = 0; k < g; ++k) r.add_edge(0, 0);
  return r;
}

MultiGraph melon_graph() { return MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

MultiGraph theta_graph(const std::vector<std::size_t>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("theta_graph: need at least one path");
  MultiGraph g(2);
  for (auto a : lengths) {
    if (a == 0) throw std::invalid_argument("theta_graph: path lengths must be positive");
    std::size_t prev = 0;
    for (std::size_t k = 1; k < a; ++k) {
      std::size_t v = g.add_vertex();
      g.add_edge(prev, v);
      prev = v;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

MultiGraph complete_graph(std::size_t n) {
  MultiGraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

MultiGraph complete_bipartite_graph(std::size_t m, std::size_t n) {
  MultiGraph g(m + n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) g.add_edge(i, m + j);
  }
  return g;
}

std::vector<MultiGraph> trees_with_edges(std::size_t k) {
  std::map<CanonicalForm, MultiGraph> level{{canonical_form(point_graph()), point_graph()}};
  for (std::size_t e = 0; e < k; ++e) {
    std::map<CanonicalForm, MultiGraph> next;
    for (const auto& [form, tree] : level) {
      for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
        MultiGraph t = tree;
        t.add_edge(v, t.add_vertex());
        auto c = canonical_graph(t);
        next.emplace(canonical_form(c), c);
      }
    }
    level = std::move(next);
  }
  std::vector<MultiGraph> out;
  for (auto& [form, tree] : level) out.push_back(canonical_graph(tree));
  return out;
}

}  // namespace gcat
