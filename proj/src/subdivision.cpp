#include "gcat/subdivision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcat {

bool is_ordered_injection(const OrderedInjection& f, std::size_t n) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j] < 1 || f[j] > n) return false;
    if (j > 0 && f[j] <= f[j - 1]) return false;
  }
  return true;
}

OrderedInjection compose_injections(const OrderedInjection& f, const OrderedInjection& g) {
  OrderedInjection out;
  for (auto x : g) {
    if (x < 1 || x > f.size()) throw std::invalid_argument("compose_injections: maps are not composable");
    out.push_back(f[x - 1]);
  }
  return out;
}

OrderedInjection identity_injection(std::size_t m) {
  OrderedInjection f(m);
  std::iota(f.begin(), f.end(), 1);
  return f;
}

std::vector<OrderedInjection> ordered_injections(std::size_t m, std::size_t n) {
  std::vector<OrderedInjection> out;
  if (m > n) return out;
  OrderedInjection f = identity_injection(m);
  while (true) {
    out.push_back(f);
    // Next combination in lexicographic order.
    std::size_t j = m;
    while (j > 0 && f[j - 1] == n - m + j) --j;
    if (j == 0) break;
    ++f[j - 1];
    for (std::size_t k = j; k < m; ++k) f[k] = f[k - 1] + 1;
  }
  return out;
}

namespace {

void check_sites(std::size_t count, std::size_t lengths, const char* what) {
  if (count != lengths) throw std::invalid_argument(std::string(what) + ": one length per site is required");
}

void check_injections(const std::vector<OrderedInjection>& f, const std::vector<std::size_t>& from,
                      const std::vector<std::size_t>& to, const char* what) {
  if (f.size() != from.size()) throw std::invalid_argument(std::string(what) + ": one map per site is required");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].size() != from[i] || !is_ordered_injection(f[i], to[i])) {
      throw std::invalid_argument(std::string(what) + ": site " + std::to_string(i) +
                                  " does not carry an ordered injection between the given lengths");
    }
  }
}

}  // namespace

SubdividedGraph subdivide(const MultiGraph& g, const std::vector<DirectedEdge>& sites,
                          const std::vector<std::size_t>& lengths) {
  check_sites(sites.size(), lengths.size(), "subdivide");
  std::vector<std::size_t> site_of(g.num_edges(), SIZE_MAX);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    std::size_t e = sites[i].edge;
    if (e >= g.num_edges()) throw std::invalid_argument("subdivide: edge out of range");
    if (site_of[e] != SIZE_MAX) throw std::invalid_argument("subdivide: repeated edge");
    if (g.is_loop(e) && lengths[i] == 0) throw std::invalid_argument("subdivide: a loop cannot be contracted");
    site_of[e] = i;
  }
  // Sites with length 0 identify their endpoints.
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (lengths[i] != 0) continue;
    auto a = find(g.ends(sites[i].edge).u), b = find(g.ends(sites[i].edge).v);
    if (a == b) throw std::invalid_argument("subdivide: contracting the sites would collapse a cycle");
    parent[std::max(a, b)] = std::min(a, b);
  }

  SubdividedGraph out;
  out.sites = sites;
  out.lengths = lengths;
  auto h = std::make_shared<MultiGraph>();
  out.base_vertex.assign(g.num_vertices(), SIZE_MAX);
  std::vector<std::size_t> label(g.num_vertices(), SIZE_MAX);
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    auto r = find(v);
    if (label[r] == SIZE_MAX) label[r] = h->add_vertex(g.vertex_name(v));
    out.base_vertex[v] = label[r];
  }
  out.path_vertices.resize(sites.size());
  out.path_edges.resize(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const auto& ends = g.ends(sites[i].edge);
    std::size_t tail = out.base_vertex[sites[i].reversed ? ends.v : ends.u];
    std::size_t head = out.base_vertex[sites[i].reversed ? ends.u : ends.v];
    auto& pv = out.path_vertices[i];
    pv.push_back(tail);
    for (std::size_t t = 1; t < lengths[i]; ++t) {
      pv.push_back(h->add_vertex(g.edge_name(sites[i].edge) + "." + std::to_string(t)));
    }
    if (lengths[i] > 0) pv.push_back(head);
  }
  out.base_edge.assign(g.num_edges(), SIZE_MAX);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    std::size_t i = site_of[e];
    if (i == SIZE_MAX) {
      out.base_edge[e] = h->add_edge(out.base_vertex[g.ends(e).u], out.base_vertex[g.ends(e).v], g.edge_name(e));
      continue;
    }
    // Path edges are stored with the orientation of the original edge, so
    // length 1 reproduces G exactly.
    const auto& pv = out.path_vertices[i];
    for (std::size_t t = 1; t <= lengths[i]; ++t) {
      std::string name = lengths[i] == 1 ? g.edge_name(e) : g.edge_name(e) + "/" + std::to_string(t);
      std::size_t a = pv[t - 1], b = pv[t];
      out.path_edges[i].push_back(sites[i].reversed ? h->add_edge(b, a, name) : h->add_edge(a, b, name));
    }
  }
  out.graph = std::move(h);
  return out;
}

Contraction subdivision_map(const SubdividedGraph& source, const SubdividedGraph& target,
                            const std::vector<OrderedInjection>& f) {
  if (source.sites.size() != target.sites.size() || source.base_edge.size() != target.base_edge.size()) {
    throw std::invalid_argument("subdivision_map: graphs come from different families");
  }
  for (std::size_t i = 0; i < source.sites.size(); ++i) {
    if (source.sites[i].edge != target.sites[i].edge || source.sites[i].reversed != target.sites[i].reversed) {
      throw std::invalid_argument("subdivision_map: graphs come from different families");
    }
  }
  check_injections(f, target.lengths, source.lengths, "subdivision_map");
  const auto& s = *source.graph;
  std::vector<std::size_t> vm(s.num_vertices(), SIZE_MAX);
  for (std::size_t v = 0; v < source.base_vertex.size(); ++v) vm[source.base_vertex[v]] = target.base_vertex[v];
  std::vector<EdgeImage> em(s.num_edges());
  for (std::size_t e = 0; e < source.base_edge.size(); ++e) {
    if (source.base_edge[e] != SIZE_MAX) em[source.base_edge[e]] = EdgeImage::to(target.base_edge[e]);
  }
  for (std::size_t i = 0; i < source.sites.size(); ++i) {
    const auto& fi = f[i];
    // v^t -> v^s with s the number of j such that f(j) <= t.
    std::size_t s_index = 0;
    for (std::size_t t = 0; t <= source.lengths[i]; ++t) {
      while (s_index < fi.size() && fi[s_index] <= t) ++s_index;
      if (t > 0 && t < source.lengths[i]) vm[source.path_vertices[i][t]] = target.path_vertices[i][s_index];
    }
    std::size_t j = 0;
    for (std::size_t t = 1; t <= source.lengths[i]; ++t) {
      if (j < fi.size() && fi[j] == t) {
        em[source.path_edges[i][t - 1]] = EdgeImage::to(target.path_edges[i][j]);
        ++j;
      } else {
        em[source.path_edges[i][t - 1]] = EdgeImage::collapse();
      }
    }
  }
  return Contraction(source.graph, target.graph, std::move(vm), std::move(em));
}

SproutedGraph sprout(const MultiGraph& g, const std::vector<std::size_t>& vertices,
                     const std::vector<std::size_t>& lengths) {
  check_sites(vertices.size(), lengths.size(), "sprout");
  std::vector<bool> seen(g.num_vertices(), false);
  for (auto v : vertices) {
    if (v >= g.num_vertices()) throw std::invalid_argument("sprout: vertex out of range");
    if (seen[v]) throw std::invalid_argument("sprout: repeated vertex");
    seen[v] = true;
  }
  SproutedGraph out;
  out.sites = vertices;
  out.lengths = lengths;
  auto h = std::make_shared<MultiGraph>(g);
  out.sprout_edges.resize(vertices.size());
  out.sprout_leaves.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t t = 1; t <= lengths[i]; ++t) {
      std::string tag = g.vertex_name(vertices[i]) + "+" + std::to_string(t);
      std::size_t leaf = h->add_vertex(tag);
      out.sprout_leaves[i].push_back(leaf);
      out.sprout_edges[i].push_back(h->add_edge(vertices[i], leaf, "s:" + tag));
    }
  }
  out.graph = std::move(h);
  return out;
}

Contraction sprout_map(const SproutedGraph& source, const SproutedGraph& target,
                       const std::vector<OrderedInjection>& f) {
  if (source.sites != target.sites) throw std::invalid_argument("sprout_map: graphs come from different families");
  check_injections(f, target.lengths, source.lengths, "sprout_map");
  const auto& s = *source.graph;
  std::vector<std::size_t> vm(s.num_vertices());
  std::iota(vm.begin(), vm.end(), 0);
  std::vector<EdgeImage> em(s.num_edges());
  for (std::size_t e = 0; e < s.num_edges(); ++e) em[e] = EdgeImage::to(e);
  for (std::size_t i = 0; i < source.sites.size(); ++i) {
    std::size_t j = 0;
    for (std::size_t t = 1; t <= source.lengths[i]; ++t) {
      std::size_t edge = source.sprout_edges[i][t - 1], leaf = source.sprout_leaves[i][t - 1];
      if (j < f[i].size() && f[i][j] == t) {
        em[edge] = EdgeImage::to(target.sprout_edges[i][j]);
        vm[leaf] = target.sprout_leaves[i][j];
        ++j;
      } else {
        em[edge] = EdgeImage::collapse();
        vm[leaf] = source.sites[i];
      }
    }
  }
  return Contraction(source.graph, target.graph, std::move(vm), std::move(em));
}

}  // namespace gcat
