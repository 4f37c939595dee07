#include "gcat/morphism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcat {

namespace {

std::size_t count_classes(std::size_t n, const MultiGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = n;
  for (auto e : edges) {
    auto a = find(g.ends(e).u), b = find(g.ends(e).v);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  }
  return classes;
}

void fail(const std::string& what) { throw std::invalid_argument("graph morphism: " + what); }

}  // namespace

Smooshing::Smooshing(std::shared_ptr<const MultiGraph> source, std::shared_ptr<const MultiGraph> target,
                     std::vector<std::size_t> vertex_map, std::vector<EdgeImage> edge_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      edge_map_(std::move(edge_map)) {
  if (!source_ || !target_) fail("null graph");
  const auto& s = *source_;
  const auto& t = *target_;
  if (vertex_map_.size() != s.num_vertices()) fail("vertex map has the wrong length");
  if (edge_map_.size() != s.num_edges()) fail("edge map has the wrong length");
  std::vector<bool> hit(t.num_vertices(), false);
  for (auto w : vertex_map_) {
    if (w >= t.num_vertices()) fail("vertex image out of range");
    hit[w] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) fail("vertex map is not surjective");

  edge_preimage_.assign(t.num_edges(), SIZE_MAX);
  for (std::size_t e = 0; e < s.num_edges(); ++e) {
    const auto& img = edge_map_[e];
    std::size_t a = vertex_map_[s.ends(e).u], b = vertex_map_[s.ends(e).v];
    if (img.contracted) {
      if (a != b) fail("contracted edge " + std::to_string(e) + " joins different fibers");
      continue;
    }
    if (img.edge >= t.num_edges()) fail("edge image out of range");
    if (edge_preimage_[img.edge] != SIZE_MAX) fail("two edges map to target edge " + std::to_string(img.edge));
    edge_preimage_[img.edge] = e;
    const auto& te = t.ends(img.edge);
    bool ok = img.flip ? (a == te.v && b == te.u) : (a == te.u && b == te.v);
    if (!ok) fail("edge " + std::to_string(e) + " does not respect endpoints");
  }
  if (std::find(edge_preimage_.begin(), edge_preimage_.end(), SIZE_MAX) != edge_preimage_.end()) {
    fail("edge map is not onto the target edges");
  }
  // Contracted edges stay inside fibers, so fibers are connected iff the
  // contracted subgraph has exactly one component per target vertex.
  if (count_classes(s.num_vertices(), s, contracted_edges()) != t.num_vertices()) fail("a fiber is not connected");
}

std::vector<std::size_t> Smooshing::contracted_edges() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    if (edge_map_[e].contracted) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> Smooshing::fiber(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] == w) out.push_back(v);
  }
  return out;
}

HalfEdge Smooshing::half_edge(HalfEdge h) const {
  const auto& img = edge_map_.at(edge_of(h));
  if (img.contracted) throw std::invalid_argument("half_edge: edge is contracted");
  return 2 * img.edge + static_cast<std::size_t>(side_of(h) ^ static_cast<int>(img.flip));
}

std::size_t Smooshing::edge_preimage(std::size_t e) const { return edge_preimage_.at(e); }

bool Smooshing::fibers_are_trees() const {
  return contracted_edges().size() == source_->num_vertices() - target_->num_vertices();
}

bool Smooshing::is_identity() const {
  if (!(*source_ == *target_)) return false;
  for (std::size_t v = 0; v < vertex_map_.size(); ++v) {
    if (vertex_map_[v] != v) return false;
  }
  for (std::size_t e = 0; e < edge_map_.size(); ++e) {
    if (!(edge_map_[e] == EdgeImage::to(e))) return false;
  }
  return true;
}

bool operator==(const Smooshing& a, const Smooshing& b) {
  return a.vertex_map_ == b.vertex_map_ && a.edge_map_ == b.edge_map_ &&
         (a.source_ == b.source_ || *a.source_ == *b.source_) && (a.target_ == b.target_ || *a.target_ == *b.target_);
}

Contraction::Contraction(std::shared_ptr<const MultiGraph> source, std::shared_ptr<const MultiGraph> target,
                         std::vector<std::size_t> vertex_map, std::vector<EdgeImage> edge_map)
    : Smooshing(std::move(source), std::move(target), std::move(vertex_map), std::move(edge_map)) {
  if (!fibers_are_trees()) fail("a fiber is not a tree");
}

Contraction::Contraction(const Smooshing& s) : Smooshing(s) {
  if (!fibers_are_trees()) fail("a fiber is not a tree");
}

Contraction Contraction::identity(std::shared_ptr<const MultiGraph> g) {
  std::vector<std::size_t> vm(g->num_vertices());
  std::iota(vm.begin(), vm.end(), 0);
  std::vector<EdgeImage> em;
  for (std::size_t e = 0; e < g->num_edges(); ++e) em.push_back(EdgeImage::to(e));
  return Contraction(g, g, std::move(vm), std::move(em));
}

Contraction Contraction::identity(const MultiGraph& g) { return identity(std::make_shared<const MultiGraph>(g)); }

Smooshing compose(const Smooshing& psi, const Smooshing& phi) {
  if (!(phi.target_ptr() == psi.source_ptr() || phi.target() == psi.source())) {
    throw std::invalid_argument("compose: target of the first map is not the source of the second");
  }
  std::vector<std::size_t> vm(phi.source().num_vertices());
  for (std::size_t v = 0; v < vm.size(); ++v) vm[v] = psi.vertex(phi.vertex(v));
  std::vector<EdgeImage> em(phi.source().num_edges());
  for (std::size_t e = 0; e < em.size(); ++e) {
    const auto& a = phi.edge(e);
    if (a.contracted) {
      em[e] = EdgeImage::collapse();
      continue;
    }
    const auto& b = psi.edge(a.edge);
    em[e] = b.contracted ? EdgeImage::collapse() : EdgeImage::to(b.edge, a.flip != b.flip);
  }
  return Smooshing(phi.source_ptr(), psi.target_ptr(), std::move(vm), std::move(em));
}

Contraction compose(const Contraction& psi, const Contraction& phi) {
  return Contraction(compose(static_cast<const Smooshing&>(psi), static_cast<const Smooshing&>(phi)));
}

std::optional<Contraction> factor_through(const Contraction& phi, const Contraction& pi) {
  if (!(phi.source_ptr() == pi.source_ptr() || phi.source() == pi.source())) {
    throw std::invalid_argument("factor_through: maps have different sources");
  }
  const auto& mid = pi.target();
  std::vector<std::size_t> vmap(mid.num_vertices(), SIZE_MAX);
  for (std::size_t v = 0; v < pi.source().num_vertices(); ++v) {
    auto& slot = vmap[pi.vertex(v)];
    if (slot == SIZE_MAX) slot = phi.vertex(v);
    else if (slot != phi.vertex(v)) return std::nullopt;
  }
  for (std::size_t e = 0; e < pi.source().num_edges(); ++e) {
    if (pi.edge(e).contracted && !phi.edge(e).contracted) return std::nullopt;
  }
  std::vector<EdgeImage> emap(mid.num_edges());
  for (std::size_t t = 0; t < mid.num_edges(); ++t) {
    std::size_t s = pi.edge_preimage(t);
    EdgeImage img = phi.edge(s);
    if (!img.contracted) img.flip = img.flip != pi.edge(s).flip;
    emap[t] = img;
  }
  return Contraction(pi.target_ptr(), phi.target_ptr(), std::move(vmap), std::move(emap));
}

Contraction inverse(const Contraction& iso) {
  if (!iso.contracted_edges().empty()) throw std::invalid_argument("inverse: not an isomorphism");
  std::vector<std::size_t> vm(iso.target().num_vertices());
  for (std::size_t v = 0; v < iso.source().num_vertices(); ++v) vm[iso.vertex(v)] = v;
  std::vector<EdgeImage> em(iso.target().num_edges());
  for (std::size_t e = 0; e < iso.source().num_edges(); ++e) {
    em[iso.edge(e).edge] = EdgeImage::to(e, iso.edge(e).flip);
  }
  return Contraction(iso.target_ptr(), iso.source_ptr(), std::move(vm), std::move(em));
}

Smooshing smoosh_edges(std::shared_ptr<const MultiGraph> g, const std::vector<std::size_t>& edges) {
  std::size_t n = g->num_vertices();
  std::vector<bool> collapse(g->num_edges(), false);
  for (auto e : edges) {
    if (e >= g->num_edges()) throw std::invalid_argument("smoosh_edges: edge out of range");
    collapse[e] = true;
  }
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g->num_edges(); ++e) {
    if (!collapse[e]) continue;
    auto a = find(g->ends(e).u), b = find(g->ends(e).v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> vm(n), label(n, SIZE_MAX);
  auto quotient = std::make_shared<MultiGraph>();
  for (std::size_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (label[r] == SIZE_MAX) label[r] = quotient->add_vertex(g->vertex_name(v));
    vm[v] = label[r];
  }
  std::vector<EdgeImage> em(g->num_edges());
  for (std::size_t e = 0; e < g->num_edges(); ++e) {
    if (collapse[e]) {
      em[e] = EdgeImage::collapse();
    } else {
      em[e] = EdgeImage::to(quotient->add_edge(vm[g->ends(e).u], vm[g->ends(e).v], g->edge_name(e)));
    }
  }
  return Smooshing(std::move(g), std::move(quotient), std::move(vm), std::move(em));
}

ContractionResult contract_edges(std::shared_ptr<const MultiGraph> g, const std::vector<std::size_t>& edges) {
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("contract_edges: repeated edge");
  }
  for (auto e : sorted) {
    if (e >= g->num_edges()) throw std::invalid_argument("contract_edges: edge out of range");
  }
  if (!is_forest(*g, sorted)) throw std::invalid_argument("contract_edges: edge set contains a cycle");
  Contraction c(smoosh_edges(std::move(g), sorted));
  auto target = c.target_ptr();
  return {std::move(target), std::move(c)};
}

ContractionResult contract_edges(const MultiGraph& g, const std::vector<std::size_t>& edges) {
  return contract_edges(std::make_shared<const MultiGraph>(g), edges);
}

}  // namespace gcat
