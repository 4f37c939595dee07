#include "gcat/matroid.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "gcat/isomorphism.hpp"
#include "gcat/morphism.hpp"

namespace gcat {

namespace {

void require_matroid_input(const MultiGraph& g, const char* who) {
  if (g.empty() || !g.is_connected()) throw std::invalid_argument(std::string(who) + ": graph must be connected");
  if (g.num_edges() > 64) throw std::invalid_argument(std::string(who) + ": at most 64 edges are supported");
}

using VertexMask = std::uint64_t;

bool connected_within(const std::vector<VertexMask>& adj, VertexMask set) {
  if (set == 0) return false;
  VertexMask seen = set & (~set + 1), frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
    next &= set & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == set;
}

/// Connected vertex sets S containing vertex 0 with V \ S nonempty and connected.
long count_bonds(const MultiGraph& g) {
  std::size_t nv = g.num_vertices();
  if (nv > 64) throw std::invalid_argument("first_kl_coefficient: at most 64 vertices are supported");
  std::vector<VertexMask> adj(nv, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= VertexMask{1} << v;
    adj[v] |= VertexMask{1} << u;
  }
  const VertexMask all = nv == 64 ? ~VertexMask{0} : (VertexMask{1} << nv) - 1;
  long count = 0;
  // Each connected set is reached once: candidates branched on earlier are
  // excluded from later branches.
  std::function<void(VertexMask, VertexMask)> grow = [&](VertexMask set, VertexMask excluded) {
    if (set != all && connected_within(adj, all & ~set)) ++count;
    VertexMask frontier = 0;
    for (VertexMask s = set; s; s &= s - 1) frontier |= adj[static_cast<std::size_t>(__builtin_ctzll(s))];
    frontier &= ~set & ~excluded;
    for (VertexMask f = frontier; f; f &= f - 1) {
      VertexMask u = f & (~f + 1);
      grow(set | u, excluded);
      excluded |= u;
    }
  };
  grow(1, 0);
  return count;
}

/// μ(∅, F) for flats sorted by rank.
std::vector<Integer> mobius_from_bottom(const std::vector<Flat>& fs) {
  std::vector<Integer> mu(fs.size(), Integer(0));
  for (std::size_t a = 0; a < fs.size(); ++a) {
    if (a == 0) {
      mu[a] = Integer(1);
      continue;
    }
    Integer s(0);
    for (std::size_t b = 0; b < a && fs[b].rank < fs[a].rank; ++b) {
      if ((fs[b].edges & fs[a].edges) == fs[b].edges) s -= mu[b];
    }
    mu[a] = s;
  }
  return mu;
}

/// χ of the restriction to each flat.
std::vector<IntPolynomial> restriction_chis(const std::vector<Flat>& fs) {
  auto mu = mobius_from_bottom(fs);
  std::vector<IntPolynomial> out(fs.size());
  for (std::size_t a = 0; a < fs.size(); ++a) {
    std::vector<Integer> c(fs[a].rank + 1, Integer(0));
    for (std::size_t b = 0; b <= a; ++b) {
      if ((fs[b].edges & fs[a].edges) == fs[b].edges) c[fs[a].rank - fs[b].rank] += mu[b];
    }
    out[a] = IntPolynomial(std::move(c));
  }
  return out;
}

struct KlCache {
  std::mutex mutex;
  std::unordered_map<CanonicalForm, IntPolynomial, CanonicalFormHash> table;
};

KlCache& kl_cache() {
  static KlCache cache;
  return cache;
}

IntPolynomial kl_simple(const MultiGraph& s);

IntPolynomial kl_compute(const MultiGraph& s) {
  std::size_t r = s.num_vertices() - 1;
  if (r == 0) return IntPolynomial(1);
  auto fs = flats(s);
  auto chis = restriction_chis(fs);
  auto sp = std::make_shared<const MultiGraph>(s);
  IntPolynomial rhs;
  for (std::size_t a = 1; a < fs.size(); ++a) {
    auto quotient = smoosh_edges(sp, fs[a].edge_list());
    rhs += chis[a] * kl_simple(simplify(quotient.target()));
  }
  // t^r P(1/t) - P(t) = rhs, with P below degree r/2 and its reversal above.
  std::vector<Integer> low;
  for (std::size_t k = 0; 2 * k < r; ++k) low.push_back(-rhs[k]);
  IntPolynomial p(low);
  for (std::size_t k = 0; k <= r; ++k) {
    Integer expect = (2 * k > r ? p[r - k] : Integer(0)) - (2 * k < r ? p[k] : Integer(0));
    if (!(rhs[k] == expect)) throw std::logic_error("kl_polynomial: recursion is inconsistent");
  }
  return p;
}

IntPolynomial kl_simple(const MultiGraph& s) {
  auto key = canonical_form(s);
  auto& cache = kl_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;
  }
  auto p = kl_compute(s);
  std::lock_guard lock(cache.mutex);
  return cache.table.emplace(std::move(key), std::move(p)).first->second;
}

}  // namespace

std::vector<std::size_t> Flat::edge_list() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < 64; ++e) {
    if (contains(e)) out.push_back(e);
  }
  return out;
}

Flat closure(const MultiGraph& g, std::uint64_t edges) {
  std::size_t nv = g.num_vertices();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if ((edges >> e) & 1u) {
      auto a = find(g.ends(e).u), b = find(g.ends(e).v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  Flat f;
  f.block.assign(nv, 0);
  std::vector<std::size_t> id(nv, SIZE_MAX);
  for (std::size_t v = 0; v < nv; ++v) {
    auto root = find(v);
    if (id[root] == SIZE_MAX) id[root] = f.num_blocks++;
    f.block[v] = id[root];
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (f.block[g.ends(e).u] == f.block[g.ends(e).v]) f.edges |= std::uint64_t{1} << e;
  }
  f.rank = nv - f.num_blocks;
  f.corank = f.num_blocks - 1;
  return f;
}

std::vector<Flat> flats(const MultiGraph& g) {
  require_matroid_input(g, "flats");
  std::vector<Flat> out{closure(g, 0)};
  std::unordered_set<std::uint64_t> seen{out[0].edges};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      if (out[k].contains(e)) continue;
      auto f = closure(g, out[k].edges | (std::uint64_t{1} << e));
      if (seen.insert(f.edges).second) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.edges < b.edges;
  });
  return out;
}

IntPolynomial characteristic_polynomial(const MultiGraph& g) {
  require_matroid_input(g, "characteristic_polynomial");
  if (g.has_loop()) return {};
  auto fs = flats(g);
  return restriction_chis(fs).back();
}

Integer os_dimension(const MultiGraph& g, std::size_t i) {
  require_matroid_input(g, "os_dimension");
  MultiGraph loopless(g.num_vertices());
  for (const auto& [u, v] : g.edges()) {
    if (u != v) loopless.add_edge(u, v);
  }
  std::size_t r = g.num_vertices() - 1;
  if (i > r) return Integer(0);
  return abs(characteristic_polynomial(loopless)[r - i]);
}

IntPolynomial kl_polynomial(const MultiGraph& g) {
  require_matroid_input(g, "kl_polynomial");
  if (g.has_loop()) throw std::invalid_argument("kl_polynomial: graph has a loop");
  return kl_simple(simplify(g));
}

Integer first_kl_coefficient(const MultiGraph& g) {
  require_matroid_input(g, "first_kl_coefficient");
  if (g.has_loop()) throw std::invalid_argument("first_kl_coefficient: graph has a loop");
  if (g.num_vertices() < 4) throw std::invalid_argument("first_kl_coefficient: rank must be at least 3");
  // Rank-1 flats are parallel classes; corank-1 flats are complements of
  // bonds, i.e. splits of V into two connected sides.
  long rank1 = static_cast<long>(simplify(g).num_edges());
  return Integer(count_bonds(g) - rank1);
}

MultiGraph simplify(const MultiGraph& g) {
  MultiGraph s(g.num_vertices());
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : g.edges()) {
    if (u == v) continue;
    if (seen.insert({std::min(u, v), std::max(u, v)}).second) s.add_edge(u, v);
  }
  return s;
}

}  // namespace gcat
