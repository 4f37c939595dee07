#include "gcat/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace gcat {

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// Edge multiplicities; the diagonal holds loop counts.
Matrix multiplicities(const MultiGraph& g) {
  std::size_t n = g.num_vertices();
  Matrix m(n, std::vector<std::uint32_t>(n, 0));
  for (const auto& e : g.edges()) {
    ++m[e.u][e.v];
    if (e.u != e.v) ++m[e.v][e.u];
  }
  return m;
}

/// Colors are ranks of signatures, so they are isomorphism invariants.
std::vector<std::size_t> refine(const Matrix& m, std::vector<std::size_t> color) {
  std::size_t n = m.size();
  std::size_t classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    using Signature = std::pair<std::size_t, std::vector<std::uint64_t>>;
    std::vector<Signature> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = color[v];
      auto& s = sig[v].second;
      s.push_back(m[v][v]);
      std::vector<std::uint64_t> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && m[v][w]) nb.push_back((static_cast<std::uint64_t>(color[w]) << 32) | m[v][w]);
      }
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
    }
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    if (distinct.size() == classes) return color;
    classes = distinct.size();
  }
}

bool twins(const Matrix& m, std::size_t u, std::size_t w) {
  if (m[u][u] != m[w][w]) return false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (x != u && x != w && m[u][x] != m[w][x]) return false;
  }
  return true;
}

std::vector<std::uint32_t> code_for(const Matrix& m, const std::vector<std::size_t>& order) {
  std::vector<std::uint32_t> code{static_cast<std::uint32_t>(m.size())};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i; j < order.size(); ++j) code.push_back(m[order[i]][order[j]]);
  }
  return code;
}

struct CanonicalSearch {
  const Matrix& m;
  std::vector<std::uint32_t> best_code;
  std::vector<std::size_t> best_order;

  void search(const std::vector<std::size_t>& color) {
    std::size_t n = m.size();
    std::map<std::size_t, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < n; ++v) cells[color[v]].push_back(v);
    const std::vector<std::size_t>* target = nullptr;
    std::size_t target_color = 0;
    for (const auto& [c, members] : cells) {
      if (members.size() > 1 && (!target || members.size() < target->size())) {
        target = &members;
        target_color = c;
      }
    }
    if (!target) {
      std::vector<std::size_t> order(n);
      for (std::size_t v = 0; v < n; ++v) order[color[v]] = v;
      auto code = code_for(m, order);
      if (best_code.empty() || code < best_code) {
        best_code = std::move(code);
        best_order = std::move(order);
      }
      return;
    }
    // Twins give isomorphic subtrees, so one representative per twin class suffices.
    std::vector<std::size_t> reps;
    for (auto v : *target) {
      bool covered = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) { return twins(m, r, v); });
      if (!covered) reps.push_back(v);
    }
    for (auto v : reps) {
      std::vector<std::size_t> next = color;
      for (std::size_t x = 0; x < n; ++x) {
        if (color[x] > target_color || (color[x] == target_color && x != v)) ++next[x];
      }
      search(refine(m, std::move(next)));
    }
  }
};

/// Calls visit(f) for every vertex bijection a -> b preserving multiplicities.
void vertex_isomorphisms(const MultiGraph& a, const MultiGraph& b,
                         const std::function<void(const std::vector<std::size_t>&)>& visit,
                         std::size_t limit = SIZE_MAX) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return;
  std::size_t n = a.num_vertices();
  auto ma = multiplicities(a), mb = multiplicities(b);
  auto ca = refine(ma, std::vector<std::size_t>(n, 0));
  auto cb = refine(mb, std::vector<std::size_t>(n, 0));
  auto sa = ca, sb = cb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return;
  std::vector<std::size_t> f(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  std::size_t found = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (found >= limit) return;
    if (v == n) {
      ++found;
      visit(f);
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || ca[v] != cb[w] || ma[v][v] != mb[w][w]) continue;
      bool ok = true;
      for (std::size_t x = 0; x < v && ok; ++x) ok = ma[v][x] == mb[w][f[x]];
      if (!ok) continue;
      f[v] = w;
      used[w] = true;
      rec(v + 1);
      used[w] = false;
    }
    f[v] = SIZE_MAX;
  };
  rec(0);
}

std::uint64_t factorial(std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Every edge bijection over a fixed vertex bijection, as edge maps.
void expand_edges(const std::shared_ptr<const MultiGraph>& a, const std::shared_ptr<const MultiGraph>& b,
                  const std::vector<std::size_t>& f, std::vector<Contraction>& out,
                  std::size_t limit = SIZE_MAX) {
  using Key = std::pair<std::size_t, std::size_t>;
  std::map<Key, std::vector<std::size_t>> in_b;
  for (std::size_t e = 0; e < b->num_edges(); ++e) {
    const auto& ends = b->ends(e);
    in_b[{std::min(ends.u, ends.v), std::max(ends.u, ends.v)}].push_back(e);
  }
  std::vector<EdgeImage> em(a->num_edges());
  // Group a's edges by their unordered endpoint pair, in first-appearance order.
  std::vector<std::vector<std::size_t>> groups;
  std::map<Key, std::size_t> group_of;
  for (std::size_t e = 0; e < a->num_edges(); ++e) {
    const auto& ends = a->ends(e);
    Key k{std::min(ends.u, ends.v), std::max(ends.u, ends.v)};
    auto [it, fresh] = group_of.emplace(k, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(e);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t gi) {
    if (out.size() >= limit) return;
    if (gi == groups.size()) {
      out.emplace_back(a, b, f, em);
      return;
    }
    const auto& group = groups[gi];
    const auto& first = a->ends(group[0]);
    std::size_t x = f[first.u], y = f[first.v];
    auto targets = in_b.at({std::min(x, y), std::max(x, y)});
    bool loop = first.u == first.v;
    do {
      std::function<void(std::size_t)> flips = [&](std::size_t k) {
        if (k == group.size()) {
          rec(gi + 1);
          return;
        }
        std::size_t e = group[k], t = targets[k];
        if (loop) {
          for (bool flip : {false, true}) {
            em[e] = EdgeImage::to(t, flip);
            flips(k + 1);
          }
        } else {
          em[e] = EdgeImage::to(t, f[a->ends(e).u] != b->ends(t).u);
          flips(k + 1);
        }
      };
      flips(0);
    } while (out.size() < limit && std::next_permutation(targets.begin(), targets.end()));
  };
  rec(0);
}

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& c) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : c.code) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::size_t> canonical_order(const MultiGraph& g) {
  auto m = multiplicities(g);
  CanonicalSearch s{m, {}, {}};
  s.search(refine(m, std::vector<std::size_t>(g.num_vertices(), 0)));
  return s.best_order;
}

CanonicalForm canonical_form(const MultiGraph& g) {
  auto m = multiplicities(g);
  return {code_for(m, canonical_order(g))};
}

MultiGraph canonical_graph(const MultiGraph& g) {
  auto order = canonical_order(g);
  std::vector<std::size_t> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v])});
  }
  std::sort(edges.begin(), edges.end());
  return MultiGraph(g.num_vertices(), edges);
}

bool are_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Contraction> isomorphisms(std::shared_ptr<const MultiGraph> a, std::shared_ptr<const MultiGraph> b) {
  std::vector<Contraction> out;
  vertex_isomorphisms(*a, *b, [&](const std::vector<std::size_t>& f) { expand_edges(a, b, f, out); });
  return out;
}

std::optional<Contraction> find_isomorphism(std::shared_ptr<const MultiGraph> a,
                                            std::shared_ptr<const MultiGraph> b) {
  if (!are_isomorphic(*a, *b)) return std::nullopt;
  // Fix the first vertex bijection and take its first edge assignment.
  std::optional<std::vector<std::size_t>> first;
  vertex_isomorphisms(*a, *b, [&](const std::vector<std::size_t>& f) {
    if (!first) first = f;
  }, 1);
  if (!first) return std::nullopt;
  std::vector<Contraction> out;
  expand_edges(a, b, *first, out, 1);
  return out.front();
}

std::vector<Contraction> automorphisms(std::shared_ptr<const MultiGraph> g) { return isomorphisms(g, g); }

std::vector<Contraction> automorphisms(const MultiGraph& g) {
  return automorphisms(std::make_shared<const MultiGraph>(g));
}

std::uint64_t count_automorphisms(const MultiGraph& g) {
  std::uint64_t vertex_autos = 0;
  vertex_isomorphisms(g, g, [&](const std::vector<std::size_t>&) { ++vertex_autos; });
  auto m = multiplicities(g);
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    per *= factorial(m[i][i]) << m[i][i];
    for (std::size_t j = i + 1; j < m.size(); ++j) per *= factorial(m[i][j]);
  }
  return vertex_autos * per;
}

}  // namespace gcat
