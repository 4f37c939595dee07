#include "gcat/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gcat/families.hpp"
#include "gcat/isomorphism.hpp"

namespace gcat {

std::vector<std::vector<std::size_t>> forests_of_size(const MultiGraph& g, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (chosen.size() == k) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t e = next; e + (k - chosen.size()) <= g.num_edges(); ++e) {
      auto a = find(g.ends(e).u), b = find(g.ends(e).v);
      if (a == b) continue;
      parent[a] = b;
      chosen.push_back(e);
      rec(e + 1);
      chosen.pop_back();
      parent[a] = a;
    }
  };
  rec(0);
  return out;
}

namespace {

void check_genus(const MultiGraph& g, const MultiGraph& g2) {
  if (genus(g) != genus(g2)) {
    throw std::invalid_argument("enumerate_contractions: genus " + std::to_string(genus(g)) +
                                " does not match genus " + std::to_string(genus(g2)));
  }
}

}  // namespace

std::vector<Contraction> enumerate_contractions(std::shared_ptr<const MultiGraph> g,
                                                std::shared_ptr<const MultiGraph> g2) {
  check_genus(*g, *g2);
  std::vector<Contraction> out;
  if (g->num_edges() < g2->num_edges()) return out;
  auto target_form = canonical_form(*g2);
  for (const auto& forest : forests_of_size(*g, g->num_edges() - g2->num_edges())) {
    auto [h, pi] = contract_edges(g, forest);
    if (canonical_form(*h) != target_form) continue;
    for (const auto& iso : isomorphisms(h, g2)) out.push_back(compose(iso, pi));
  }
  return out;
}

std::vector<Contraction> enumerate_contractions(const MultiGraph& g, const MultiGraph& g2) {
  return enumerate_contractions(std::make_shared<const MultiGraph>(g), std::make_shared<const MultiGraph>(g2));
}

std::uint64_t count_contractions(const MultiGraph& g, const MultiGraph& g2) {
  check_genus(g, g2);
  if (g.num_edges() < g2.num_edges()) return 0;
  auto shared = std::make_shared<const MultiGraph>(g);
  auto target_form = canonical_form(g2);
  std::uint64_t forests = 0;
  for (const auto& forest : forests_of_size(g, g.num_edges() - g2.num_edges())) {
    auto [h, pi] = contract_edges(shared, forest);
    forests += canonical_form(*h) == target_form;
  }
  return forests * count_automorphisms(g2);
}

std::vector<MultiGraph> enumerate_reduced_graphs(int g) {
  if (g < 0) throw std::invalid_argument("enumerate_reduced_graphs: negative genus");
  if (g == 0) return {point_graph()};
  if (g == 1) return {canonical_graph(rose_graph(1))};
  std::map<std::pair<std::size_t, CanonicalForm>, MultiGraph> found;
  for (std::size_t nv = 1; nv <= static_cast<std::size_t>(2 * g - 2); ++nv) {
    std::size_t ne = nv + static_cast<std::size_t>(g) - 1;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i; j < nv; ++j) slots.push_back({i, j});
    }
    std::vector<std::size_t> valence(nv, 0), mult(slots.size(), 0);
    // Vertex i is complete once slot (i, nv-1) is assigned; valences are
    // required to be non-increasing, which every isomorphism class admits.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t s, std::size_t left) {
      if (s == slots.size()) {
        if (left != 0) return;
        MultiGraph h(nv);
        for (std::size_t k = 0; k < slots.size(); ++k) {
          for (std::size_t r = 0; r < mult[k]; ++r) h.add_edge(slots[k].first, slots[k].second);
        }
        if (!is_reduced(h)) return;
        found.emplace(std::make_pair(nv, canonical_form(h)), canonical_graph(h));
        return;
      }
      auto [i, j] = slots[s];
      for (std::size_t m = 0; m <= left; ++m) {
        mult[s] = m;
        std::size_t add = (i == j) ? 2 * m : m;
        valence[i] += add;
        if (i != j) valence[j] += m;
        bool ok = true;
        if (j == nv - 1) {
          ok = valence[i] >= 3 && (i == 0 || valence[i] <= valence[i - 1]);
        }
        if (ok) rec(s + 1, left - m);
        valence[i] -= add;
        if (i != j) valence[j] -= m;
      }
      mult[s] = 0;
    };
    rec(0, ne);
  }
  std::vector<MultiGraph> out;
  for (auto& [key, graph] : found) out.push_back(std::move(graph));
  return out;
}

}  // namespace gcat
