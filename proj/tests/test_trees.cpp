#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gcat/trees.hpp"

using namespace gcat;

namespace {

// Oracles: trees as graphs, validity through the graph-core constructor, and
// depth-first positions recomputed from scratch.

MultiGraph as_graph(const PlanarRootedTree& t) {
  MultiGraph g(t.size());
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (v != t.root()) g.add_edge(v, t.parent(v));
  }
  return g;
}

std::vector<std::size_t> preorder(const PlanarRootedTree& t) {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{t.root()};
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& c = t.children(v);
    for (auto it = c.rbegin(); it != c.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool ancestor_or_self(const PlanarRootedTree& t, std::size_t w, std::size_t v) {
  for (auto x = v; x != PlanarRootedTree::npos; x = t.parent(x)) {
    if (x == w) return true;
  }
  return false;
}

bool oracle_rooted_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (phi.size() != t.size() || phi[t.root()] != t2.root()) return false;
  auto g = std::make_shared<const MultiGraph>(as_graph(t));
  auto g2 = std::make_shared<const MultiGraph>(as_graph(t2));
  std::vector<EdgeImage> em;
  for (std::size_t e = 0; e < g->num_edges(); ++e) {
    auto a = phi[g->ends(e).u], b = phi[g->ends(e).v];
    if (a == b) {
      em.push_back(EdgeImage::collapse());
      continue;
    }
    bool found = false;
    for (std::size_t f = 0; f < g2->num_edges(); ++f) {
      if (g2->ends(f).u == a && g2->ends(f).v == b) em.push_back(EdgeImage::to(f, false)), found = true;
      else if (g2->ends(f).u == b && g2->ends(f).v == a) em.push_back(EdgeImage::to(f, true)), found = true;
      if (found) break;
    }
    if (!found) return false;
  }
  try {
    Contraction c(g, g2, phi, em);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return true;
}

bool oracle_planar_contraction(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (!oracle_rooted_contraction(t, t2, phi)) return false;
  auto pre = preorder(t);
  auto pre2 = preorder(t2);
  std::vector<std::size_t> first(t2.size(), SIZE_MAX), pos2(t2.size());
  for (std::size_t k = 0; k < pre.size(); ++k) first[phi[pre[k]]] = std::min(first[phi[pre[k]]], k);
  for (std::size_t k = 0; k < pre2.size(); ++k) pos2[pre2[k]] = k;
  for (std::size_t v = 0; v < t2.size(); ++v) {
    for (std::size_t w = 0; w < t2.size(); ++w) {
      if ((first[v] < first[w]) != (pos2[v] < pos2[w])) return false;
    }
  }
  return true;
}

bool oracle_labeled(const PlanarRootedTree& t, const PlanarRootedTree& t2, const TreeMap& phi) {
  if (!oracle_planar_contraction(t, t2, phi)) return false;
  for (std::size_t w = 0; w < t.size(); ++w) {
    bool maximal = true;
    for (std::size_t u = 0; u < t.size(); ++u) {
      if (phi[u] == phi[w] && !ancestor_or_self(t, w, u)) maximal = false;
    }
    if (maximal && t2.label(phi[w]) != t.label(w)) return false;
  }
  return true;
}

bool oracle_order_embedding(const PlanarRootedTree& t2, const PlanarRootedTree& t, const TreeMap& iota) {
  if (iota.size() != t2.size() || iota[t2.root()] != t.root()) return false;
  auto pre = preorder(t), pre2 = preorder(t2);
  std::vector<std::size_t> pos(t.size()), pos2(t2.size());
  for (std::size_t k = 0; k < pre.size(); ++k) pos[pre[k]] = k;
  for (std::size_t k = 0; k < pre2.size(); ++k) pos2[pre2[k]] = k;
  for (std::size_t v = 0; v < t2.size(); ++v) {
    for (std::size_t w = 0; w < t2.size(); ++w) {
      if (v != w && iota[v] == iota[w]) return false;
      if (ancestor_or_self(t2, w, v) != ancestor_or_self(t, iota[w], iota[v])) return false;
      if ((pos2[v] < pos2[w]) != (pos[iota[v]] < pos[iota[w]])) return false;
    }
  }
  return true;
}

/// Every map [n] -> [k].
std::vector<TreeMap> all_maps(std::size_t n, std::size_t k) {
  std::vector<TreeMap> out;
  TreeMap m(n, 0);
  while (true) {
    out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++m[i] == k) m[i++] = 0;
    if (i == n) break;
  }
  return out;
}

std::vector<PlanarRootedTree> trees_up_to(std::size_t edges) {
  std::vector<PlanarRootedTree> out;
  for (std::size_t e = 0; e <= edges; ++e) {
    for (auto& t : planar_rooted_trees(e)) out.push_back(t);
  }
  return out;
}

/// Every {0,1} labeling of every tree with at most `edges` edges.
std::vector<PlanarRootedTree> binary_labeled_trees(std::size_t edges) {
  std::vector<PlanarRootedTree> out;
  for (const auto& t : trees_up_to(edges)) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << t.size()); ++mask) {
      std::vector<TreeLabel> l(t.size());
      for (std::size_t v = 0; v < t.size(); ++v) l[v] = {static_cast<long>((mask >> v) & 1)};
      out.push_back(t.with_labels(l));
    }
  }
  return out;
}

PlanarRootedTree constant_labels(const PlanarRootedTree& t) {
  return t.with_labels(std::vector<TreeLabel>(t.size(), TreeLabel{}));
}

bool oracle_quasi_leq(const PlanarRootedTree& a, const PlanarRootedTree& b) {
  for (const auto& phi : planar_contractions(b, a)) {
    if (oracle_labeled(b, a, phi)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("depth-first order") {
  PlanarRootedTree point;
  CHECK(point.order() == std::vector<std::size_t>{0});

  PlanarRootedTree cherry(0, {{1, 2}, {}, {}});
  CHECK(cherry.order() == std::vector<std::size_t>{0, 1, 2});
  PlanarRootedTree swapped(0, {{2, 1}, {}, {}});
  CHECK(swapped.order() == std::vector<std::size_t>{0, 2, 1});

  PlanarRootedTree path(3, {{}, {0}, {1}, {2}});
  CHECK(path.order() == std::vector<std::size_t>{3, 2, 1, 0});
  CHECK(path.leq(0, 3));
  CHECK_FALSE(path.leq(3, 0));

  auto t = PlanarRootedTree::parse("(0 (1 (3)) (2))");
  CHECK(t.order() == std::vector<std::size_t>{0, 1, 3, 2});
  for (const auto& u : trees_up_to(5)) {
    CHECK(u.order() == preorder(u));
    for (std::size_t v = 0; v < u.size(); ++v) {
      for (std::size_t w = 0; w < u.size(); ++w) CHECK(u.leq(v, w) == ancestor_or_self(u, w, v));
    }
  }

  CHECK_THROWS_AS(PlanarRootedTree(0, {{1}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarRootedTree(0, {{1, 1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(PlanarRootedTree(0, {{}, {}}), std::invalid_argument);
}

TEST_CASE("tree enumeration and serialization") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t e = 0; e <= 6; ++e) {
    auto ts = planar_rooted_trees(e);
    CHECK(ts.size() == catalan[e]);
    std::set<std::string> seen;
    for (const auto& t : ts) {
      CHECK(t.num_edges() == e);
      CHECK(t == t.normalized());
      seen.insert(t.str());
    }
    CHECK(seen.size() == ts.size());
  }

  std::mt19937_64 rng(7);
  for (const auto& t : trees_up_to(5)) {
    CHECK(PlanarRootedTree::parse(t.str()) == t);
    std::vector<TreeLabel> l(t.size());
    for (auto& x : l) x = {static_cast<long>(rng() % 3), -static_cast<long>(rng() % 2)};
    auto lt = t.with_labels(l);
    CHECK(PlanarRootedTree::parse(lt.str()) == lt);
  }
  auto lt = PlanarRootedTree::parse("(r:1,0 (a:0,0) (b:1,1 (c:0,1)))");
  CHECK(lt.order() == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(lt.label(2) == TreeLabel{1, 1});
  CHECK(lt.str() == "(0:1,0 (1:0,0) (2:1,1 (3:0,1)))");
  CHECK(constant_labels(PlanarRootedTree()).str() == "(0:)");
  CHECK(PlanarRootedTree::parse("(0:)") == constant_labels(PlanarRootedTree()));
  CHECK_THROWS_AS(PlanarRootedTree::parse("(0 (1)"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarRootedTree::parse("(0:1 (1))"), std::invalid_argument);
  CHECK_THROWS_AS(PlanarRootedTree::parse("(0:x)"), std::invalid_argument);

  // Non-normalized ids survive a round trip.
  PlanarRootedTree odd(2, {{}, {0}, {1, 3}, {}});
  CHECK(PlanarRootedTree::parse(odd.str()) == odd);
}

TEST_CASE("planar contractions") {
  auto path3 = PlanarRootedTree::parse("(0 (1 (2)))");
  auto path2 = PlanarRootedTree::parse("(0 (1))");
  CHECK(is_planar_contraction(path3, path3, {0, 1, 2}));
  CHECK(is_planar_contraction(path3, path2, {0, 0, 1}));
  CHECK(is_planar_contraction(path3, path2, {0, 1, 1}));
  CHECK_FALSE(is_tree_contraction(path3, path2, {0, 1, 0}));

  // Contracting 0-1 in (0 (1 (3)) (2)) leaves 3 before 2 in depth-first
  // order, so only one of the two rooted contractions onto a cherry is planar.
  auto t = PlanarRootedTree::parse("(0 (1 (3)) (2))");
  auto cherry = PlanarRootedTree::parse("(0 (1) (2))");
  TreeMap keep = {0, 0, 2, 1}, swap = {0, 0, 1, 2};
  CHECK(is_tree_contraction(t, cherry, keep));
  CHECK(is_tree_contraction(t, cherry, swap));
  CHECK(is_planar_contraction(t, cherry, keep));
  CHECK_FALSE(is_planar_contraction(t, cherry, swap));
  CHECK(oracle_rooted_contraction(t, cherry, swap));
  CHECK_FALSE(oracle_planar_contraction(t, cherry, swap));

  // Library enumeration against every raw vertex map.
  auto small = trees_up_to(4);
  for (const auto& a : small) {
    for (const auto& b : small) {
      if (b.size() > a.size()) continue;
      std::set<TreeMap> expected, rooted;
      for (const auto& m : all_maps(a.size(), b.size())) {
        if (oracle_planar_contraction(a, b, m)) expected.insert(m);
        if (oracle_rooted_contraction(a, b, m)) rooted.insert(m);
        CHECK(is_planar_contraction(a, b, m) == oracle_planar_contraction(a, b, m));
        CHECK(is_tree_contraction(a, b, m) == oracle_rooted_contraction(a, b, m));
      }
      auto got = planar_contractions(a, b);
      CHECK(std::set<TreeMap>(got.begin(), got.end()) == expected);
      CHECK(got.size() == expected.size());
      // Plane trees are rigid: at most one planar contraction per edge set.
      CHECK(expected.size() <= rooted.size());
    }
  }
}

TEST_CASE("labeled contractions") {
  auto path = PlanarRootedTree::parse("(0:1 (1:2))");
  auto point = PlanarRootedTree::parse("(0:1)");
  CHECK(is_labeled_contraction(path, path, {0, 1}));
  CHECK(is_labeled_contraction(path, point, {0, 0}));
  // Only the lower vertex of the fiber matches the target label.
  auto point2 = PlanarRootedTree::parse("(0:2)");
  CHECK_FALSE(is_labeled_contraction(path, point2, {0, 0}));
  CHECK(is_phi_maximal(path, {0, 0}, 0));
  CHECK_FALSE(is_phi_maximal(path, {0, 0}, 1));

  for (const auto& a : trees_up_to(4)) {
    for (const auto& b : trees_up_to(3)) {
      auto ca = constant_labels(a), cb = constant_labels(b);
      for (const auto& phi : planar_contractions(a, b)) CHECK(is_labeled_contraction(ca, cb, phi));
    }
  }
  auto labeled = binary_labeled_trees(3);
  for (const auto& a : labeled) {
    for (const auto& b : labeled) {
      if (b.size() > a.size()) continue;
      for (const auto& phi : planar_contractions(a, b)) {
        CHECK(is_labeled_contraction(a, b, phi) == oracle_labeled(a, b, phi));
      }
    }
  }
}

TEST_CASE("dual embeddings") {
  auto path = PlanarRootedTree::parse("(0 (1 (2)))");
  CHECK(dual_embedding(path, path, {0, 1, 2}) == TreeMap{0, 1, 2});
  // Contracting the lower edge 1-2 of the path: the embedding misses 2.
  auto path2 = PlanarRootedTree::parse("(0 (1))");
  CHECK(dual_embedding(path, path2, {0, 1, 1}) == TreeMap{0, 1});
  CHECK(dual_embedding(path, path2, {0, 0, 1}) == TreeMap{0, 2});
  auto cherry = PlanarRootedTree::parse("(0 (1) (2))");
  CHECK(dual_embedding(cherry, path2, {0, 1, 0}) == TreeMap{0, 1});

  // Exhaustive over trees with at most 6 edges.
  auto all = trees_up_to(6);
  std::size_t pairs = 0, related = 0;
  for (const auto& t : all) {
    for (const auto& t2 : all) {
      if (t2.size() > t.size()) continue;
      ++pairs;
      auto cs = planar_contractions(t, t2);
      auto es = order_embeddings(t2, t);
      REQUIRE((cs.empty() == es.empty()));
      related += !cs.empty();
      CHECK(cs.size() == es.size());
      std::set<TreeMap> duals;
      for (const auto& phi : cs) {
        auto iota = dual_embedding(t, t2, phi);
        CHECK(is_order_embedding(t2, t, iota));
        if (t.size() <= 5) CHECK(oracle_order_embedding(t2, t, iota));
        CHECK(contraction_from_embedding(t, t2, iota) == phi);
        duals.insert(iota);
      }
      CHECK(duals == std::set<TreeMap>(es.begin(), es.end()));
      for (const auto& iota : es) {
        auto phi = contraction_from_embedding(t, t2, iota);
        CHECK(is_planar_contraction(t, t2, phi));
        CHECK(dual_embedding(t, t2, phi) == iota);
      }
    }
  }
  CHECK(pairs > 10000);
  CHECK(related > 1000);

  // Backtracking embeddings against every raw map on small trees.
  for (const auto& t : trees_up_to(4)) {
    for (const auto& t2 : trees_up_to(4)) {
      if (t2.size() > t.size()) continue;
      std::set<TreeMap> expected;
      for (const auto& m : all_maps(t2.size(), t.size())) {
        CHECK(is_order_embedding(t2, t, m) == oracle_order_embedding(t2, t, m));
        if (oracle_order_embedding(t2, t, m)) expected.insert(m);
      }
      auto es = order_embeddings(t2, t);
      CHECK(std::set<TreeMap>(es.begin(), es.end()) == expected);
    }
  }
}

TEST_CASE("tree quasi-order") {
  auto labeled = binary_labeled_trees(3);
  std::vector<std::vector<bool>> leq(labeled.size(), std::vector<bool>(labeled.size()));
  for (std::size_t a = 0; a < labeled.size(); ++a) {
    for (std::size_t b = 0; b < labeled.size(); ++b) {
      leq[a][b] = tree_quasi_leq(labeled[a], labeled[b]);
      CHECK(leq[a][b] == oracle_quasi_leq(labeled[a], labeled[b]));
      auto w = labeled_contraction(labeled[b], labeled[a]);
      CHECK(w.has_value() == leq[a][b]);
      if (w) CHECK(oracle_labeled(labeled[b], labeled[a], *w));
      if (labeled[a].size() > labeled[b].size()) CHECK_FALSE(leq[a][b]);
    }
  }
  for (std::size_t a = 0; a < labeled.size(); ++a) {
    CHECK(leq[a][a]);
    for (std::size_t b = 0; b < labeled.size(); ++b) {
      if (leq[a][b] && leq[b][a] && labeled[a].size() == labeled[b].size()) CHECK(labeled[a] == labeled[b]);
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < labeled.size(); ++c) {
        if (leq[b][c]) CHECK(leq[a][c]);
      }
    }
  }
  // A single vertex sits below exactly the trees whose root carries its label.
  auto point = PlanarRootedTree::parse("(0:1)");
  for (const auto& b : labeled) CHECK(tree_quasi_leq(point, b) == (b.label(b.root()) == TreeLabel{1}));
  CHECK_THROWS_AS(tree_quasi_leq(point, PlanarRootedTree()), std::invalid_argument);

  // Composites of labeled contractions are labeled contractions.
  for (const auto& a : labeled) {
    if (a.size() < 3) continue;
    for (const auto& b : labeled) {
      if (b.size() >= a.size()) continue;
      for (const auto& phi : planar_contractions(a, b)) {
        if (!is_labeled_contraction(a, b, phi)) continue;
        for (const auto& c : labeled) {
          if (c.size() > b.size()) continue;
          for (const auto& psi : planar_contractions(b, c)) {
            if (!is_labeled_contraction(b, c, psi)) continue;
            CHECK(oracle_labeled(a, c, compose(psi, phi)));
          }
        }
      }
    }
  }
}

TEST_CASE("relative labeling") {
  auto t = PlanarRootedTree::parse("(0: (1:) (2: (3:)))");
  auto id = relative_labeling(t, t, {0, 1, 2, 3});
  for (std::size_t v = 0; v < 4; ++v) CHECK(id.label(v) == TreeLabel{static_cast<long>(v) + 1});
  auto path2 = PlanarRootedTree::parse("(0: (1:))");
  auto r = relative_labeling(t, path2, {0, 0, 1, 1});
  CHECK(r.label(0) == TreeLabel{1});
  CHECK(r.label(1) == TreeLabel{0});
  CHECK(r.label(2) == TreeLabel{2});
  CHECK(r.label(3) == TreeLabel{0});

  // ψ is U-labeled iff φ'' = φ' ∘ ψ, for every S-labeled ψ : T'' -> T'.
  auto run = [](const std::vector<PlanarRootedTree>& pool, const std::vector<PlanarRootedTree>& bases) {
    std::size_t checked = 0, agreeing = 0;
    for (const auto& base : bases) {
      std::vector<std::pair<const PlanarRootedTree*, TreeMap>> over;
      for (const auto& x : pool) {
        for (const auto& phi : planar_contractions(x, base)) {
          if (is_labeled_contraction(x, base, phi)) over.emplace_back(&x, phi);
        }
      }
      for (const auto& [t1, phi1] : over) {
        auto u1 = relative_labeling(*t1, base, phi1);
        for (const auto& x : u1.labels()) CHECK(x.size() == t1->label(0).size() + 1);
        for (std::size_t w = 0; w < t1->size(); ++w) {
          if (!is_phi_maximal(*t1, phi1, w)) CHECK(u1.label(w).back() == 0);
        }
        for (const auto& [t2, phi2] : over) {
          auto u2 = relative_labeling(*t2, base, phi2);
          for (const auto& psi : planar_contractions(*t2, *t1)) {
            if (!is_labeled_contraction(*t2, *t1, psi)) continue;
            bool u_labeled = oracle_labeled(u2, u1, psi);
            bool factors = compose(phi1, psi) == phi2;
            ++checked;
            agreeing += u_labeled == factors;
          }
        }
      }
    }
    CHECK(checked > 0);
    CHECK(agreeing == checked);
    return checked;
  };
  std::vector<PlanarRootedTree> plain;
  for (const auto& x : trees_up_to(5)) plain.push_back(constant_labels(x));
  std::vector<PlanarRootedTree> plain_bases;
  for (const auto& x : trees_up_to(2)) plain_bases.push_back(constant_labels(x));
  CHECK(run(plain, plain_bases) > 10000);
  auto labeled = binary_labeled_trees(3);
  std::vector<PlanarRootedTree> labeled_bases;
  for (const auto& x : binary_labeled_trees(1)) labeled_bases.push_back(x);
  CHECK(run(labeled, labeled_bases) > 1000);
}

TEST_CASE("rigidification labels") {
  auto tree = PlanarRootedTree::parse("(0 (1) (2))");
  auto r0 = RigidifiedGraph::from_tree(tree, {});
  auto l0 = rigidification_labels(r0);
  for (std::size_t v = 0; v < 3; ++v) CHECK(l0.label(v).empty());

  auto rose = RigidifiedGraph::from_tree(PlanarRootedTree(), {{0, 0}});
  CHECK(rigidification_labels(rose).label(0) == TreeLabel{1, 1});

  auto r = RigidifiedGraph::from_tree(PlanarRootedTree::parse("(0 (1 (2)) (3))"), {{2, 3}});
  CHECK(r.attachments() == std::vector<std::size_t>{2, 3});
  auto l = rigidification_labels(r);
  CHECK(l.label(0) == TreeLabel{1, 1});
  CHECK(l.label(1) == TreeLabel{1, 0});
  CHECK(l.label(2) == TreeLabel{1, 0});
  CHECK(l.label(3) == TreeLabel{0, 1});
  CHECK(r.graph->num_edges() == 4);
  CHECK(genus(*r.graph) == 1);

  auto g = std::make_shared<const MultiGraph>(MultiGraph(2, {{0, 1}, {0, 1}}));
  CHECK_THROWS_AS(RigidifiedGraph(g, PlanarRootedTree(0, {{1}, {}}), {PlanarRootedTree::npos, 0}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RigidifiedGraph(g, PlanarRootedTree(0, {{1}, {}}), {PlanarRootedTree::npos, 0}, {0}),
                  std::invalid_argument);
  CHECK_NOTHROW(RigidifiedGraph(g, PlanarRootedTree(0, {{1}, {}}), {PlanarRootedTree::npos, 1}, {0}));

  // Every rigidified graph of genus g is a plane tree plus ordered pairs.
  auto rigidified = [](std::size_t max_tree_edges, std::size_t g) {
    std::vector<RigidifiedGraph> out;
    for (const auto& t : trees_up_to(max_tree_edges)) {
      std::size_t n = t.size();
      std::size_t combos = 1;
      for (std::size_t i = 0; i < 2 * g; ++i) combos *= n;
      for (std::size_t c = 0; c < combos; ++c) {
        std::vector<std::pair<std::size_t, std::size_t>> extra;
        std::size_t x = c;
        for (std::size_t i = 0; i < g; ++i) {
          auto a = x % n;
          x /= n;
          auto b = x % n;
          x /= n;
          extra.emplace_back(a, b);
        }
        out.push_back(RigidifiedGraph::from_tree(t, extra));
      }
    }
    return out;
  };

  // Oracle for "induces": build the edge map by hand and let the graph-core
  // constructor decide.
  auto oracle_induces = [](const RigidifiedGraph& a, const RigidifiedGraph& b, const TreeMap& phi) {
    std::vector<EdgeImage> em(a.graph->num_edges());
    for (std::size_t e = 0; e < a.graph->num_edges(); ++e) {
      auto x = phi[a.graph->ends(e).u], y = phi[a.graph->ends(e).v];
      auto extra_pos = std::find(a.extra.begin(), a.extra.end(), e) - a.extra.begin();
      if (static_cast<std::size_t>(extra_pos) < a.extra.size()) {
        em[e] = EdgeImage::to(b.extra[extra_pos], false);
      } else if (x == y) {
        em[e] = EdgeImage::collapse();
      } else {
        auto child = b.tree.parent(x) == y ? x : y;
        auto f = b.tree_edge[child];
        em[e] = EdgeImage::to(f, b.graph->ends(f).u != x);
      }
    }
    try {
      Contraction c(a.graph, b.graph, phi, em);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };

  for (std::size_t g : {1, 2}) {
    auto pool = rigidified(g == 1 ? 4 : 2, g);
    std::size_t checked = 0, induced = 0;
    for (const auto& a : pool) {
      for (const auto& b : pool) {
        if (b.tree.size() > a.tree.size()) continue;
        for (const auto& phi : planar_contractions(a.tree, b.tree)) {
          auto check = extra_labels_check(a, b, phi);
          CHECK(check.agree());
          CHECK(check.induces == oracle_induces(a, b, phi));
          auto c = induced_rigid_contraction(a, b, phi);
          CHECK(c.has_value() == check.induces);
          if (c) CHECK(is_rigidified_contraction(a, b, *c));
          ++checked;
          induced += check.induces;
        }
      }
    }
    CHECK(checked > 1000);
    CHECK(induced > 100);
  }
}

TEST_CASE("factorization through the spanning-tree quotient") {
  auto r = RigidifiedGraph::from_tree(PlanarRootedTree::parse("(0 (1 (2)) (3))"), {{2, 3}, {1, 1}});
  SUBCASE("no tree edge contracted") {
    // Contract only the non-loop extra edge 2 -> 3.
    auto c = contract_edges(r.graph, {r.extra[0]});
    auto f = lemma_F_factor(r, c.map);
    CHECK(*f.middle.graph == *r.graph);
    CHECK(f.middle.tree == r.tree);
    CHECK(f.psi.is_identity());
    CHECK(f.tree_edges_contracted == 0);
    CHECK(compose(f.rest, f.psi) == c.map);
  }
  SUBCASE("every forest") {
    std::vector<RigidifiedGraph> pool = {
        r,
        RigidifiedGraph::from_tree(PlanarRootedTree::parse("(0 (1) (2) (3 (4)))"), {{4, 1}}),
        RigidifiedGraph::from_tree(PlanarRootedTree::parse("(0 (1 (2 (3))))"), {{3, 0}, {2, 1}, {0, 0}}),
    };
    std::size_t checked = 0;
    for (const auto& rg : pool) {
      std::size_t ne = rg.graph->num_edges();
      for (std::size_t mask = 0; mask < (std::size_t{1} << ne); ++mask) {
        std::vector<std::size_t> e;
        for (std::size_t k = 0; k < ne; ++k) {
          if ((mask >> k) & 1) e.push_back(k);
        }
        if (!is_forest(*rg.graph, e)) continue;
        auto c = contract_edges(rg.graph, e);
        auto f = lemma_F_factor(rg, c.map);
        std::size_t in_tree = 0;
        for (auto x : e) in_tree += rg.is_tree_edge(x);
        CHECK(f.tree_edges_contracted == in_tree);
        CHECK(f.middle.graph->num_edges() == ne - in_tree);
        CHECK(f.middle.graph->num_edges() <= c.graph->num_edges() + rg.genus());
        CHECK(compose(f.rest, f.psi) == c.map);
        CHECK(is_rigidified_contraction(rg, f.middle, f.psi));
        // rest contracts only extra edges of the middle graph
        for (auto x : f.rest.contracted_edges()) CHECK_FALSE(f.middle.is_tree_edge(x));
        ++checked;
      }
    }
    CHECK(checked > 30);
  }
  CHECK_THROWS_AS(lemma_F_factor(r, Contraction::identity(MultiGraph(1))), std::invalid_argument);
}

TEST_CASE("packaged exhaustive checks") {
  auto d = duality_check(4);
  CHECK(d.holds());
  CHECK(d.trees == 23);
  CHECK(d.contractions == d.embeddings);
  auto r = relative_labeling_check(3, 0);
  CHECK(r.holds());
  CHECK(r.checked > 100);
  auto rl = relative_labeling_check(2, 1);
  CHECK(rl.holds());
  CHECK(rl.checked > r.checked / 10);
}
