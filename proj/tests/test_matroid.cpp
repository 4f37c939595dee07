#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "gcat/families.hpp"
#include "gcat/matroid.hpp"
#include "graph_oracles.hpp"

using namespace gcat;

namespace {

using Mask = std::uint64_t;

std::size_t rank_of(const MultiGraph& g, Mask s) {
  std::vector<std::size_t> p(g.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return p[x] == x ? x : p[x] = find(p[x]); };
  std::size_t r = 0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (!((s >> e) & 1)) continue;
    auto a = find(g.ends(e).u), b = find(g.ends(e).v);
    if (a != b) {
      p[a] = b;
      ++r;
    }
  }
  return r;
}

// Closed sets: adding any outside edge raises the rank.
std::vector<Mask> brute_force_flats(const MultiGraph& g) {
  std::vector<Mask> out;
  Mask full = (Mask{1} << g.num_edges()) - 1;
  for (Mask s = 0; s <= full; ++s) {
    std::size_t r = rank_of(g, s);
    bool closed = true;
    for (std::size_t e = 0; e < g.num_edges() && closed; ++e) {
      if (!((s >> e) & 1) && rank_of(g, s | (Mask{1} << e)) == r) closed = false;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

// Chromatic polynomial by deletion-contraction on a raw edge list.
IntPolynomial chromatic(std::size_t nv, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  if (edges.empty()) return IntPolynomial::monomial(1, nv);
  auto [u, v] = edges.back();
  edges.pop_back();
  if (u == v) return {};
  auto deleted = chromatic(nv, edges);
  // Merge v into u and renumber the last vertex into v's slot.
  for (auto& [a, b] : edges) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a == nv - 1) a = v;
    if (b == nv - 1) b = v;
  }
  return deleted - chromatic(nv - 1, edges);
}

IntPolynomial chromatic(const MultiGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(u, v);
  return chromatic(g.num_vertices(), edges);
}

Integer count_colorings(const MultiGraph& g, std::size_t t) {
  std::vector<std::size_t> c(g.num_vertices(), 0);
  long count = 0;
  while (true) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) ok = ok && c[u] != c[v];
    count += ok;
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == t) c[k++] = 0;
    if (k == c.size()) break;
  }
  return Integer(count);
}

// Independent sets containing no circuit minus its least edge.
std::vector<Integer> nbc_counts(const MultiGraph& g) {
  std::size_t ne = g.num_edges();
  Mask full = (Mask{1} << ne) - 1;
  std::vector<Mask> broken;
  for (Mask s = 1; s <= full; ++s) {
    std::size_t k = std::popcount(s);
    if (rank_of(g, s) != k - 1) continue;
    bool minimal = true;
    for (std::size_t e = 0; e < ne && minimal; ++e) {
      if ((s >> e) & 1) minimal = rank_of(g, s & ~(Mask{1} << e)) == k - 1;
    }
    if (minimal) broken.push_back(s & (s - 1));  // drop the least edge
  }
  std::vector<Integer> counts(g.num_vertices(), Integer(0));
  for (Mask s = 0; s <= full; ++s) {
    std::size_t k = std::popcount(s);
    if (rank_of(g, s) != k) continue;
    bool ok = std::none_of(broken.begin(), broken.end(), [&](Mask b) { return (s & b) == b; });
    if (ok) counts[k] += Integer(1);
  }
  return counts;
}

// KL polynomial straight from the defining recursion on the brute-force lattice.
IntPolynomial lattice_kl(const MultiGraph& g) {
  auto lattice = brute_force_flats(g);
  std::map<Mask, std::size_t> rank;
  for (auto f : lattice) rank[f] = rank_of(g, f);
  auto below = [](Mask a, Mask b) { return (a & b) == a; };
  // μ(a, b) over the interval [a, b].
  std::map<std::pair<Mask, Mask>, Integer> mu_cache;
  std::function<Integer(Mask, Mask)> mu = [&](Mask a, Mask b) -> Integer {
    if (a == b) return Integer(1);
    auto key = std::pair{a, b};
    if (auto it = mu_cache.find(key); it != mu_cache.end()) return it->second;
    Integer s(0);
    for (auto c : lattice) {
      if (c != b && below(a, c) && below(c, b)) s -= mu(a, c);
    }
    return mu_cache[key] = s;
  };
  auto chi = [&](Mask a, Mask b) {
    IntPolynomial p;
    for (auto c : lattice) {
      if (below(a, c) && below(c, b)) p += IntPolynomial::monomial(mu(a, c), rank[b] - rank[c]);
    }
    return p;
  };
  Mask top = lattice.back();
  std::map<Mask, IntPolynomial> memo;
  std::function<IntPolynomial(Mask)> kl = [&](Mask a) -> IntPolynomial {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::size_t r = rank[top] - rank[a];
    if (r == 0) return memo[a] = IntPolynomial(1);
    IntPolynomial rhs;
    for (auto c : lattice) {
      if (c != a && below(a, c)) rhs += chi(a, c) * kl(c);
    }
    std::vector<Integer> low;
    for (std::size_t k = 0; 2 * k < r; ++k) low.push_back(-rhs[k]);
    return memo[a] = IntPolynomial(low);
  };
  return kl(lattice.front());
}

std::vector<MultiGraph> test_graphs() {
  return {cycle_graph(3),  cycle_graph(5),          path_graph(4),           star_graph(3),
          melon_graph(),   complete_graph(4),       theta_graph({2, 2, 2}),  theta_graph({1, 2, 3}),
          rose_graph(2),   complete_bipartite_graph(2, 3), theta_graph({1, 1, 3, 2})};
}

Integer binom(long n, long k) { return (n < 0 || k < 0 || k > n) ? Integer(0) : binomial(n, k); }

}  // namespace

TEST_CASE("flats") {
  CHECK(flats(cycle_graph(3)).size() == 5);
  CHECK(flats(rose_graph(2)).size() == 1);
  for (std::size_t k = 0; k <= 5; ++k) {
    for (const auto& t : trees_with_edges(k)) CHECK(flats(t).size() == (std::size_t{1} << k));
  }
  for (const auto& g : test_graphs()) {
    auto fs = flats(g);
    std::vector<Mask> masks;
    for (const auto& f : fs) masks.push_back(f.edges);
    std::sort(masks.begin(), masks.end());
    CHECK(masks == brute_force_flats(g));
    std::set<Mask> set(masks.begin(), masks.end());
    for (const auto& f : fs) {
      CHECK(f.rank == rank_of(g, f.edges));
      CHECK(f.rank + f.num_blocks == g.num_vertices());
      CHECK(f.corank + 1 == f.num_blocks);
      for (const auto& h : fs) CHECK(set.count(f.edges & h.edges) == 1);
    }
  }
  CHECK_THROWS_AS(flats(MultiGraph(2)), std::invalid_argument);
}

TEST_CASE("characteristic polynomial") {
  CHECK(characteristic_polynomial(cycle_graph(3)) == IntPolynomial({2, -3, 1}));
  for (std::size_t k = 1; k <= 4; ++k) {
    IntPolynomial expect(1);
    for (std::size_t j = 0; j < k; ++j) expect = expect * IntPolynomial({-1, 1});
    CHECK(characteristic_polynomial(path_graph(k)) == expect);
  }
  CHECK(characteristic_polynomial(rose_graph(1)).is_zero());
  CHECK(characteristic_polynomial(theta_graph({1, 1})) == IntPolynomial({-1, 1}));
  for (const auto& g : test_graphs()) {
    auto chi = characteristic_polynomial(g);
    CHECK(chi * IntPolynomial({0, 1}) == chromatic(g));
    for (std::size_t t = 1; t <= 4; ++t) {
      CHECK(chi.evaluate(Integer(static_cast<long>(t))) * Integer(static_cast<long>(t)) == count_colorings(g, t));
    }
  }
}

TEST_CASE("os_dimension") {
  CHECK(os_dimension(cycle_graph(3), 0) == Integer(1));
  CHECK(os_dimension(cycle_graph(3), 1) == Integer(3));
  CHECK(os_dimension(cycle_graph(3), 2) == Integer(2));
  CHECK(os_dimension(melon_graph(), 1) == Integer(1));
  CHECK(os_dimension(rose_graph(1), 1) == Integer(0));
  CHECK(os_dimension(rose_graph(1), 0) == Integer(1));
  for (const auto& g : test_graphs()) {
    auto expect = nbc_counts(g);
    if (g.has_loop()) continue;
    for (std::size_t i = 0; i < expect.size(); ++i) CHECK(os_dimension(g, i) == expect[i]);
    CHECK(os_dimension(g, g.num_vertices()) == Integer(0));
  }
}

TEST_CASE("kl_polynomial") {
  SUBCASE("trees and small ranks are trivial") {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (const auto& t : trees_with_edges(k)) CHECK(kl_polynomial(t) == IntPolynomial(1));
    }
    CHECK(kl_polynomial(melon_graph()) == IntPolynomial(1));
    CHECK(kl_polynomial(cycle_graph(3)) == IntPolynomial(1));
  }
  SUBCASE("agrees with the lattice recursion") {
    for (const auto& g : test_graphs()) {
      if (g.has_loop()) continue;
      CHECK(kl_polynomial(g) == lattice_kl(g));
    }
    CHECK(kl_polynomial(complete_graph(5)) == lattice_kl(complete_graph(5)));
  }
  SUBCASE("cycle closed form") {
    for (long n = 4; n <= 12; ++n) {
      auto p = kl_polynomial(cycle_graph(static_cast<std::size_t>(n)));
      for (long i = 0; i <= 3; ++i) {
        Integer expect = divexact(binom(n - i - 2, i) * binom(n, i), Integer(i + 1));
        if (i == 0) expect = Integer(1);
        CHECK(p[static_cast<std::size_t>(i)] == expect);
      }
    }
    CHECK(kl_polynomial(cycle_graph(5))[1] == Integer(5));
  }
  SUBCASE("degree bound and constant term") {
    for (const auto& g : test_graphs()) {
      if (g.has_loop()) continue;
      auto p = kl_polynomial(g);
      long r = static_cast<long>(g.num_vertices()) - 1;
      CHECK(p[0] == Integer(1));
      CHECK(2 * p.degree() < std::max(r, 1L));
    }
  }
  SUBCASE("isomorphism invariance and thread safety") {
    std::mt19937_64 rng(7);
    auto g = theta_graph({2, 3, 2});
    auto expect = kl_polynomial(g);
    std::vector<IntPolynomial> got(6);
    std::vector<std::thread> threads;
    for (std::size_t k = 0; k < got.size(); ++k) {
      auto h = testing::scramble(rng, g);
      threads.emplace_back([&got, k, h] { got[k] = kl_polynomial(h); });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : got) CHECK(p == expect);
  }
  SUBCASE("loops rejected") { CHECK_THROWS_AS(kl_polynomial(rose_graph(1)), std::invalid_argument); }
}

TEST_CASE("first_kl_coefficient") {
  CHECK(first_kl_coefficient(cycle_graph(5)) == Integer(5));
  CHECK(first_kl_coefficient(theta_graph({2, 2, 2})) == Integer(5));
  CHECK(first_kl_coefficient(complete_graph(4)) == Integer(1));
  CHECK(first_kl_coefficient(complete_graph(5)) == Integer(5));
  CHECK_THROWS_AS(first_kl_coefficient(cycle_graph(3)), std::invalid_argument);
  CHECK_THROWS_AS(first_kl_coefficient(theta_graph({1, 1, 2})), std::invalid_argument);
  for (const auto& g : test_graphs()) {
    if (g.has_loop() || g.num_vertices() < 4) continue;
    CHECK(first_kl_coefficient(g) == kl_polynomial(g)[1]);
  }
  // Theta closed form for all a_i >= 2.
  for (std::vector<std::size_t> a : {std::vector<std::size_t>{2, 2, 2}, {2, 3, 4}, {3, 3, 3}, {2, 2, 2, 2}, {2, 3, 3, 4}}) {
    Integer prod(1), pairs(0), sum(0);
    for (auto x : a) {
      prod *= Integer(static_cast<long>(x));
      pairs += binomial(static_cast<long>(x), 2);
      sum += Integer(static_cast<long>(x));
    }
    CHECK(first_kl_coefficient(theta_graph(a)) == prod + pairs - sum);
  }
}
