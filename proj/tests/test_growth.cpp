#include <doctest.h>

#include "gcat/corpus.hpp"
#include "gcat/enumerate.hpp"
#include "gcat/families.hpp"
#include "gcat/growth.hpp"
#include "gcat/isomorphism.hpp"
#include "gcat/matroid.hpp"
#include "gcat/swiatkowski.hpp"
#include "graph_oracles.hpp"

using namespace gcat;

namespace {

GrowthTable synthetic(const std::vector<std::size_t>& lo, const std::vector<std::size_t>& hi,
                      const std::function<long(const std::vector<std::size_t>&)>& f) {
  GrowthTable t;
  t.functional = "synthetic";
  t.lo = lo;
  t.hi = hi;
  std::vector<std::size_t> m = lo;
  while (true) {
    t.points.push_back(m);
    t.values.emplace_back(Integer(f(m)));
    std::size_t k = m.size();
    while (k > 0 && m[k - 1] == hi[k - 1]) {
      m[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
    ++m[k - 1];
  }
  return t;
}

std::vector<NamedGraph> corpus_of_genus(long g) {
  std::vector<NamedGraph> out;
  for (auto& e : acceptance_corpus()) {
    if (genus(e.graph) == g) out.push_back({e.id, e.graph});
  }
  return out;
}

}  // namespace

TEST_CASE("fit_polynomial") {
  SUBCASE("constant") {
    auto t = synthetic({1}, {6}, [](const auto&) { return 4L; });
    auto fit = fit_polynomial(t, 2);
    CHECK(fit.polynomial.total_degree() == 0);
    CHECK(fit.residuals.empty());
    CHECK(fit.threshold == std::vector<std::size_t>{1});
    CHECK(fit.confirmed());
  }
  SUBCASE("recovers a bivariate polynomial") {
    auto f = [](const std::vector<std::size_t>& m) {
      long a = static_cast<long>(m[0]), b = static_cast<long>(m[1]);
      return 3 * a * a * b - a + 7;
    };
    auto fit = fit_polynomial(synthetic({0, 0}, {6, 6}, f), 3);
    CHECK(fit.polynomial.total_degree() == 3);
    CHECK(fit.residuals.empty());
    CHECK(fit.polynomial.terms.size() == 3);
    CHECK(fit.polynomial.terms.at({2, 1}) == 3);
    CHECK(fit.polynomial.terms.at({1, 0}) == -1);
    CHECK(fit.polynomial.terms.at({0, 0}) == 7);
  }
  SUBCASE("eventual polynomial threshold") {
    // Matches m(m-3)/2 only from m = 3 on.
    auto t = synthetic({0}, {10}, [](const auto& m) {
      long x = static_cast<long>(m[0]);
      return x < 3 ? 100 : x * (x - 3) / 2;
    });
    auto fit = fit_polynomial(t, 2);
    CHECK(fit.threshold == std::vector<std::size_t>{3});
    CHECK(fit.residuals.size() == 3);
    auto c = fit.polynomial.univariate();
    REQUIRE(c.size() == 3);
    CHECK(c[0] == 0);
    CHECK(c[1] == mpq_class(-3, 2));
    CHECK(c[2] == mpq_class(1, 2));
  }
  SUBCASE("grid too small") {
    auto t = synthetic({0}, {2}, [](const auto& m) { return static_cast<long>(m[0]); });
    CHECK_THROWS_AS(fit_polynomial(t, 3), std::invalid_argument);
  }
}

TEST_CASE("dimension_table") {
  SUBCASE("cycle c_1 from subdividing the loop") {
    auto fam = Family::subdivision(rose_graph(1), {{0, false}});
    auto t = dimension_table(Functional::kl_coefficient(1), fam, {3}, {10}, 3);
    for (std::size_t k = 0; k < t.points.size(); ++k) {
      long n = static_cast<long>(t.points[k][0]);
      REQUIRE(t.values[k].has_value());
      CHECK(*t.values[k] == Integer(n * (n - 3) / 2));
    }
    auto fit = fit_polynomial(t, 2);
    CHECK(fit.residuals.empty());
    CHECK(fit.polynomial.total_degree() == 2);
    CHECK(fit.polynomial.evaluate({11}) == 44);
  }
  SUBCASE("absent cells") {
    auto fam = Family::subdivision(rose_graph(1), {{0, false}});
    auto t = dimension_table(Functional::kl_coefficient(1), fam, {1}, {3});
    CHECK_FALSE(t.values[0].has_value());  // a single loop
    CHECK(t.values[2].has_value());
  }
  SUBCASE("betti rows are constant under subdivision") {
    auto fam = Family::subdivision(complete_graph(4), {{0, false}});
    auto t = dimension_table(Functional::betti(1, 2), fam, {1}, {4}, 2);
    for (const auto& v : t.values) CHECK(*v == *t.values[0]);
  }
  SUBCASE("agrees with direct calls, any worker count") {
    auto fam = Family::sprouting(star_graph(3), {0});
    auto one = dimension_table(Functional::betti(1, 2), fam, {1}, {6}, 1);
    auto many = dimension_table(Functional::betti(1, 2), fam, {1}, {6}, 4);
    CHECK(one.values == many.values);
    for (std::size_t k = 0; k < one.points.size(); ++k) {
      auto g = *fam.member(one.points[k]);
      CHECK(*one.values[k] == Integer(static_cast<long>(uconf_homology(g, 1, 2).betti)));
      // Sprouting the center of a 3-star gives a (3+m)-star: C(m+2, 2) cycles.
      long m = static_cast<long>(one.points[k][0]);
      CHECK(*one.values[k] == Integer((m + 2) * (m + 1) / 2));
      if (k > 0) CHECK(*one.values[k - 1] < *one.values[k]);
    }
    auto fit = fit_polynomial(one, 3);
    CHECK(fit.polynomial.total_degree() == 2);
  }
  SUBCASE("os and hom functionals") {
    auto fam = Family::subdivision(cycle_graph(2), {{0, false}});
    // m = 1 is a parallel pair with a single OS generator.
    auto os = dimension_table(Functional::os_dimension(1), fam, {2}, {5});
    for (std::size_t k = 0; k < os.points.size(); ++k) CHECK(*os.values[k] == Integer(static_cast<long>(os.points[k][0] + 1)));
    auto hom = dimension_table(Functional::hom_count(cycle_graph(2)), fam, {1}, {5});
    for (std::size_t k = 0; k < hom.points.size(); ++k) {
      CHECK(*hom.values[k] == Integer(static_cast<long>(count_contractions(*fam.member(hom.points[k]), cycle_graph(2)))));
    }
  }
  SUBCASE("theta c_1 closed form") {
    auto fam = Family::subdivision(theta_graph({1, 1, 1}), {{0, false}, {1, false}, {2, false}});
    auto t = dimension_table(Functional::kl_coefficient(1), fam, {2, 2, 2}, {5, 5, 5}, 4);
    auto fit = fit_polynomial(t, 3);
    CHECK(fit.residuals.empty());
    CHECK(fit.polynomial.total_degree() == 3);
    // a1 a2 a3 + Σ C(a_i, 2) - Σ a_i = a1a2a3 + Σ a_i^2/2 - 3/2 Σ a_i.
    CHECK(fit.polynomial.terms.at({1, 1, 1}) == 1);
    CHECK(fit.polynomial.terms.at({2, 0, 0}) == mpq_class(1, 2));
    CHECK(fit.polynomial.terms.at({0, 0, 1}) == mpq_class(-3, 2));
    CHECK(fit.polynomial.terms.size() == 7);
  }
}

TEST_CASE("check_generation_E") {
  auto trees = corpus_of_genus(0);
  auto r = check_generation_E(1, trees);
  CHECK(r.violations.empty());
  CHECK(r.graphs_checked > 10);
  for (long g = 1; g <= 2; ++g) {
    for (std::size_t i = 1; i <= 3; ++i) CHECK(check_generation_E(i, corpus_of_genus(g)).violations.empty());
  }
  // g loops plus a bridge: every tuple covering the bridge is stuck, but |G| = g + 1 <= g + i.
  MultiGraph lollipop(2);
  lollipop.add_edge(0, 1);
  lollipop.add_edge(1, 1);
  lollipop.add_edge(1, 1);
  auto x = check_generation_E(2, {{"lollipop", lollipop}});
  CHECK(x.graphs_checked == 0);
  CHECK(x.excluded == std::vector<std::string>{"lollipop"});
  CHECK_FALSE(x.excluded_violations.empty());
}

TEST_CASE("principal_projective_growth") {
  auto r = principal_projective_growth(rose_graph(2), {{"melon", melon_graph()}});
  REQUIRE(r.rows.size() == 1);
  CHECK(r.automorphisms == 8);
  CHECK(r.rows[0].morphisms == 24);
  CHECK(r.rows[0].bound == Integer(24));
  CHECK(r.all_hold());

  std::vector<NamedGraph> paths;
  for (std::size_t n = 2; n <= 6; ++n) paths.push_back({"path-" + std::to_string(n), path_graph(n)});
  auto p = principal_projective_growth(path_graph(2), paths);
  for (std::size_t k = 0; k < p.rows.size(); ++k) {
    CHECK(p.rows[k].morphisms == testing::brute_force_contractions(paths[k].graph, path_graph(2)));
  }
  CHECK(p.all_hold());
  for (long g = 0; g <= 2; ++g) {
    auto corpus = corpus_of_genus(g);
    for (const auto& target : corpus) {
      if (target.graph.num_edges() > 4) continue;
      CHECK(principal_projective_growth(target.graph, corpus).all_hold());
    }
  }
}

TEST_CASE("factors_nontrivially") {
  auto fam = Family::subdivision(theta_graph({1, 1, 2}), {{0, false}});
  SUBCASE("identity does not factor") {
    auto g = fam.member({3});
    CHECK_FALSE(factors_nontrivially(Contraction::identity(g), fam, {3}));
  }
  SUBCASE("contracting a family edge factors") {
    auto src = fam.member({3});
    auto phi = fam.structure_map({1}, {3}, {{2}});
    auto fac = nontrivial_factor(phi, fam, {3});
    REQUIRE(fac.has_value());
    CHECK(compose(fac->psi, fam.structure_map(fac->m, {3}, fac->f)) == phi);
  }
  SUBCASE("contraction of non-family edges only") {
    auto src = fam.member({3});
    // Base edge 2 is half of the length-2 path, untouched by the family.
    auto sub = subdivide(theta_graph({1, 1, 2}), {{0, false}}, {3});
    auto c = contract_edges(src, {sub.base_edge[2]});
    CHECK_FALSE(factors_nontrivially(c.map, fam, {3}));
  }
  SUBCASE("forced once the family edges outnumber the rest") {
    // Every contraction onto the base theta with |n| large must hit a path edge.
    auto target = theta_graph({1, 1, 2});
    for (std::size_t n = 1; n <= 5; ++n) {
      auto all = enumerate_contractions(*fam.member({n}), target);
      std::size_t factoring = 0;
      for (const auto& phi : all) factoring += factors_nontrivially(phi, fam, {n});
      if (n >= 3) CHECK(factoring == all.size());
      if (n == 1) CHECK(factoring == 0);
    }
  }
  SUBCASE("monotone along the canonical family") {
    auto fam2 = Family::subdivision(cycle_graph(3), {{0, false}, {1, true}});
    bool seen = false;
    for (std::size_t a = 1; a <= 4; ++a) {
      for (std::size_t b = 1; b <= 4; ++b) {
        auto phi = fam2.structure_map({1, 1}, {a, b}, {{1}, {1}});
        bool f = factors_nontrivially(phi, fam2, {a, b});
        CHECK(f == (a > 1 || b > 1));
        seen = seen || f;
      }
    }
    CHECK(seen);
  }
  SUBCASE("sprouting") {
    auto spr = Family::sprouting(star_graph(3), {0});
    CHECK_FALSE(factors_nontrivially(Contraction::identity(spr.member({2})), spr, {2}));
    auto phi = spr.structure_map({1}, {3}, {{2}});
    CHECK(factors_nontrivially(phi, spr, {3}));
  }
}
