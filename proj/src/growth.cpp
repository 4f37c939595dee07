#include "gcat/growth.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gcat/enumerate.hpp"
#include "gcat/isomorphism.hpp"
#include "gcat/matroid.hpp"
#include "gcat/swiatkowski.hpp"

namespace gcat {

namespace {

using Exponent = std::vector<std::size_t>;
using Terms = std::map<Exponent, mpq_class>;

/// All k in N^r with |k| <= cap.
std::vector<Exponent> simplex(std::size_t r, std::size_t cap) {
  std::vector<Exponent> out;
  Exponent k(r, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t j, std::size_t left) {
    if (j == r) {
      out.push_back(k);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      k[j] = x;
      rec(j + 1, left - x);
    }
    k[j] = 0;
  };
  rec(0, cap);
  return out;
}

/// Points l <= k componentwise.
std::vector<Exponent> below(const Exponent& k) {
  std::vector<Exponent> out{Exponent(k.size(), 0)};
  for (std::size_t j = 0; j < k.size(); ++j) {
    std::vector<Exponent> next;
    for (const auto& p : out) {
      for (std::size_t x = 0; x <= k[j]; ++x) {
        auto q = p;
        q[j] = x;
        next.push_back(q);
      }
    }
    out = std::move(next);
  }
  return out;
}

mpq_class mpq_of(const Integer& x) { return mpq_class(x.to_mpz()); }

/// C(hi - m, k) as a polynomial in m, low to high.
std::vector<mpq_class> shifted_binomial(std::size_t hi, std::size_t k) {
  std::vector<mpq_class> p{1};
  for (std::size_t t = 0; t < k; ++t) {
    // multiply by (hi - t - m) / (t + 1)
    mpq_class c(static_cast<long>(hi) - static_cast<long>(t), static_cast<long>(t + 1));
    c.canonicalize();
    mpq_class d(-1, static_cast<long>(t + 1));
    d.canonicalize();
    std::vector<mpq_class> q(p.size() + 1, mpq_class(0));
    for (std::size_t a = 0; a < p.size(); ++a) {
      q[a] += p[a] * c;
      q[a + 1] += p[a] * d;
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

Functional Functional::hom_count(MultiGraph target) {
  return {FunctionalKind::HomCount, 0, 0, std::make_shared<const MultiGraph>(std::move(target))};
}

std::string Functional::name() const {
  switch (kind) {
    case FunctionalKind::Betti:
      return "betti(" + std::to_string(i) + "," + std::to_string(n) + ")";
    case FunctionalKind::KlCoefficient:
      return "kl coefficient c_" + std::to_string(i);
    case FunctionalKind::OsDimension:
      return "os dimension " + std::to_string(i);
    case FunctionalKind::HomCount:
      return "hom count to " + describe(*hom_target);
  }
  return {};
}

std::optional<Integer> Functional::evaluate(const MultiGraph& g) const {
  switch (kind) {
    case FunctionalKind::Betti:
      if (g.num_edges() == 0) return std::nullopt;
      return Integer(static_cast<std::int64_t>(uconf_homology(g, i, n).betti));
    case FunctionalKind::KlCoefficient:
      if (g.has_loop()) return std::nullopt;
      if (i == 1 && g.num_vertices() >= 4) return first_kl_coefficient(g);
      return kl_polynomial(g)[i];
    case FunctionalKind::OsDimension:
      return gcat::os_dimension(g, i);
    case FunctionalKind::HomCount:
      return Integer(static_cast<std::int64_t>(count_contractions(g, *hom_target)));
  }
  return std::nullopt;
}

Family Family::subdivision(MultiGraph g, std::vector<DirectedEdge> sites) {
  Family f;
  f.kind = Kind::Subdivide;
  f.base = std::make_shared<const MultiGraph>(std::move(g));
  f.edges = std::move(sites);
  return f;
}

Family Family::sprouting(MultiGraph g, std::vector<std::size_t> sites) {
  Family f;
  f.kind = Kind::Sprout;
  f.base = std::make_shared<const MultiGraph>(std::move(g));
  f.vertices = std::move(sites);
  return f;
}

std::shared_ptr<const MultiGraph> Family::member(const std::vector<std::size_t>& m) const {
  if (kind == Kind::Subdivide) return subdivide(*base, edges, m).graph;
  return sprout(*base, vertices, m).graph;
}

Contraction Family::structure_map(const std::vector<std::size_t>& m, const std::vector<std::size_t>& n,
                                  const std::vector<OrderedInjection>& f) const {
  if (kind == Kind::Subdivide) return subdivision_map(subdivide(*base, edges, n), subdivide(*base, edges, m), f);
  return sprout_map(sprout(*base, vertices, n), sprout(*base, vertices, m), f);
}

std::optional<std::size_t> GrowthTable::index_of(const std::vector<std::size_t>& m) const {
  if (m.size() != lo.size()) return std::nullopt;
  std::size_t idx = 0;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] < lo[j] || m[j] > hi[j]) return std::nullopt;
    idx = idx * (hi[j] - lo[j] + 1) + (m[j] - lo[j]);
  }
  return idx;
}

GrowthTable dimension_table(const Functional& f, const Family& family, const std::vector<std::size_t>& lo,
                            const std::vector<std::size_t>& hi, std::size_t workers) {
  if (lo.size() != family.arity() || hi.size() != family.arity()) {
    throw std::invalid_argument("dimension_table: grid arity does not match the number of sites");
  }
  for (std::size_t j = 0; j < lo.size(); ++j) {
    if (lo[j] > hi[j]) throw std::invalid_argument("dimension_table: empty range");
  }
  GrowthTable t;
  t.functional = f.name();
  t.lo = lo;
  t.hi = hi;
  std::vector<std::size_t> m = lo;
  while (true) {
    t.points.push_back(m);
    std::size_t k = m.size();
    while (k > 0 && m[k - 1] == hi[k - 1]) {
      m[k - 1] = lo[k - 1];
      --k;
    }
    if (k == 0) break;
    ++m[k - 1];
  }
  t.values.assign(t.points.size(), std::nullopt);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (std::size_t k = next++; k < t.points.size(); k = next++) {
      try {
        t.values[k] = f.evaluate(*family.member(t.points[k]));
      } catch (const std::invalid_argument&) {
        t.values[k] = std::nullopt;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::size_t threads = std::max<std::size_t>(1, std::min(workers, t.points.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < threads; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return t;
}

long RationalPolynomial::total_degree() const {
  long d = -1;
  for (const auto& [k, c] : terms) {
    long s = 0;
    for (auto x : k) s += static_cast<long>(x);
    d = std::max(d, s);
  }
  return d;
}

mpq_class RationalPolynomial::evaluate(const std::vector<std::size_t>& m) const {
  mpq_class acc(0);
  for (const auto& [k, c] : terms) {
    mpq_class term = c;
    for (std::size_t j = 0; j < k.size(); ++j) {
      for (std::size_t p = 0; p < k[j]; ++p) term *= static_cast<long>(m[j]);
    }
    acc += term;
  }
  return acc;
}

std::vector<mpq_class> RationalPolynomial::univariate() const {
  if (vars != 1) throw std::invalid_argument("RationalPolynomial::univariate: more than one variable");
  std::vector<mpq_class> out(static_cast<std::size_t>(std::max(total_degree(), -1L) + 1), mpq_class(0));
  for (const auto& [k, c] : terms) out[k[0]] = c;
  return out;
}

std::string RationalPolynomial::str(const std::vector<std::string>& names) const {
  if (terms.empty()) return "0";
  std::string s;
  // Highest total degree first.
  std::vector<std::pair<Exponent, mpq_class>> sorted(terms.begin(), terms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    std::size_t da = 0, db = 0;
    for (auto x : a.first) da += x;
    for (auto x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [k, c] : sorted) {
    mpq_class a = abs(c);
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    std::string mono;
    for (std::size_t j = 0; j < k.size(); ++j) {
      if (k[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += j < names.size() ? names[j] : "m" + std::to_string(j + 1);
      if (k[j] > 1) mono += "^" + std::to_string(k[j]);
    }
    if (mono.empty()) {
      s += a.get_str();
    } else {
      if (a != 1) s += a.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

FitReport fit_polynomial(const GrowthTable& table, std::size_t degree_cap) {
  std::size_t r = table.arity();
  for (std::size_t j = 0; j < r; ++j) {
    if (table.hi[j] - table.lo[j] < degree_cap) {
      throw std::invalid_argument("fit_polynomial: grid too small for degree cap " + std::to_string(degree_cap) +
                                  " in coordinate " + std::to_string(j + 1));
    }
  }
  auto value_at_offset = [&](const Exponent& l) -> mpq_class {
    std::vector<std::size_t> m(r);
    for (std::size_t j = 0; j < r; ++j) m[j] = table.hi[j] - l[j];
    auto idx = table.index_of(m);
    if (!idx || !table.values[*idx]) throw std::invalid_argument("fit_polynomial: absent cell in the top corner");
    return mpq_of(*table.values[*idx]);
  };

  // Newton form in s = hi - m: Σ_k Δ^k g(0) Π_j C(s_j, k_j).
  auto support = simplex(r, degree_cap);
  Terms poly;
  for (const auto& k : support) {
    mpq_class diff(0);
    std::size_t total_k = 0;
    for (auto x : k) total_k += x;
    for (const auto& l : below(k)) {
      mpz_class c = 1;
      std::size_t total_l = 0;
      for (std::size_t j = 0; j < r; ++j) {
        c *= binomial(static_cast<std::int64_t>(k[j]), static_cast<std::int64_t>(l[j])).to_mpz();
        total_l += l[j];
      }
      mpq_class term = value_at_offset(l) * mpq_class(c);
      diff += ((total_k - total_l) % 2 ? -term : term);
    }
    if (diff == 0) continue;
    Terms product{{Exponent(r, 0), diff}};
    for (std::size_t j = 0; j < r; ++j) {
      auto b = shifted_binomial(table.hi[j], k[j]);
      Terms next;
      for (const auto& [e, c] : product) {
        for (std::size_t p = 0; p < b.size(); ++p) {
          if (b[p] == 0) continue;
          auto e2 = e;
          e2[j] += p;
          next[e2] += c * b[p];
        }
      }
      product = std::move(next);
    }
    for (const auto& [e, c] : product) poly[e] += c;
  }
  FitReport report;
  report.degree_cap = degree_cap;
  report.polynomial.vars = r;
  for (const auto& [e, c] : poly) {
    if (c != 0) report.polynomial.terms.emplace(e, c);
  }
  report.support_cells = support.size();

  std::vector<char> good(table.points.size(), 0);
  for (std::size_t k = 0; k < table.points.size(); ++k) {
    if (!table.values[k]) {
      report.residuals.emplace_back(table.points[k], std::nullopt);
      continue;
    }
    mpq_class res = mpq_of(*table.values[k]) - report.polynomial.evaluate(table.points[k]);
    if (res == 0) {
      good[k] = 1;
    } else {
      report.residuals.emplace_back(table.points[k], res);
    }
  }
  // Largest box [t, hi] of good cells; ties go to the earliest corner in grid order.
  report.threshold = table.hi;
  for (std::size_t c = 0; c < table.points.size(); ++c) {
    const auto& t = table.points[c];
    std::size_t cells = 1;
    for (std::size_t j = 0; j < r; ++j) cells *= table.hi[j] - t[j] + 1;
    if (cells <= report.threshold_cells) continue;
    bool ok = true;
    for (std::size_t k = 0; k < table.points.size() && ok; ++k) {
      bool inside = true;
      for (std::size_t j = 0; j < r; ++j) inside = inside && table.points[k][j] >= t[j];
      if (inside && !good[k]) ok = false;
    }
    if (ok) {
      report.threshold = t;
      report.threshold_cells = cells;
    }
  }
  return report;
}

GenerationReport check_generation_E(std::size_t i, const std::vector<NamedGraph>& corpus) {
  GenerationReport report;
  report.i = i;
  for (const auto& [id, g] : corpus) {
    long gen = genus(g);
    std::size_t ne = g.num_edges();
    bool in_claim = static_cast<long>(ne) > gen + static_cast<long>(i);
    if (in_claim) {
      ++report.graphs_checked;
    } else {
      report.excluded.push_back(id);
    }
    std::size_t nonloops = 0;
    for (std::size_t e = 0; e < ne; ++e) nonloops += !g.is_loop(e);
    if (ne == 0) continue;
    std::vector<std::size_t> tuple(i, 0);
    while (true) {
      std::set<std::size_t> covered;
      for (auto e : tuple) {
        if (!g.is_loop(e)) covered.insert(e);
      }
      if (in_claim) ++report.tuples_checked;
      if (covered.size() == nonloops) {
        (in_claim ? report.violations : report.excluded_violations).push_back({id, tuple});
      }
      std::size_t k = i;
      while (k > 0 && tuple[k - 1] == ne - 1) {
        tuple[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
      ++tuple[k - 1];
    }
  }
  return report;
}

bool GrowthReport::all_hold() const {
  return std::all_of(rows.begin(), rows.end(), [](const GrowthRow& r) { return r.holds; });
}

GrowthReport principal_projective_growth(const MultiGraph& g2, const std::vector<NamedGraph>& corpus) {
  GrowthReport report;
  report.automorphisms = count_automorphisms(g2);
  long gen = genus(g2);
  for (const auto& [id, g] : corpus) {
    if (genus(g) != gen) continue;
    GrowthRow row;
    row.graph = id;
    row.morphisms = count_contractions(g, g2);
    row.bound = Integer(static_cast<std::int64_t>(report.automorphisms)) *
                binomial(static_cast<std::int64_t>(g.num_edges()), static_cast<std::int64_t>(g2.num_edges()));
    row.holds = Integer(static_cast<std::int64_t>(row.morphisms)) <= row.bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::optional<NontrivialFactor> nontrivial_factor(const Contraction& phi, const Family& family,
                                                  const std::vector<std::size_t>& n) {
  if (n.size() != family.arity()) throw std::invalid_argument("factors_nontrivially: wrong number of coordinates");
  if (!(phi.source() == *family.member(n))) {
    throw std::invalid_argument("factors_nontrivially: source is not the family member at n");
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] == 0) continue;
    if (family.kind == Family::Kind::Subdivide && n[j] == 1 && family.base->is_loop(family.edges[j].edge)) continue;
    for (std::size_t missing = 1; missing <= n[j]; ++missing) {
      std::vector<std::size_t> m = n;
      --m[j];
      std::vector<OrderedInjection> f;
      for (std::size_t k = 0; k < n.size(); ++k) f.push_back(identity_injection(n[k]));
      f[j].clear();
      for (std::size_t x = 1; x <= n[j]; ++x) {
        if (x != missing) f[j].push_back(x);
      }
      auto pi = family.structure_map(m, n, f);
      if (auto psi = factor_through(phi, pi)) return NontrivialFactor{m, f, std::move(*psi)};
    }
  }
  return std::nullopt;
}

bool factors_nontrivially(const Contraction& phi, const Family& family, const std::vector<std::size_t>& n) {
  return nontrivial_factor(phi, family, n).has_value();
}

}  // namespace gcat
