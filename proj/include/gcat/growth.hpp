#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/integer.hpp"
#include "gcat/morphism.hpp"
#include "gcat/subdivision.hpp"

namespace gcat {

enum class FunctionalKind { Betti, KlCoefficient, OsDimension, HomCount };

/// A numeric invariant of a graph: betti H_i(UConf_n), [t^i] of the KL
/// polynomial, dim OS^i, or |Hom(G, target)|.
struct Functional {
  FunctionalKind kind = FunctionalKind::Betti;
  std::size_t i = 0;
  std::size_t n = 0;
  std::shared_ptr<const MultiGraph> hom_target;

  static Functional betti(std::size_t i, std::size_t n) { return {FunctionalKind::Betti, i, n, nullptr}; }
  static Functional kl_coefficient(std::size_t i) { return {FunctionalKind::KlCoefficient, i, 0, nullptr}; }
  static Functional os_dimension(std::size_t i) { return {FunctionalKind::OsDimension, i, 0, nullptr}; }
  static Functional hom_count(MultiGraph target);

  std::string name() const;
  /// nullopt where the functional is undefined (point graph, loops for KL).
  std::optional<Integer> evaluate(const MultiGraph& g) const;
};

/// G(e, m) for subdivision sites or G(v, m) for sprouting sites.
struct Family {
  enum class Kind { Subdivide, Sprout };
  Kind kind = Kind::Subdivide;
  std::shared_ptr<const MultiGraph> base;
  std::vector<DirectedEdge> edges;
  std::vector<std::size_t> vertices;

  static Family subdivision(MultiGraph g, std::vector<DirectedEdge> sites);
  static Family sprouting(MultiGraph g, std::vector<std::size_t> sites);

  std::size_t arity() const { return kind == Kind::Subdivide ? edges.size() : vertices.size(); }
  std::shared_ptr<const MultiGraph> member(const std::vector<std::size_t>& m) const;
  /// Φ(f) or Ψ(f) : member(n) -> member(m) for f_i : [m_i] -> [n_i].
  Contraction structure_map(const std::vector<std::size_t>& m, const std::vector<std::size_t>& n,
                            const std::vector<OrderedInjection>& f) const;
};

/// Dimensions over the box lo <= m <= hi, listed in row-major grid order
/// (last coordinate fastest).
struct GrowthTable {
  std::string functional;
  std::vector<std::size_t> lo, hi;
  std::vector<std::vector<std::size_t>> points;
  std::vector<std::optional<Integer>> values;

  std::size_t arity() const { return lo.size(); }
  std::optional<std::size_t> index_of(const std::vector<std::size_t>& m) const;
};

/// Cells are evaluated on up to `workers` threads; the result does not depend
/// on scheduling.
GrowthTable dimension_table(const Functional& f, const Family& family, const std::vector<std::size_t>& lo,
                            const std::vector<std::size_t>& hi, std::size_t workers = 1);

/// Polynomial with rational coefficients in variables m_1..m_r.
struct RationalPolynomial {
  std::size_t vars = 0;
  /// Exponent vector -> nonzero coefficient.
  std::map<std::vector<std::size_t>, mpq_class> terms;

  long total_degree() const;
  mpq_class evaluate(const std::vector<std::size_t>& m) const;
  /// Coefficients of a univariate polynomial, low to high.
  std::vector<mpq_class> univariate() const;
  std::string str(const std::vector<std::string>& names = {}) const;
};

struct FitReport {
  RationalPolynomial polynomial;
  std::size_t degree_cap = 0;
  /// Lower corner of the largest box [threshold, hi] with zero residuals.
  std::vector<std::size_t> threshold;
  std::size_t threshold_cells = 0;
  /// Cells used to interpolate (all inside the box).
  std::size_t support_cells = 0;
  /// Nonzero residuals (value - polynomial) and absent cells (residual unset).
  std::vector<std::pair<std::vector<std::size_t>, std::optional<mpq_class>>> residuals;

  /// The zero-residual box has cells beyond the interpolation support.
  bool confirmed() const { return threshold_cells > support_cells; }
};

/// Exact interpolation of total degree <= cap from the top corner of the
/// grid, then residuals everywhere. Throws std::invalid_argument if the top
/// corner simplex does not fit in the grid or has absent cells.
FitReport fit_polynomial(const GrowthTable& table, std::size_t degree_cap);

struct GenerationViolation {
  std::string graph;
  std::vector<std::size_t> tuple;
};

struct GenerationReport {
  std::size_t i = 0;
  std::size_t graphs_checked = 0;
  std::size_t tuples_checked = 0;
  std::vector<GenerationViolation> violations;
  /// Graphs with |G| <= g + i, outside the claim.
  std::vector<std::string> excluded;
  std::vector<GenerationViolation> excluded_violations;
};

/// Every ordered i-tuple of edges of G with |G| > g + i must leave some
/// non-loop edge free, so the tuple pulls back along a simple contraction.
GenerationReport check_generation_E(std::size_t i, const std::vector<NamedGraph>& corpus);

struct GrowthRow {
  std::string graph;
  std::uint64_t morphisms = 0;
  Integer bound;
  bool holds = false;
};

struct GrowthReport {
  std::uint64_t automorphisms = 0;
  std::vector<GrowthRow> rows;
  bool all_hold() const;
};

/// |Hom(G, G2)| against |Aut(G2)|·C(|G|, |G2|) for each corpus graph of the
/// genus of G2 (others are skipped).
GrowthReport principal_projective_growth(const MultiGraph& g2, const std::vector<NamedGraph>& corpus);

struct NontrivialFactor {
  std::vector<std::size_t> m;
  std::vector<OrderedInjection> f;
  Contraction psi;
};

/// φ : member(n) -> G2 factors as ψ ∘ structure_map(f) with f a non-identity
/// tuple. One-step reductions suffice: a non-identity f misses some index.
std::optional<NontrivialFactor> nontrivial_factor(const Contraction& phi, const Family& family,
                                                  const std::vector<std::size_t>& n);
bool factors_nontrivially(const Contraction& phi, const Family& family, const std::vector<std::size_t>& n);

}  // namespace gcat
