#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcat/graph.hpp"
#include "gcat/homology.hpp"
#include "gcat/morphism.hpp"
#include "gcat/sparse_matrix.hpp"

namespace gcat {

/// Monomial in the edge ring tensored with one half-edge difference
/// (h - base(w)) per distinguished vertex w; every other vertex carries ∅.
struct SwBasisElement {
  /// Edges with multiplicity, sorted.
  std::vector<std::size_t> monomial;
  /// (w, h) sorted by w, with v(h) = w and h != base(w).
  std::vector<std::pair<std::size_t, HalfEdge>> distinguished;

  std::size_t i() const { return distinguished.size(); }
  std::size_t n() const { return distinguished.size() + monomial.size(); }
  friend bool operator==(const SwBasisElement&, const SwBasisElement&) = default;
};

/// The bidegree (i, n) piece of the reduced Świątkowski complex, with a
/// deterministic basis order.
class SwSlice {
 public:
  /// Throws std::invalid_argument for a graph without edges.
  SwSlice(std::shared_ptr<const MultiGraph> g, std::size_t i, std::size_t n);

  const MultiGraph& graph() const { return *graph_; }
  const std::shared_ptr<const MultiGraph>& graph_ptr() const { return graph_; }
  std::size_t i() const { return i_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return basis_.size(); }
  const SwBasisElement& operator[](std::size_t k) const { return basis_[k]; }
  const std::vector<SwBasisElement>& basis() const { return basis_; }
  /// Position of an element, or nullopt if it is not in this slice.
  std::optional<std::size_t> index_of(const SwBasisElement& x) const;

 private:
  std::shared_ptr<const MultiGraph> graph_;
  std::size_t i_, n_;
  std::vector<SwBasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
};

SwSlice sw_basis(const MultiGraph& g, std::size_t i, std::size_t n);

/// ∂: (i, n) -> (i-1, n), rows indexed by `to`, columns by `from`.
SparseIntMatrix sw_differential(const SwSlice& from, const SwSlice& to);
SparseIntMatrix sw_differential(const MultiGraph& g, std::size_t i, std::size_t n);

/// H_i(UConf_n(G); Z). Throws std::invalid_argument for the point graph,
/// where the complex misses the class of UConf_1.
HomologySummary uconf_homology(const MultiGraph& g, std::size_t i, std::size_t n);
HomologyContext uconf_homology_context(const MultiGraph& g, std::size_t i, std::size_t n);

/// Matrix of φ̃*: S̃(target)_{i,n} -> S̃(source)_{i,n} (rows: source slice).
/// Contractions with several contracted edges are factored into simple
/// contractions in increasing edge order.
SparseIntMatrix sw_chain_map(const Contraction& phi, std::size_t i, std::size_t n);
/// As above, contracting the edges of φ in the given order.
SparseIntMatrix sw_chain_map(const Contraction& phi, std::size_t i, std::size_t n,
                             const std::vector<std::size_t>& edge_order);
/// The pullback for a contraction with at most one contracted edge, on
/// prebuilt slices.
SparseIntMatrix sw_elementary_chain_map(const Contraction& phi, const SwSlice& source, const SwSlice& target);

struct PullbackReport {
  bool spans = false;
  std::size_t betti = 0;
  /// Rank of the joint image in H / torsion.
  std::size_t image_rank = 0;
  std::size_t simple_contractions = 0;
  /// Chain level: the images of the simple-contraction chain maps span S̃(G)_{i,n}.
  bool chain_level_spans = false;
};

/// Whether the images of H_i(UConf_n(G/e)) over all simple contractions
/// G -> G/e span H_i(UConf_n(G)) modulo torsion.
PullbackReport pullback_report(const MultiGraph& g, std::size_t i, std::size_t n);
bool pullback_spans(const MultiGraph& g, std::size_t i, std::size_t n);

/// Discrete configuration cube complex of the (n+1)-fold subdivision of G.
class AbramsComplex {
 public:
  AbramsComplex(const MultiGraph& g, std::size_t n);

  const MultiGraph& subdivided() const { return sub_; }
  std::size_t n() const { return n_; }
  /// Cells with exactly k edge members.
  std::size_t num_cells(std::size_t k) const { return k < cells_.size() ? cells_[k].size() : 0; }
  /// ∂: C_k -> C_{k-1}.
  SparseIntMatrix boundary(std::size_t k) const;
  HomologySummary homology(std::size_t i) const;

 private:
  /// Items are vertices 0..V-1 and edges V..V+E-1 of the subdivision.
  using Cell = std::vector<std::size_t>;
  std::size_t cell_index(std::size_t k, const Cell& c) const;

  MultiGraph sub_;
  std::size_t n_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

HomologySummary abrams_homology(const MultiGraph& g, std::size_t i, std::size_t n);

struct TorsionRow {
  std::string id;
  long genus = 0;
  bool planar = false;
  std::size_t betti = 0;
  std::vector<Integer> torsion;
};

struct TorsionScan {
  std::size_t i = 0, n = 0;
  std::vector<TorsionRow> rows;
  /// Per genus: the exponent of the torsion (largest invariant factor seen, 1 if none).
  std::vector<std::pair<long, Integer>> max_exponent;
};

TorsionScan torsion_scan(const std::vector<NamedGraph>& corpus, std::size_t i, std::size_t n);

}  // namespace gcat
