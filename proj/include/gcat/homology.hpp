#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcat/integer.hpp"
#include "gcat/sparse_matrix.hpp"

namespace gcat {

/// H = Z^betti + sum_j Z/torsion[j] for the middle group of C_in -> C_mid -> C_out.
struct HomologySummary {
  std::size_t betti = 0;
  std::vector<Integer> torsion;
  /// Cycle representatives in C_mid: free generators first, then one per
  /// torsion factor. Only filled by HomologyContext.
  std::optional<std::vector<SparseVector>> generators;

  friend bool operator==(const HomologySummary& a, const HomologySummary& b) {
    return a.betti == b.betti && a.torsion == b.torsion;
  }
};

/// Betti number and torsion only. `d_out` maps C_mid -> C_out, `d_in` maps
/// C_in -> C_mid. Throws std::invalid_argument on shape mismatch or when
/// d_out * d_in != 0.
HomologySummary homology(const SparseIntMatrix& d_out, const SparseIntMatrix& d_in);

/// Homology of one degree with explicit generators and a coordinate map,
/// enough to push chain maps through to homology.
class HomologyContext {
 public:
  HomologyContext(SparseIntMatrix d_out, SparseIntMatrix d_in);

  const SparseIntMatrix& d_out() const { return d_out_; }
  const SparseIntMatrix& d_in() const { return d_in_; }
  std::size_t chain_rank() const { return d_out_.cols(); }
  std::size_t betti() const { return betti_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  HomologySummary summary() const;

  std::vector<SparseVector> free_generators() const;
  std::vector<SparseVector> torsion_generators() const;

  bool is_cycle(const SparseVector& z) const;
  /// Coordinates of a cycle in H / torsion = Z^betti.
  std::vector<Integer> free_coordinates(const SparseVector& z) const;
  /// Coordinates in the torsion summands, reduced into [0, d_j).
  std::vector<Integer> torsion_coordinates(const SparseVector& z) const;
  /// True iff the cycle is zero in homology.
  bool is_boundary(const SparseVector& z) const;

 private:
  std::vector<Integer> kernel_coordinates(const SparseVector& z) const;

  SparseIntMatrix d_out_, d_in_;
  std::size_t out_rank_ = 0;
  std::size_t kernel_dim_ = 0;
  /// Columns of V beyond rank(d_out): a Z-basis of ker d_out.
  SparseIntMatrix kernel_basis_;
  /// Rows of V^-1 beyond rank(d_out): coordinates in that basis.
  std::vector<SparseVector> kernel_projection_;
  /// SNF of d_in expressed in kernel coordinates.
  std::vector<Integer> in_factors_;
  SparseIntMatrix in_left_, in_left_inverse_;
  std::size_t betti_ = 0;
  std::vector<Integer> torsion_;
};

/// Matrix of the map H(source) / torsion -> H(target) / torsion induced by
/// a chain map f: C_mid(source) -> C_mid(target). Throws
/// std::invalid_argument if f does not send cycles to cycles and boundaries
/// to boundaries.
SparseIntMatrix induced_map_on_homology(const SparseIntMatrix& f, const HomologyContext& source,
                                        const HomologyContext& target);

/// True iff the columns span Z^rows as a lattice.
bool spans_lattice(const SparseIntMatrix& columns);

}  // namespace gcat
