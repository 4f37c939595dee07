#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gcat/integer.hpp"
#include "gcat/sparse_matrix.hpp"

namespace gcat {

/// Which unimodular transforms smith_normal_form should materialize.
struct SnfTransforms {
  bool left = true;
  bool left_inverse = false;
  bool right = true;
  bool right_inverse = false;
};

struct SNFResult {
  /// Invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> factors;
  /// U * A * V = S where S has the factors on its leading diagonal.
  std::optional<SparseIntMatrix> left;
  std::optional<SparseIntMatrix> left_inverse;
  std::optional<SparseIntMatrix> right;
  std::optional<SparseIntMatrix> right_inverse;

  std::size_t rank() const { return factors.size(); }
  /// Invariant factors greater than one.
  std::vector<Integer> torsion() const;
  /// The diagonal matrix S of the given shape.
  SparseIntMatrix diagonal(std::size_t rows, std::size_t cols) const;
};

SNFResult smith_normal_form(const SparseIntMatrix& a, SnfTransforms transforms = {});

/// Invariant factors only. Skips all transform bookkeeping, so it is the
/// path to use for large boundary matrices.
std::vector<Integer> invariant_factors(const SparseIntMatrix& a);

/// Normalizes a multiset of nonzero diagonal entries into a divisibility chain.
std::vector<Integer> divisibility_chain(std::vector<Integer> diagonal);

}  // namespace gcat
