#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcat/integer.hpp"

namespace gcat {

struct SparseEntry {
  std::size_t index;
  Integer value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sorted by index, no stored zeros.
using SparseVector = std::vector<SparseEntry>;

/// y += q * x
void axpy(SparseVector& y, const Integer& q, const SparseVector& x);
Integer dot(const SparseVector& a, const SparseVector& b);
Integer lookup(const SparseVector& v, std::size_t index);

/// Exact integer matrix stored column-major with sorted sparse columns.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  static SparseIntMatrix identity(std::size_t n);
  static SparseIntMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static SparseIntMatrix from_rows(std::size_t cols, const std::vector<SparseVector>& rows);
  static SparseIntMatrix from_dense(const std::vector<std::vector<Integer>>& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  /// Accumulates v into entry (r, c); a resulting zero is erased.
  void add(std::size_t r, std::size_t c, const Integer& v);
  void set(std::size_t r, std::size_t c, const Integer& v);
  Integer at(std::size_t r, std::size_t c) const;

  const SparseVector& column(std::size_t c) const { return cols_[c]; }
  const std::vector<SparseVector>& columns() const { return cols_; }
  std::vector<SparseVector> row_vectors() const;
  std::vector<std::vector<Integer>> to_dense() const;

  SparseIntMatrix transpose() const;
  /// Columns [begin, end).
  SparseIntMatrix column_block(std::size_t begin, std::size_t end) const;
  /// Rows [begin, end), renumbered from zero.
  SparseIntMatrix row_block(std::size_t begin, std::size_t end) const;
  SparseVector apply(const SparseVector& x) const;

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b);
  friend bool operator==(const SparseIntMatrix& a, const SparseIntMatrix& b) = default;

  /// Coordinate text: header "rows cols nnz", then one "r c value" line per entry.
  std::string to_coordinate_text() const;
  static SparseIntMatrix from_coordinate_text(const std::string& text);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

/// Horizontal concatenation [a | b]; row counts must agree.
SparseIntMatrix hconcat(const SparseIntMatrix& a, const SparseIntMatrix& b);

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m);

}  // namespace gcat
