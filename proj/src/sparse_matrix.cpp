#include "gcat/sparse_matrix.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gcat {

void axpy(SparseVector& y, const Integer& q, const SparseVector& x) {
  if (q.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->index < xi->index)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->index < yi->index) {
      out.push_back({xi->index, q * xi->value});
      ++xi;
    } else {
      Integer v = std::move(yi->value);
      v.submul(-q, xi->value);
      if (!v.is_zero()) out.push_back({xi->index, std::move(v)});
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

Integer dot(const SparseVector& a, const SparseVector& b) {
  Integer acc;
  auto ai = a.begin();
  auto bi = b.begin();
  while (ai != a.end() && bi != b.end()) {
    if (ai->index < bi->index) {
      ++ai;
    } else if (bi->index < ai->index) {
      ++bi;
    } else {
      acc.submul(-ai->value, bi->value);
      ++ai;
      ++bi;
    }
  }
  return acc;
}

Integer lookup(const SparseVector& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != v.end() && it->index == index) return it->value;
  return Integer(0);
}

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseIntMatrix SparseIntMatrix::identity(std::size_t n) {
  SparseIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({i, Integer(1)});
  return m;
}

SparseIntMatrix SparseIntMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  SparseIntMatrix m;
  m.rows_ = rows;
  m.cols_ = std::move(columns);
  for (const auto& col : m.cols_) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k].index >= rows) throw std::out_of_range("column entry beyond row count");
      if (col[k].value.is_zero()) throw std::invalid_argument("stored zero in sparse column");
      if (k > 0 && col[k - 1].index >= col[k].index) {
        throw std::invalid_argument("sparse column not strictly sorted");
      }
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_rows(std::size_t cols, const std::vector<SparseVector>& rows) {
  SparseIntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& e : rows[r]) {
      if (e.index >= cols) throw std::out_of_range("row entry beyond column count");
      if (!e.value.is_zero()) m.cols_[e.index].push_back({r, e.value});
    }
  }
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<Integer>>& dense) {
  std::size_t rows = dense.size();
  std::size_t cols = rows == 0 ? 0 : dense[0].size();
  SparseIntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!dense[r][c].is_zero()) m.cols_[c].push_back({r, dense[r][c]});
    }
  }
  return m;
}

std::size_t SparseIntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseIntMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("SparseIntMatrix::add");
  if (v.is_zero()) return;
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  if (it != col.end() && it->index == r) {
    it->value += v;
    if (it->value.is_zero()) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

void SparseIntMatrix::set(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("SparseIntMatrix::set");
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const SparseEntry& e, std::size_t i) { return e.index < i; });
  bool present = it != col.end() && it->index == r;
  if (v.is_zero()) {
    if (present) col.erase(it);
  } else if (present) {
    it->value = v;
  } else {
    col.insert(it, {r, v});
  }
}

Integer SparseIntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("SparseIntMatrix::at");
  return lookup(cols_[c], r);
}

std::vector<SparseVector> SparseIntMatrix::row_vectors() const {
  std::vector<SparseVector> rows(rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) rows[e.index].push_back({c, e.value});
  }
  return rows;
}

std::vector<std::vector<Integer>> SparseIntMatrix::to_dense() const {
  std::vector<std::vector<Integer>> d(rows_, std::vector<Integer>(cols_.size()));
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) d[e.index][c] = e.value;
  }
  return d;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  return from_columns(cols_.size(), row_vectors());
}

SparseIntMatrix SparseIntMatrix::column_block(std::size_t begin, std::size_t end) const {
  if (begin > end || end > cols_.size()) throw std::out_of_range("column_block");
  SparseIntMatrix m;
  m.rows_ = rows_;
  m.cols_.assign(cols_.begin() + static_cast<std::ptrdiff_t>(begin),
                 cols_.begin() + static_cast<std::ptrdiff_t>(end));
  return m;
}

SparseIntMatrix SparseIntMatrix::row_block(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw std::out_of_range("row_block");
  SparseIntMatrix m(end - begin, cols_.size());
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) {
      if (e.index >= begin && e.index < end) m.cols_[c].push_back({e.index - begin, e.value});
    }
  }
  return m;
}

SparseVector SparseIntMatrix::apply(const SparseVector& x) const {
  SparseVector y;
  for (const auto& e : x) {
    if (e.index >= cols_.size()) throw std::out_of_range("SparseIntMatrix::apply");
    axpy(y, e.value, cols_[e.index]);
  }
  return y;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  SparseIntMatrix m(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) m.cols_[c] = a.apply(b.cols_[c]);
  return m;
}

SparseIntMatrix operator+(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum: dimension mismatch");
  }
  SparseIntMatrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(m.cols_[c], Integer(1), b.cols_[c]);
  return m;
}

SparseIntMatrix operator-(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix difference: dimension mismatch");
  }
  SparseIntMatrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(m.cols_[c], Integer(-1), b.cols_[c]);
  return m;
}

std::string SparseIntMatrix::to_coordinate_text() const {
  std::ostringstream os;
  os << rows_ << ' ' << cols_.size() << ' ' << nnz() << '\n';
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& e : cols_[c]) os << e.index << ' ' << c << ' ' << e.value << '\n';
  }
  return os.str();
}

SparseIntMatrix SparseIntMatrix::from_coordinate_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw std::invalid_argument("coordinate text: bad header");
  SparseIntMatrix m(rows, cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(is >> r >> c >> v)) throw std::invalid_argument("coordinate text: truncated");
    m.add(r, c, Integer(v));
  }
  return m;
}

SparseIntMatrix hconcat(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row counts differ");
  std::vector<SparseVector> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return SparseIntMatrix::from_columns(a.rows(), std::move(cols));
}

std::ostream& operator<<(std::ostream& os, const SparseIntMatrix& m) {
  auto d = m.to_dense();
  for (const auto& row : d) {
    os << '[';
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
    os << "]\n";
  }
  return os;
}

}  // namespace gcat
