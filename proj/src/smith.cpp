#include "gcat/smith.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gcat {

namespace {

/// y += q * x, recording indices that became present in y.
void axpy_tracking(SparseVector& y, const Integer& q, const SparseVector& x,
                   std::vector<std::size_t>& added) {
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->index < xi->index)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->index < yi->index) {
      out.push_back({xi->index, q * xi->value});
      added.push_back(xi->index);
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

/// (a, b) <- (alpha a + beta b, gamma a + delta b)
void combine(SparseVector& a, SparseVector& b, const Integer& alpha, const Integer& beta,
             const Integer& gamma, const Integer& delta) {
  SparseVector na, nb;
  axpy(na, alpha, a);
  axpy(na, beta, b);
  axpy(nb, gamma, a);
  axpy(nb, delta, b);
  a = std::move(na);
  b = std::move(nb);
}

void negate(SparseVector& v) {
  for (auto& e : v) e.value = -e.value;
}

struct Pivot {
  std::size_t row;
  std::size_t col;
  Integer value;
};

/// Elimination state for A, plus optional transform matrices stored in the
/// orientation their updates touch: U by rows, U^-1 by columns, V by
/// columns, V^-1 by rows.
class Eliminator {
 public:
  Eliminator(const SparseIntMatrix& a, SnfTransforms t) : n_rows_(a.rows()), n_cols_(a.cols()), t_(t) {
    rows_ = a.row_vectors();
    col_rows_.resize(n_cols_);
    for (std::size_t r = 0; r < n_rows_; ++r) {
      for (const auto& e : rows_[r]) col_rows_[e.index].push_back(r);
    }
    row_active_.assign(n_rows_, true);
    col_active_.assign(n_cols_, true);
    if (t_.left) u_rows_ = unit_vectors(n_rows_);
    if (t_.left_inverse) uinv_cols_ = unit_vectors(n_rows_);
    if (t_.right) v_cols_ = unit_vectors(n_cols_);
    if (t_.right_inverse) vinv_rows_ = unit_vectors(n_cols_);
  }

  void run() {
    unit_phase();
    general_phase();
  }

  std::vector<Pivot>& pivots() { return pivots_; }

  // 2x2 unimodular step replacing diagonal (a, b) at pivots k, l by (g, ab/g).
  void gcd_step(std::size_t k, std::size_t l) {
    Pivot& pk = pivots_[k];
    Pivot& pl = pivots_[l];
    Integer x, y;
    Integer g = ext_gcd(pk.value, pl.value, x, y);
    Integer ag = divexact(pk.value, g);
    Integer bg = divexact(pl.value, g);
    if (t_.left) combine(u_rows_[pk.row], u_rows_[pl.row], x, y, -bg, ag);
    if (t_.left_inverse) combine(uinv_cols_[pk.row], uinv_cols_[pl.row], ag, bg, -y, x);
    if (t_.right) combine(v_cols_[pk.col], v_cols_[pl.col], Integer(1), Integer(1), -(y * bg), x * ag);
    if (t_.right_inverse) {
      combine(vinv_rows_[pk.col], vinv_rows_[pl.col], x * ag, y * bg, Integer(-1), Integer(1));
    }
    Integer lcm_value = ag * pl.value;
    pk.value = g;
    pl.value = lcm_value;
  }

  void make_positive(std::size_t k) {
    Pivot& p = pivots_[k];
    if (p.value.sign() >= 0) return;
    p.value = -p.value;
    if (t_.left) negate(u_rows_[p.row]);
    if (t_.left_inverse) negate(uinv_cols_[p.row]);
  }

  SNFResult finish() {
    SNFResult res;
    std::vector<std::size_t> row_order, col_order;
    std::vector<bool> row_used(n_rows_, false), col_used(n_cols_, false);
    for (const auto& p : pivots_) {
      res.factors.push_back(p.value);
      row_order.push_back(p.row);
      col_order.push_back(p.col);
      row_used[p.row] = true;
      col_used[p.col] = true;
    }
    for (std::size_t r = 0; r < n_rows_; ++r) {
      if (!row_used[r]) row_order.push_back(r);
    }
    for (std::size_t c = 0; c < n_cols_; ++c) {
      if (!col_used[c]) col_order.push_back(c);
    }
    if (t_.left) {
      std::vector<SparseVector> rows;
      rows.reserve(n_rows_);
      for (auto r : row_order) rows.push_back(std::move(u_rows_[r]));
      res.left = SparseIntMatrix::from_rows(n_rows_, rows);
    }
    if (t_.left_inverse) {
      std::vector<SparseVector> cols;
      cols.reserve(n_rows_);
      for (auto r : row_order) cols.push_back(std::move(uinv_cols_[r]));
      res.left_inverse = SparseIntMatrix::from_columns(n_rows_, std::move(cols));
    }
    if (t_.right) {
      std::vector<SparseVector> cols;
      cols.reserve(n_cols_);
      for (auto c : col_order) cols.push_back(std::move(v_cols_[c]));
      res.right = SparseIntMatrix::from_columns(n_cols_, std::move(cols));
    }
    if (t_.right_inverse) {
      std::vector<SparseVector> rows;
      rows.reserve(n_cols_);
      for (auto c : col_order) rows.push_back(std::move(vinv_rows_[c]));
      res.right_inverse = SparseIntMatrix::from_rows(n_cols_, rows);
    }
    return res;
  }

 private:
  static std::vector<SparseVector> unit_vectors(std::size_t n) {
    std::vector<SparseVector> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i].push_back({i, Integer(1)});
    return v;
  }

  const Integer* entry(std::size_t r, std::size_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const SparseEntry& e, std::size_t i) { return e.index < i; });
    if (it != row.end() && it->index == c) return &it->value;
    return nullptr;
  }

  /// Drops stale and inactive rows from a column's row list.
  std::vector<std::size_t>& clean_column(std::size_t c) {
    auto& list = col_rows_[c];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove_if(list.begin(), list.end(),
                              [&](std::size_t r) { return !row_active_[r] || entry(r, c) == nullptr; }),
               list.end());
    return list;
  }

  /// row target += q * row source
  void row_op(std::size_t target, std::size_t source, const Integer& q) {
    added_.clear();
    axpy_tracking(rows_[target], q, rows_[source], added_);
    for (auto c : added_) col_rows_[c].push_back(target);
    if (t_.left) axpy(u_rows_[target], q, u_rows_[source]);
    if (t_.left_inverse) axpy(uinv_cols_[source], -q, uinv_cols_[target]);
  }

  /// col target += q * col source, where col source is zero outside pivot_row.
  void col_op_on_pivot_row(std::size_t target, std::size_t source, const Integer& q) {
    if (t_.right) axpy(v_cols_[target], q, v_cols_[source]);
    if (t_.right_inverse) axpy(vinv_rows_[source], -q, vinv_rows_[target]);
  }

  /// Clears column c outside row r and row r outside column c, moving the
  /// pivot whenever a smaller remainder shows up. Returns the final pivot.
  Pivot settle(std::size_t r, std::size_t c) {
    for (;;) {
      const Integer p = *entry(r, c);
      // Column pass.
      std::size_t best_row = r;
      Integer best_abs;
      auto rows_in_col = clean_column(c);
      for (auto r2 : rows_in_col) {
        if (r2 == r) continue;
        Integer q = *entry(r2, c) / p;
        if (!q.is_zero()) row_op(r2, r, -q);
        const Integer* rem = entry(r2, c);
        if (rem != nullptr) {
          Integer a = abs(*rem);
          if (best_row == r || a < best_abs) {
            best_row = r2;
            best_abs = a;
          }
        }
      }
      if (best_row != r) {
        r = best_row;
        continue;
      }
      // Row pass: column c is now zero outside row r.
      std::size_t best_col = c;
      SparseVector kept;
      for (auto& e : rows_[r]) {
        if (e.index == c) {
          kept.push_back(e);
          continue;
        }
        Integer q = e.value / p;
        if (!q.is_zero()) col_op_on_pivot_row(e.index, c, -q);
        Integer rem = e.value;
        rem.submul(q, p);
        if (!rem.is_zero()) {
          if (best_col == c || abs(rem) < best_abs) {
            best_col = e.index;
            best_abs = abs(rem);
          }
          kept.push_back({e.index, rem});
        }
      }
      rows_[r] = std::move(kept);
      if (best_col != c) {
        c = best_col;
        continue;
      }
      return Pivot{r, c, p};
    }
  }

  void retire(const Pivot& p) {
    row_active_[p.row] = false;
    col_active_[p.col] = false;
    pivots_.push_back(p);
  }

  void unit_phase() {
    using Key = std::pair<std::size_t, std::size_t>;  // (count, col)
    std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
    for (std::size_t c = 0; c < n_cols_; ++c) {
      if (!col_rows_[c].empty()) queue.push({col_rows_[c].size(), c});
    }
    std::vector<bool> deferred(n_cols_, false);
    while (!queue.empty()) {
      auto [count, c] = queue.top();
      queue.pop();
      if (!col_active_[c] || deferred[c]) continue;
      auto& list = clean_column(c);
      if (list.empty()) continue;
      if (list.size() < count) {
        queue.push({list.size(), c});
        continue;
      }
      std::size_t best = n_rows_;
      for (auto r : list) {
        if (entry(r, c)->is_unit() && (best == n_rows_ || rows_[r].size() < rows_[best].size())) best = r;
      }
      if (best == n_rows_) {
        deferred[c] = true;
        continue;
      }
      const Integer p = *entry(best, c);
      std::vector<std::size_t> others(list.begin(), list.end());
      for (auto r2 : others) {
        if (r2 == best) continue;
        // p is a unit, so a / p == a * p.
        Integer q = *entry(r2, c) * p;
        row_op(r2, best, -q);
        for (auto c2 : added_) {
          if (col_active_[c2] && !deferred[c2]) queue.push({col_rows_[c2].size(), c2});
        }
      }
      for (const auto& e : rows_[best]) {
        if (e.index == c) continue;
        col_op_on_pivot_row(e.index, c, -(e.value * p));
        if (col_active_[e.index] && !deferred[e.index]) {
          queue.push({col_rows_[e.index].size(), e.index});
        }
      }
      rows_[best] = SparseVector{{c, p}};
      retire(Pivot{best, c, p});
    }
  }

  void general_phase() {
    for (;;) {
      std::vector<std::size_t> col_count(n_cols_, 0);
      for (std::size_t r = 0; r < n_rows_; ++r) {
        if (!row_active_[r]) continue;
        for (const auto& e : rows_[r]) ++col_count[e.index];
      }
      std::size_t br = n_rows_, bc = n_cols_, bcost = 0;
      Integer babs;
      for (std::size_t r = 0; r < n_rows_; ++r) {
        if (!row_active_[r]) continue;
        for (const auto& e : rows_[r]) {
          if (!col_active_[e.index]) continue;
          Integer a = abs(e.value);
          std::size_t cost = (rows_[r].size() - 1) * (col_count[e.index] - 1);
          if (br == n_rows_ || a < babs || (a == babs && cost < bcost)) {
            br = r;
            bc = e.index;
            babs = std::move(a);
            bcost = cost;
          }
        }
      }
      if (br == n_rows_) return;
      retire(settle(br, bc));
    }
  }

  std::size_t n_rows_, n_cols_;
  SnfTransforms t_;
  std::vector<SparseVector> rows_;
  std::vector<std::vector<std::size_t>> col_rows_;
  std::vector<bool> row_active_, col_active_;
  std::vector<SparseVector> u_rows_, uinv_cols_, v_cols_, vinv_rows_;
  std::vector<Pivot> pivots_;
  std::vector<std::size_t> added_;
};

}  // namespace

std::vector<Integer> SNFResult::torsion() const {
  std::vector<Integer> t;
  for (const auto& d : factors) {
    if (!d.is_unit()) t.push_back(d);
  }
  return t;
}

SparseIntMatrix SNFResult::diagonal(std::size_t rows, std::size_t cols) const {
  SparseIntMatrix s(rows, cols);
  for (std::size_t k = 0; k < factors.size(); ++k) s.set(k, k, factors[k]);
  return s;
}

std::vector<Integer> divisibility_chain(std::vector<Integer> diagonal) {
  std::vector<Integer> units, rest;
  for (auto& d : diagonal) {
    if (d.is_zero()) throw std::invalid_argument("divisibility_chain: zero entry");
    if (d.is_unit()) {
      units.push_back(Integer(1));
    } else {
      rest.push_back(abs(d));
    }
  }
  for (std::size_t k = 0; k < rest.size(); ++k) {
    for (std::size_t l = k + 1; l < rest.size(); ++l) {
      if ((rest[l] % rest[k]).is_zero()) continue;
      Integer g = gcd(rest[k], rest[l]);
      Integer m = divexact(rest[k], g) * rest[l];
      rest[k] = g;
      rest[l] = m;
    }
  }
  for (auto& d : rest) {
    if (d.is_unit()) {
      units.push_back(Integer(1));
    }
  }
  std::erase_if(rest, [](const Integer& d) { return d.is_unit(); });
  std::sort(rest.begin(), rest.end());
  units.insert(units.end(), rest.begin(), rest.end());
  return units;
}

SNFResult smith_normal_form(const SparseIntMatrix& a, SnfTransforms transforms) {
  Eliminator el(a, transforms);
  el.run();
  auto& piv = el.pivots();
  for (std::size_t k = 0; k < piv.size(); ++k) el.make_positive(k);
  // Units first, keeping elimination order otherwise.
  std::stable_partition(piv.begin(), piv.end(), [](const Pivot& p) { return p.value.is_unit(); });
  std::size_t first_nonunit = 0;
  while (first_nonunit < piv.size() && piv[first_nonunit].value.is_unit()) ++first_nonunit;
  for (std::size_t k = first_nonunit; k < piv.size(); ++k) {
    for (std::size_t l = k + 1; l < piv.size(); ++l) {
      if (!(piv[l].value % piv[k].value).is_zero()) el.gcd_step(k, l);
    }
  }
  return el.finish();
}

std::vector<Integer> invariant_factors(const SparseIntMatrix& a) {
  Eliminator el(a, SnfTransforms{false, false, false, false});
  el.run();
  std::vector<Integer> diag;
  diag.reserve(el.pivots().size());
  for (const auto& p : el.pivots()) diag.push_back(p.value);
  return divisibility_chain(std::move(diag));
}

}  // namespace gcat
