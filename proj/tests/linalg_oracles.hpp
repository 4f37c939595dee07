#pragma once

// Slow, obviously-correct reference computations for the linear algebra tests.

#include <algorithm>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "gcat/integer.hpp"
#include "gcat/sparse_matrix.hpp"

namespace gcat::testing {

inline SparseIntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     double density, int bound) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-bound, bound);
  SparseIntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (coin(rng) < density) a.set(r, c, Integer(val(rng)));
    }
  }
  return a;
}

/// A random unimodular matrix and its inverse, built from `steps` elementary
/// row operations and swaps.
inline std::pair<SparseIntMatrix, SparseIntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n,
                                                                     int steps) {
  std::vector<std::vector<Integer>> w(n, std::vector<Integer>(n)), inv = w;
  for (std::size_t i = 0; i < n; ++i) w[i][i] = inv[i][i] = Integer(1);
  for (int s = 0; s < steps && n >= 2; ++s) {
    std::size_t i = rng() % n, j = rng() % n;
    if (i == j) continue;
    if (rng() % 4 == 0) {
      // W <- P W, W^-1 <- W^-1 P.
      std::swap(w[i], w[j]);
      for (auto& row : inv) std::swap(row[i], row[j]);
    } else {
      Integer q(static_cast<int>(rng() % 5) - 2);
      // W <- (I + q E_ij) W, W^-1 <- W^-1 (I - q E_ij).
      for (std::size_t c = 0; c < n; ++c) w[i][c] += q * w[j][c];
      for (std::size_t r = 0; r < n; ++r) inv[r][j] -= q * inv[r][i];
    }
  }
  return {SparseIntMatrix::from_dense(w), SparseIntMatrix::from_dense(inv)};
}

/// Rank over Q by Bareiss fraction-free elimination.
inline std::size_t fraction_free_rank(const SparseIntMatrix& a) {
  auto m = a.to_dense();
  std::size_t rows = a.rows(), cols = a.cols(), rank = 0;
  Integer prev(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = divexact(m[rank][c] * m[r][k] - m[r][c] * m[rank][k], prev);
      }
      m[r][c] = Integer(0);
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t rank_mod_p(const SparseIntMatrix& a, long p) {
  auto dense = a.to_dense();
  std::vector<std::vector<long>> m(a.rows(), std::vector<long>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = ((dense[r][c] % Integer(p)).to_int64() + p) % p;
  }
  auto inverse = [p](long x) {
    long r = 1;
    for (long e = p - 2; e > 0; --e) r = r * x % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < a.rows() && m[piv][c] == 0) ++piv;
    if (piv == a.rows()) continue;
    std::swap(m[piv], m[rank]);
    long s = inverse(m[rank][c]);
    for (auto& x : m[rank]) x = x * s % p;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long f = m[r][c];
      for (std::size_t k = 0; k < a.cols(); ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline Integer determinant(std::vector<std::vector<Integer>> m) {
  std::size_t n = m.size();
  Integer sign(1), prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Integer(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = divexact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Invariant factors as D_k / D_{k-1}, D_k the gcd of all k x k minors.
inline std::vector<Integer> determinantal_factors(const SparseIntMatrix& a) {
  auto dense = a.to_dense();
  std::size_t rows = a.rows(), cols = a.cols();
  auto subsets = [](std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  };
  std::vector<Integer> factors;
  Integer prev(1);
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g(0);
    for (const auto& rs : subsets(rows, k)) {
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = dense[rs[i]][cs[j]];
        }
        g = gcd(g, determinant(minor));
      }
    }
    if (g.is_zero()) break;
    factors.push_back(divexact(g, prev));
    prev = g;
  }
  return factors;
}

}  // namespace gcat::testing
