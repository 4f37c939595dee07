#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "gcat/integer.hpp"

namespace gcat {

/// Polynomial in t with Integer coefficients, stored low to high with
/// trailing zeros trimmed. The zero polynomial has no coefficients and
/// degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(const Integer& c);  // NOLINT(google-explicit-constructor)
  IntPolynomial(int c) : IntPolynomial(Integer(c)) {}  // NOLINT

  static IntPolynomial monomial(const Integer& c, std::size_t k);

  const std::vector<Integer>& coefficients() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Integer operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  Integer evaluate(const Integer& t) const;
  std::string str() const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace gcat
