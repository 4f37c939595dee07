#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace gcat {

/// Arbitrary-precision integer with an inline int64 representation.
///
/// Values that fit in a signed 64-bit word never touch the heap; arithmetic
/// that overflows promotes to an mpz_class and results that fit again are
/// demoted, so the representation of a value is always canonical.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : rep_(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);
  explicit Integer(std::string_view decimal);

  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::int64_t small() const { return std::get<std::int64_t>(rep_); }
  mpz_class to_mpz() const;
  /// Throws std::overflow_error if the value does not fit.
  std::int64_t to_int64() const;
  std::string str() const;

  bool is_zero() const { return is_small() && small() == 0; }
  bool is_unit() const { return is_small() && (small() == 1 || small() == -1); }
  int sign() const;

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);
  /// Truncating division, like the built-in operator.
  Integer& operator/=(const Integer& o);
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  /// this -= q * o, the inner step of every elimination.
  void submul(const Integer& q, const Integer& o);

 private:
  void normalize();
  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

Integer abs(const Integer& a);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Returns g = gcd(a, b) >= 0 and sets x, y with x*a + y*b = g.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y);
/// Exact quotient; a must be divisible by b.
Integer divexact(const Integer& a, const Integer& b);
Integer binomial(std::int64_t n, std::int64_t k);

std::ostream& operator<<(std::ostream& os, const Integer& a);

}  // namespace gcat
