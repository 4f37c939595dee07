#include "gcat/polynomial.hpp"

#include <ostream>

namespace gcat {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(const Integer& c) : c_{c} { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    Integer a = abs(c_[k]);
    if (!s.empty()) s += c_[k].sign() < 0 ? " - " : " + ";
    else if (c_[k].sign() < 0) s += "-";
    if (k == 0 || !(a == Integer(1))) s += a.str();
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

}  // namespace gcat
