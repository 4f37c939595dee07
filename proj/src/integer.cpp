#include "gcat/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace gcat {

namespace {

bool fits_int64(const mpz_class& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

mpz_class mpz_from(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) : rep_(v) { normalize(); }

Integer::Integer(std::string_view decimal) {
  mpz_class v;
  if (v.set_str(std::string(decimal), 10) != 0) {
    throw std::invalid_argument("not an integer: " + std::string(decimal));
  }
  rep_ = v;
  normalize();
}

void Integer::normalize() {
  if (!is_small()) {
    const auto& v = std::get<mpz_class>(rep_);
    if (fits_int64(v)) rep_ = static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
  }
}

mpz_class Integer::to_mpz() const {
  return is_small() ? mpz_from(small()) : std::get<mpz_class>(rep_);
}

std::int64_t Integer::to_int64() const {
  if (!is_small()) throw std::overflow_error("Integer does not fit in int64");
  return small();
}

std::string Integer::str() const {
  return is_small() ? std::to_string(small()) : std::get<mpz_class>(rep_).get_str();
}

int Integer::sign() const {
  if (is_small()) return (small() > 0) - (small() < 0);
  return sgn(std::get<mpz_class>(rep_));
}

Integer Integer::operator-() const {
  if (is_small() && small() != std::numeric_limits<std::int64_t>::min()) return Integer(-small());
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() + o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() - o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  rep_ = mpz_class(to_mpz() * o.to_mpz());
  normalize();
  return *this;
}

Integer& Integer::operator/=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer division by zero");
  if (is_small() && o.is_small() &&
      !(small() == std::numeric_limits<std::int64_t>::min() && o.small() == -1)) {
    rep_ = small() / o.small();
    return *this;
  }
  mpz_class q;
  mpz_class a = to_mpz(), b = o.to_mpz();
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  rep_ = q;
  normalize();
  return *this;
}

Integer& Integer::operator%=(const Integer& o) {
  if (o.is_zero()) throw std::domain_error("Integer division by zero");
  if (is_small() && o.is_small()) {
    if (o.small() == -1) {
      rep_ = std::int64_t{0};
    } else {
      rep_ = small() % o.small();
    }
    return *this;
  }
  mpz_class r;
  mpz_class a = to_mpz(), b = o.to_mpz();
  mpz_tdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  rep_ = r;
  normalize();
  return *this;
}

void Integer::submul(const Integer& q, const Integer& o) {
  if (is_small() && q.is_small() && o.is_small()) {
    std::int64_t p, r;
    if (!__builtin_mul_overflow(q.small(), o.small(), &p) &&
        !__builtin_sub_overflow(small(), p, &r)) {
      rep_ = r;
      return;
    }
  }
  mpz_class acc = to_mpz();
  mpz_class qq = q.to_mpz(), oo = o.to_mpz();
  mpz_submul(acc.get_mpz_t(), qq.get_mpz_t(), oo.get_mpz_t());
  rep_ = acc;
  normalize();
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() == b.small();
  if (a.is_small() != b.is_small()) return false;  // canonical representation
  return std::get<mpz_class>(a.rep_) == std::get<mpz_class>(b.rep_);
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() != std::numeric_limits<std::int64_t>::min() &&
      b.small() != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small() < 0 ? -a.small() : a.small();
    std::int64_t y = b.small() < 0 ? -b.small() : b.small();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_class x = a.to_mpz(), y = b.to_mpz();
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return Integer(g);
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return abs(divexact(a, gcd(a, b)) * b);
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  mpz_class g, s, t;
  mpz_class aa = a.to_mpz(), bb = b.to_mpz();
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  x = Integer(s);
  y = Integer(t);
  return Integer(g);
}

Integer divexact(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && b.small() != -1) return Integer(a.small() / b.small());
  mpz_class q;
  mpz_class aa = a.to_mpz(), bb = b.to_mpz();
  mpz_divexact(q.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
  return Integer(q);
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(r);
}

std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

}  // namespace gcat
