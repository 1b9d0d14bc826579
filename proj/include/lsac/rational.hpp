#ifndef LSAC_RATIONAL_HPP
#define LSAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>

#include "lsac/errors.hpp"

namespace lsac {

/// Exact rational number, the ground field of every computation.
///
/// Always stored canonically: denominator > 0, gcd(|num|, den) = 1, zero is
/// 0/1. Arithmetic never rounds and never overflows (GMP bignums underneath).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: rationals embed the integers
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses the decimal-free textual form "p" or "p/q".
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero rational");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Three-way comparison: -1, 0, +1.
  int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  std::size_t hash() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lsac

template <>
struct std::hash<lsac::Rational> {
  std::size_t operator()(const lsac::Rational& r) const { return r.hash(); }
};

#endif
