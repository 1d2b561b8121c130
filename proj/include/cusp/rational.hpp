#pragma once

#include <gmpxx.h>

#include <string>

#include "cusp/errors.hpp"

namespace cusp {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. GMP keeps the invariant for us.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(mpq_class q);

  // Accepts "123", "-4/5". Throws ParseError on malformed input.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_square() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inverse() const;
  Rational abs() const { return is_negative() ? -*this : *this; }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

 private:
  mpq_class v_;
};

}  // namespace cusp
