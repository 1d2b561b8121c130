#include "cusp/rational.hpp"

#include <cctype>

namespace cusp {

Rational::Rational(long n, long d) {
  if (d == 0) fail(Err::DivisionByZero, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) fail(Err::ParseError, "empty rational literal");
  // validate: optional '-', digits, optional '/digits'
  size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
  if (digits == 0) fail(Err::ParseError, "malformed rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') fail(Err::ParseError, "malformed rational literal: " + s);
    ++i;
    size_t den_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++den_digits; }
    if (den_digits == 0 || i != s.size()) fail(Err::ParseError, "malformed rational literal: " + s);
  }
  mpq_class q(s);
  if (q.get_den() == 0) fail(Err::DivisionByZero, "rational with zero denominator: " + s);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Err::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1) / v_);
}

bool Rational::is_square() const {
  if (is_negative()) return false;
  return mpz_perfect_square_p(v_.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(v_.get_den().get_mpz_t());
}

}  // namespace cusp
