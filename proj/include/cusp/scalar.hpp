#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cusp/quadext.hpp"
#include "cusp/rational.hpp"

namespace cusp {

// Closed union of Rational and QuadExt. Mixed arithmetic promotes the
// rational side into the ambient extension; extension values whose ext
// part is zero demote back to Rational, so structural equality is value
// equality and rationality checks are trivial.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(Rational r) : v_(std::move(r)) {}
  Scalar(const QuadExt& q) {
    if (q.is_rational()) v_ = q.base();
    else v_ = q;
  }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  bool is_one() const;

  // The base-field part when the value is rational.
  std::optional<Rational> rational_value() const {
    if (is_rational()) return std::get<Rational>(v_);
    return std::nullopt;
  }
  const Rational& as_rational() const;
  const QuadExt& as_quadext() const;

  // Context of the extension part, when present.
  std::optional<MinPoly> context() const {
    if (is_rational()) return std::nullopt;
    return std::get<QuadExt>(v_).context();
  }

  // Promote into the given extension (identity if already there).
  QuadExt promoted(const MinPoly& ctx) const;

  Scalar conjugate() const;
  Scalar norm() const;  // a * conjugate(a); rational by construction
  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Composite values ("1 + w") need parentheses when used as a factor.
  bool needs_parens() const;
  bool leading_negative() const;

  double to_double_base() const;  // rational part only; extension values refuse
  std::string str() const;

 private:
  std::variant<Rational, QuadExt> v_;
};

}  // namespace cusp
