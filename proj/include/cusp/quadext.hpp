#pragma once

#include <string>

#include "cusp/rational.hpp"

namespace cusp {

// Monic quadratic context alpha^2 = p*alpha + q, irreducible over Q.
// Irreducibility is enforced at construction: the discriminant p^2 + 4q
// must not be a rational square (a reducible "extension" would silently
// break conjugation).
class MinPoly {
 public:
  MinPoly(Rational p, Rational q);

  // x^2 + x + 1 = 0, i.e. alpha^2 = -alpha - 1; houses the primitive
  // third root of unity written as `w` in scalar literals.
  static MinPoly omega() { return MinPoly(Rational(-1), Rational(-1)); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

  friend bool operator==(const MinPoly& a, const MinPoly& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator!=(const MinPoly& a, const MinPoly& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational p_, q_;
};

// Element base + ext*alpha of the quadratic extension Q(alpha).
class QuadExt {
 public:
  QuadExt(Rational base, Rational ext, MinPoly ctx)
      : base_(std::move(base)), ext_(std::move(ext)), ctx_(std::move(ctx)) {}

  static QuadExt generator(const MinPoly& ctx) { return QuadExt(Rational(0), Rational(1), ctx); }

  const Rational& base() const { return base_; }
  const Rational& ext() const { return ext_; }
  const MinPoly& context() const { return ctx_; }

  bool is_zero() const { return base_.is_zero() && ext_.is_zero(); }
  bool is_rational() const { return ext_.is_zero(); }

  // alpha -> p - alpha, the other root; an involution fixing exactly Q.
  QuadExt conjugate() const {
    return QuadExt(base_ + ext_ * ctx_.p(), -ext_, ctx_);
  }

  // x * conjugate(x); always rational, zero only at x = 0.
  Rational norm() const {
    return base_ * base_ + base_ * ext_ * ctx_.p() - ext_ * ext_ * ctx_.q();
  }
  Rational trace() const { return base_ + base_ + ext_ * ctx_.p(); }

  QuadExt operator-() const { return QuadExt(-base_, -ext_, ctx_); }
  QuadExt inverse() const;

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b);
  friend bool operator==(const QuadExt& a, const QuadExt& b);
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  std::string str() const;

 private:
  Rational base_, ext_;
  MinPoly ctx_;
};

void require_same_context(const QuadExt& a, const QuadExt& b);

}  // namespace cusp
