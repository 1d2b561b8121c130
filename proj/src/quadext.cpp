#include "cusp/quadext.hpp"

namespace cusp {

MinPoly::MinPoly(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {
  Rational disc = p_ * p_ + Rational(4) * q_;
  if (disc.is_square()) {
    fail(Err::ReducibleMinPoly,
         "x^2 - (" + p_.str() + ")*x - (" + q_.str() + ") has a rational root");
  }
}

std::string MinPoly::str() const {
  return "x^2 = (" + p_.str() + ")*x + (" + q_.str() + ")";
}

void require_same_context(const QuadExt& a, const QuadExt& b) {
  if (a.context() != b.context()) {
    fail(Err::FieldMismatch, "operands live in different quadratic extensions");
  }
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) fail(Err::DivisionByZero, "inverse of zero extension element");
  Rational n = norm();
  QuadExt c = conjugate();
  return QuadExt(c.base_ / n, c.ext_ / n, ctx_);
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
  require_same_context(a, b);
  return QuadExt(a.base_ + b.base_, a.ext_ + b.ext_, a.ctx_);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
  require_same_context(a, b);
  return QuadExt(a.base_ - b.base_, a.ext_ - b.ext_, a.ctx_);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
  require_same_context(a, b);
  // (a0 + a1*t)(b0 + b1*t) with t^2 = p*t + q
  Rational cross = a.ext_ * b.ext_;
  return QuadExt(a.base_ * b.base_ + cross * a.ctx_.q(),
                 a.base_ * b.ext_ + a.ext_ * b.base_ + cross * a.ctx_.p(), a.ctx_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
  require_same_context(a, b);
  return a * b.inverse();
}

bool operator==(const QuadExt& a, const QuadExt& b) {
  return a.ctx_ == b.ctx_ && a.base_ == b.base_ && a.ext_ == b.ext_;
}

std::string QuadExt::str() const {
  if (ext_.is_zero()) return base_.str();
  std::string wpart;
  if (ext_.is_one()) {
    wpart = "w";
  } else if (ext_ == Rational(-1)) {
    wpart = "-w";
  } else {
    wpart = ext_.str() + "*w";
  }
  if (base_.is_zero()) return wpart;
  if (ext_.is_negative()) {
    QuadExt neg(Rational(0), -ext_, ctx_);
    return base_.str() + " - " + neg.str();
  }
  return base_.str() + " + " + wpart;
}

}  // namespace cusp
