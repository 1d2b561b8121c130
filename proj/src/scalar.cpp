#include "cusp/scalar.hpp"

namespace cusp {

bool Scalar::is_zero() const {
  if (is_rational()) return std::get<Rational>(v_).is_zero();
  return false;  // nonzero ext part by the demotion invariant
}

bool Scalar::is_one() const {
  return is_rational() && std::get<Rational>(v_).is_one();
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) fail(Err::FieldMismatch, "value is not rational: " + str());
  return std::get<Rational>(v_);
}

const QuadExt& Scalar::as_quadext() const {
  if (is_rational()) fail(Err::Internal, "value has no extension part");
  return std::get<QuadExt>(v_);
}

QuadExt Scalar::promoted(const MinPoly& ctx) const {
  if (is_rational()) return QuadExt(std::get<Rational>(v_), Rational(0), ctx);
  const QuadExt& q = std::get<QuadExt>(v_);
  if (q.context() != ctx) fail(Err::FieldMismatch, "value lives in a different extension");
  return q;
}

Scalar Scalar::conjugate() const {
  if (is_rational()) return *this;
  return Scalar(std::get<QuadExt>(v_).conjugate());
}

Scalar Scalar::norm() const {
  if (is_rational()) {
    const Rational& r = std::get<Rational>(v_);
    return Scalar(r * r);
  }
  return Scalar(std::get<QuadExt>(v_).norm());
}

Scalar Scalar::inverse() const {
  if (is_rational()) return Scalar(std::get<Rational>(v_).inverse());
  return Scalar(std::get<QuadExt>(v_).inverse());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-std::get<Rational>(v_));
  return Scalar(-std::get<QuadExt>(v_));
}

namespace {

template <class Op>
Scalar binop(const Scalar& a, const Scalar& b, Op op) {
  if (a.is_rational() && b.is_rational()) {
    return Scalar(op(a.as_rational(), b.as_rational()));
  }
  MinPoly ctx = a.context() ? *a.context() : *b.context();
  return Scalar(op(a.promoted(ctx), b.promoted(ctx)));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binop(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) fail(Err::DivisionByZero, "scalar division by zero");
  return binop(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return a.as_rational() == b.as_rational();
  return a.as_quadext() == b.as_quadext();
}

bool Scalar::needs_parens() const {
  if (is_rational()) return false;
  const QuadExt& q = std::get<QuadExt>(v_);
  return !q.base().is_zero();
}

bool Scalar::leading_negative() const {
  if (is_rational()) return std::get<Rational>(v_).is_negative();
  const QuadExt& q = std::get<QuadExt>(v_);
  if (!q.base().is_zero()) return false;  // composite, rendered in parens
  return q.ext().is_negative();
}

double Scalar::to_double_base() const {
  return as_rational().to_double();
}

std::string Scalar::str() const {
  if (is_rational()) return std::get<Rational>(v_).str();
  return std::get<QuadExt>(v_).str();
}

}  // namespace cusp
