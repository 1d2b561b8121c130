#include "cusp/ratfn.hpp"

namespace cusp {

RatFn::RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Err::DivisionByZero, "rational function with zero denominator");
  reduce();
}

void RatFn::reduce() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  MPoly g = mpoly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *try_divide(num_, g);
    den_ = *try_divide(den_, g);
  }
  Scalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ = num_.divided_by(lc);
    den_ = den_.divided_by(lc);
  }
}

Scalar RatFn::evaluate(const std::map<std::string, Scalar>& point) const {
  Scalar d = den_.evaluate(point);
  if (d.is_zero()) fail(Err::DivisionByZero, "rational function pole");
  return num_.evaluate(point) / d;
}

std::string RatFn::str() const {
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace cusp
