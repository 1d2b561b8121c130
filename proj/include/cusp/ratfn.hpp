#pragma once

#include <string>

#include "cusp/mpoly.hpp"
#include "cusp/mpoly_gcd.hpp"

namespace cusp {

// Reduced quotient of two polynomials. After reduce(), gcd(num, den) is a
// unit and the denominator's graded-lex leading coefficient is 1, so equal
// functions have identical renderings.
class RatFn {
 public:
  RatFn() : num_(), den_(MPoly(1)) {}
  RatFn(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  Scalar evaluate(const std::map<std::string, Scalar>& point) const;

  friend bool operator==(const RatFn& a, const RatFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

  std::string str() const;

 private:
  MPoly num_, den_;
  void reduce();
};

}  // namespace cusp
