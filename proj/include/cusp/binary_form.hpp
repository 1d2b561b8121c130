#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cusp/mpoly.hpp"

namespace cusp {

namespace detail {

inline bool ring_is_zero(const Scalar& c) { return c.is_zero(); }
inline bool ring_is_zero(const MPoly& p) { return p.is_zero(); }
inline std::optional<Scalar> ring_divide(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}
inline std::optional<MPoly> ring_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return std::nullopt;
  return try_divide(a, b);
}

}  // namespace detail

// Homogeneous form of degree d in two variables (u, v); c[k] is the
// coefficient of u^(d-k) * v^k. R is Scalar for concrete restrictions and
// MPoly when the line itself carries symbolic coordinates.
template <class R>
struct BinaryFormT {
  unsigned degree = 0;
  std::vector<R> c;  // size degree + 1

  static BinaryFormT zero(unsigned d) { return BinaryFormT{d, std::vector<R>(d + 1, R(0))}; }
  static BinaryFormT linear(R cu, R cv) { return BinaryFormT{1, {std::move(cu), std::move(cv)}}; }

  bool is_zero() const {
    for (const auto& x : c) {
      if (!detail::ring_is_zero(x)) return false;
    }
    return true;
  }

  // Root (u:v) of a degree-1 form cu*u + cv*v.
  std::pair<R, R> root() const {
    return {c[1], R(0) - c[0]};
  }

  friend BinaryFormT operator*(const BinaryFormT& a, const BinaryFormT& b) {
    BinaryFormT r = zero(a.degree + b.degree);
    for (unsigned i = 0; i <= a.degree; ++i) {
      for (unsigned j = 0; j <= b.degree; ++j) {
        r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
      }
    }
    return r;
  }

  friend bool operator==(const BinaryFormT& a, const BinaryFormT& b) {
    return a.degree == b.degree && a.c == b.c;
  }
};

using BinaryForm = BinaryFormT<Scalar>;
using SymBinaryForm = BinaryFormT<MPoly>;

// Exact division of F by a degree-1 form L. Throws NotARoot when L does not
// divide F (the claimed root is not a root).
template <class R>
BinaryFormT<R> exact_divide_binary(const BinaryFormT<R>& F, const BinaryFormT<R>& L) {
  if (L.degree != 1) fail(Err::BadInput, "binary divisor must have degree 1");
  if (F.degree < 1) fail(Err::BadInput, "binary dividend must have positive degree");
  const R& l0 = L.c[0];
  const R& l1 = L.c[1];
  BinaryFormT<R> q = BinaryFormT<R>::zero(F.degree - 1);
  if (!detail::ring_is_zero(l0)) {
    // long division in the u-direction
    R carry = R(0);
    for (unsigned k = 0; k <= F.degree; ++k) {
      R cur = F.c[k] - carry * l1;
      if (k == F.degree) {
        if (!detail::ring_is_zero(cur)) fail(Err::NotARoot, "binary division leaves a remainder");
        break;
      }
      auto d = detail::ring_divide(cur, l0);
      if (!d) fail(Err::NotARoot, "binary division step is not exact");
      q.c[k] = *d;
      carry = *d;
    }
  } else {
    // L = l1 * v: F must have no pure u^d term
    if (detail::ring_is_zero(l1)) fail(Err::BadInput, "zero binary divisor");
    if (!detail::ring_is_zero(F.c[0])) fail(Err::NotARoot, "binary form not divisible by v");
    for (unsigned k = 1; k <= F.degree; ++k) {
      auto d = detail::ring_divide(F.c[k], l1);
      if (!d) fail(Err::NotARoot, "binary division step is not exact");
      q.c[k - 1] = *d;
    }
  }
  return q;
}

}  // namespace cusp
