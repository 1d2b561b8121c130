#pragma once

#include <array>
#include <string>

#include "cusp/mpoly.hpp"

namespace cusp {

template <class R>
using Pt4 = std::array<R, 4>;
using ProjPoint = Pt4<Scalar>;
using SymPoint = Pt4<MPoly>;

// Linear form a0 x0 + ... + a3 x3; the plane is its zero set.
template <class R>
using Form4 = std::array<R, 4>;
using ProjPlane = Form4<Scalar>;
using SymPlane = Form4<MPoly>;

template <class R>
R form_dot(const Form4<R>& h, const Pt4<R>& p) {
  return h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3];
}

template <class R>
bool pt_is_zero(const Pt4<R>& p);
template <>
inline bool pt_is_zero(const ProjPoint& p) {
  return p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero();
}
template <>
inline bool pt_is_zero(const SymPoint& p) {
  return p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero();
}

// Equality up to scale: vanishing of all 2x2 minors.
template <class R>
bool same_projective_point(const Pt4<R>& a, const Pt4<R>& b) {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    }
  }
  return !pt_is_zero(a) && !pt_is_zero(b);
}

// p01, p02, p03, p12, p13, p23 of the span of A and B.
template <class R>
std::array<R, 6> pluecker_of(const Pt4<R>& A, const Pt4<R>& B) {
  return {A[0] * B[1] - A[1] * B[0], A[0] * B[2] - A[2] * B[0], A[0] * B[3] - A[3] * B[0],
          A[1] * B[2] - A[2] * B[1], A[1] * B[3] - A[3] * B[1], A[2] * B[3] - A[3] * B[2]};
}

// Incidence pairing; zero exactly when the lines meet.
template <class R>
R pluecker_pairing(const std::array<R, 6>& p, const std::array<R, 6>& q) {
  return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[5] * q[0] - p[4] * q[1] + p[3] * q[2];
}

// The plane spanned by x, A, B: signed 3x3 minors of the stacked rows.
// All-zero output means the three points are dependent.
template <class R>
Form4<R> plane_through_points(const Pt4<R>& x, const Pt4<R>& A, const Pt4<R>& B) {
  auto det3 = [&](int c0, int c1, int c2) {
    return x[c0] * (A[c1] * B[c2] - A[c2] * B[c1]) - x[c1] * (A[c0] * B[c2] - A[c2] * B[c0]) +
           x[c2] * (A[c0] * B[c1] - A[c1] * B[c0]);
  };
  return {det3(1, 2, 3), R(0) - det3(0, 2, 3), det3(0, 1, 3), R(0) - det3(0, 1, 2)};
}

// Point where the span of A, B crosses the plane h: (h.B) A - (h.A) B.
// Zero output means the line lies in the plane.
template <class R>
Pt4<R> line_meet_plane(const Pt4<R>& A, const Pt4<R>& B, const Form4<R>& h) {
  R hA = form_dot(h, A);
  R hB = form_dot(h, B);
  Pt4<R> out;
  for (int i = 0; i < 4; ++i) out[i] = hB * A[i] - hA * B[i];
  return out;
}

// Line in P^3 stored as a spanning point pair with cached Pluecker
// coordinates (the engine needs explicit intersection points, so the pair
// is primary and Pluecker is derived).
class ProjLine {
 public:
  ProjLine(ProjPoint a, ProjPoint b);

  const ProjPoint& a() const { return a_; }
  const ProjPoint& b() const { return b_; }
  const std::array<Scalar, 6>& pluecker() const { return pl_; }

  bool contains(const ProjPoint& p) const;
  bool same_line(const ProjLine& o) const;
  ProjLine conjugate() const;
  bool is_rational() const;

 private:
  ProjPoint a_, b_;
  std::array<Scalar, 6> pl_;
};

bool lines_meet(const ProjLine& l1, const ProjLine& l2);

// Intersection point of two distinct meeting lines.
ProjPoint line_line_meet(const ProjLine& l1, const ProjLine& l2);

ProjPlane plane_through(const ProjPoint& x, const ProjLine& l);
ProjLine meet_planes(const ProjPlane& h1, const ProjPlane& h2);

bool plane_contains_line(const ProjPlane& h, const ProjLine& l);
bool plane_contains_point(const ProjPlane& h, const ProjPoint& p);

struct Transversal {
  ProjLine line;
  ProjPoint on_l1, on_l2;
};

// The unique line through x meeting both skew lines; also returns the two
// intersection points. x on either line is a degenerate input (those are
// the base points of the parametrization).
Transversal transversal(const ProjPoint& x, const ProjLine& l1, const ProjLine& l2);

struct SymLine {
  SymPoint a, b;
};

struct SymTransversal {
  SymLine line;  // spanned by the two marked intersection points
  SymPoint on_l1, on_l2;
};

SymTransversal transversal_sym(const SymPoint& x, const ProjLine& l1, const ProjLine& l2);

// Canonical representative: first nonzero coordinate scaled to 1.
ProjPoint normalized(const ProjPoint& p);

std::string point_str(const ProjPoint& p);

}  // namespace cusp
