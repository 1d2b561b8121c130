#include "cusp/projgeom.hpp"

#include "cusp/linalg.hpp"

namespace cusp {

ProjLine::ProjLine(ProjPoint a, ProjPoint b) : a_(std::move(a)), b_(std::move(b)) {
  if (pt_is_zero(a_) || pt_is_zero(b_)) fail(Err::DegenerateLine, "line through a zero vector");
  pl_ = pluecker_of(a_, b_);
  bool nonzero = false;
  for (const auto& c : pl_) {
    if (!c.is_zero()) { nonzero = true; break; }
  }
  if (!nonzero) fail(Err::DegenerateLine, "coincident spanning points");
}

bool ProjLine::contains(const ProjPoint& p) const {
  // rank of [p; a; b] stays 2: every 3x3 minor (i.e. every plane through
  // a and b evaluated in the cofactor expansion) vanishes
  Form4<Scalar> cof = plane_through_points(p, a_, b_);
  return cof[0].is_zero() && cof[1].is_zero() && cof[2].is_zero() && cof[3].is_zero();
}

bool ProjLine::same_line(const ProjLine& o) const {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (!(pl_[i] * o.pl_[j] - pl_[j] * o.pl_[i]).is_zero()) return false;
    }
  }
  return true;
}

ProjLine ProjLine::conjugate() const {
  auto cj = [](const ProjPoint& p) {
    return ProjPoint{p[0].conjugate(), p[1].conjugate(), p[2].conjugate(), p[3].conjugate()};
  };
  return ProjLine(cj(a_), cj(b_));
}

bool ProjLine::is_rational() const {
  for (const auto& c : a_) {
    if (!c.is_rational()) return false;
  }
  for (const auto& c : b_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

bool lines_meet(const ProjLine& l1, const ProjLine& l2) {
  return pluecker_pairing(l1.pluecker(), l2.pluecker()).is_zero();
}

ProjPoint line_line_meet(const ProjLine& l1, const ProjLine& l2) {
  if (l1.same_line(l2)) fail(Err::SamePlane, "lines coincide, no single meet point");
  if (!lines_meet(l1, l2)) fail(Err::SkewLines, "lines are skew");
  // alpha a1 + beta b1 - gamma a2 - delta b2 = 0; the kernel is 1-dim
  ScalarMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    m.at(i, 0) = l1.a()[i];
    m.at(i, 1) = l1.b()[i];
    m.at(i, 2) = -l2.a()[i];
    m.at(i, 3) = -l2.b()[i];
  }
  auto ker = kernel_basis(std::move(m));
  if (ker.size() != 1) fail(Err::Internal, "meeting lines with kernel dim != 1");
  ProjPoint p;
  for (int i = 0; i < 4; ++i) p[i] = ker[0][0] * l1.a()[i] + ker[0][1] * l1.b()[i];
  if (pt_is_zero(p)) fail(Err::Internal, "degenerate meet point");
  return p;
}

ProjPlane plane_through(const ProjPoint& x, const ProjLine& l) {
  ProjPlane h = plane_through_points(x, l.a(), l.b());
  if (h[0].is_zero() && h[1].is_zero() && h[2].is_zero() && h[3].is_zero()) {
    fail(Err::DegenerateSpan, "point lies on the line, plane not unique");
  }
  return h;
}

ProjLine meet_planes(const ProjPlane& h1, const ProjPlane& h2) {
  // proportional planes have no unique intersection line
  bool prop = true;
  for (int i = 0; i < 4 && prop; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (!(h1[i] * h2[j] - h1[j] * h2[i]).is_zero()) { prop = false; break; }
    }
  }
  if (prop) fail(Err::SamePlane, "planes coincide");
  ScalarMatrix m(2, 4);
  for (int j = 0; j < 4; ++j) {
    m.at(0, j) = h1[j];
    m.at(1, j) = h2[j];
  }
  auto ker = kernel_basis(std::move(m));
  if (ker.size() != 2) fail(Err::Internal, "plane pair with kernel dim != 2");
  return ProjLine({ker[0][0], ker[0][1], ker[0][2], ker[0][3]},
                  {ker[1][0], ker[1][1], ker[1][2], ker[1][3]});
}

bool plane_contains_point(const ProjPlane& h, const ProjPoint& p) {
  return form_dot(h, p).is_zero();
}

bool plane_contains_line(const ProjPlane& h, const ProjLine& l) {
  return plane_contains_point(h, l.a()) && plane_contains_point(h, l.b());
}

Transversal transversal(const ProjPoint& x, const ProjLine& l1, const ProjLine& l2) {
  if (lines_meet(l1, l2)) fail(Err::NotSkew, "transversal needs skew lines");
  if (l1.contains(x) || l2.contains(x)) {
    fail(Err::DegenerateTransversal, "base point: x lies on one of the lines");
  }
  ProjPlane p1 = plane_through(x, l1);
  ProjPlane p2 = plane_through(x, l2);
  ProjPoint q1 = line_meet_plane(l1.a(), l1.b(), p2);
  ProjPoint q2 = line_meet_plane(l2.a(), l2.b(), p1);
  if (pt_is_zero(q1) || pt_is_zero(q2)) {
    fail(Err::Internal, "skew lines cannot share a plane");
  }
  return Transversal{ProjLine(q1, q2), q1, q2};
}

SymTransversal transversal_sym(const SymPoint& x, const ProjLine& l1, const ProjLine& l2) {
  if (lines_meet(l1, l2)) fail(Err::NotSkew, "transversal needs skew lines");
  auto lift_pt = [](const ProjPoint& p) {
    return SymPoint{MPoly(p[0]), MPoly(p[1]), MPoly(p[2]), MPoly(p[3])};
  };
  SymPoint a1 = lift_pt(l1.a()), b1 = lift_pt(l1.b());
  SymPoint a2 = lift_pt(l2.a()), b2 = lift_pt(l2.b());
  SymPlane p1 = plane_through_points(x, a1, b1);
  SymPlane p2 = plane_through_points(x, a2, b2);
  SymPoint q1 = line_meet_plane(a1, b1, p2);
  SymPoint q2 = line_meet_plane(a2, b2, p1);
  if (pt_is_zero(q1) || pt_is_zero(q2)) {
    fail(Err::DegenerateChart, "transversal degenerates along the whole chart");
  }
  return SymTransversal{SymLine{q1, q2}, q1, q2};
}

ProjPoint normalized(const ProjPoint& p) {
  for (int i = 0; i < 4; ++i) {
    if (!p[i].is_zero()) {
      ProjPoint out;
      for (int j = 0; j < 4; ++j) out[j] = p[j] / p[i];
      return out;
    }
  }
  fail(Err::Internal, "normalizing the zero point");
}

std::string point_str(const ProjPoint& p) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) s += ", ";
    s += p[i].str();
  }
  return s + ")";
}

}  // namespace cusp
