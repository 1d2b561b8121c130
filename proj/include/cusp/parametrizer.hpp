#pragma once

#include <array>
#include <optional>
#include <string>

#include "cusp/ratfn.hpp"
#include "cusp/surface.hpp"

namespace cusp {

inline const std::array<std::string, 3> kChartVars = {"y0", "y1", "y2"};

struct ParamInput {
  CubicSurface S;
  ProjLine l1, l2;
  std::optional<ProjLine> m;                       // must lie on S and meet both
  std::optional<ProjPlane> plane;                  // chosen over m when absent
  std::optional<std::array<ProjPoint, 3>> chart;   // basis of the plane
};

struct VerifyReport {
  bool identity_ok = false;        // f(phi) expands to the zero polynomial
  bool gcd_unit = false;           // the four forms share no factor
  int degree = 0;                  // common total degree of the forms
  int predicted_degree = 0;        // 3 when the plane holds a transversal on S, else 4
  bool degree_ok = false;
  bool plane_has_surface_line = false;
  bool screen_was_heuristic = false;  // set when only the mod-p screen said "contained"
  std::string field;               // "Q" or the extension the coefficients need
  bool descent_ok = false;         // conjugate-stable input produced rational forms
  bool injective_sample_ok = false;

  bool ok() const {
    return identity_ok && gcd_unit && degree_ok && descent_ok && injective_sample_ok;
  }
};

struct ParamResult {
  std::array<MPoly, 4> phi;  // homogeneous forms in y0, y1, y2
  int degree;
  ProjPlane plane;
  std::array<ProjPoint, 3> chart;  // x(y) = y0 A + y1 B + y2 C
  ProjLine l1, l2, m;
  bool conjugate_stable;
  MPoly gcd_removed;
  VerifyReport verification;
};

struct BiquadResult {
  std::array<MPoly, 4> phi2;  // bidegree (2,2) forms in (u0, u1; v0, v1)
  std::array<int, 2> bidegree;
  MPoly gcd_removed;
  bool identity_ok;
};

// Deterministic plane through m avoiding l1 and l2, plus a chart basis
// {A, B, C} with m = span{A, B} and C the first canonical basis point of
// the plane off m.
std::pair<ProjPlane, std::array<ProjPoint, 3>> choose_plane(const ProjLine& l1,
                                                            const ProjLine& l2,
                                                            const ProjLine& m);

// The transversal-line engine: for symbolic x in the chart plane, restrict
// the cubic to the transversal through x, split off the two marked roots,
// and emit the third intersection point as forms in the chart parameters.
ParamResult parametrize(const ParamInput& in);

// The two marked intersection points for a concrete chart point.
std::pair<ProjPoint, ProjPoint> phi1(const ProjPoint& x, const ParamInput& in);

// Chord construction on l1 x l2 for a rational skew pair: the third
// intersection of the chord through (u, v) with the surface.
BiquadResult biquadratic(const ParamInput& in);

VerifyReport verify(const ParamResult& r, const CubicSurface& S);

// Affine view in the chart: x_i(y1, y2) = phi_i(1, y1, y2) / phi_0(1, y1, y2).
std::array<RatFn, 3> affine_view(const ParamResult& r);

// Linear form in the chart parameters cutting the locus x(y) on `line`;
// requires the line to lie in the result's plane.
MPoly chart_line_form(const ParamResult& r, const ProjLine& line);

// Restrict the four forms to the chart line {linform = 0} (parametrized by
// its canonical basis), as polynomials in (s, t).
std::array<MPoly, 4> restrict_phi_to_chart_line(const ParamResult& r, const MPoly& linform);

// Rank-1 test on the coefficient matrix: the family is one fixed point.
bool projectively_constant(const std::array<MPoly, 4>& fam);

// Chart coordinates of a point on a line: p = alpha * a + beta * b.
std::pair<Scalar, Scalar> line_coords(const ProjLine& l, const ProjPoint& p);

}  // namespace cusp
