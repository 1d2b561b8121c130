#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cusp/binary_form.hpp"
#include "cusp/mpoly.hpp"
#include "cusp/projgeom.hpp"

namespace cusp {

inline const std::array<std::string, 4> kSurfaceVars = {"x0", "x1", "x2", "x3"};

// Homogeneous cubic form in x0..x3; the surface is its zero set in P^3.
class CubicSurface {
 public:
  explicit CubicSurface(MPoly form);

  const MPoly& form() const { return form_; }
  std::array<MPoly, 4> gradient() const;
  bool is_rational() const { return form_.all_coeffs_rational(); }
  CubicSurface conjugate() const { return CubicSurface(form_.conjugate()); }
  Scalar evaluate(const ProjPoint& p) const;

 private:
  MPoly form_;
};

// f(u A + v B) collected as a binary cubic in (u, v).
BinaryForm restrict_to_line(const CubicSurface& S, const ProjLine& l);
SymBinaryForm restrict_to_symline(const CubicSurface& S, const SymPoint& A, const SymPoint& B);

bool contains_line(const CubicSurface& S, const ProjLine& l);

// Two skew lines plus a line meeting both. When the skew pair carries
// extension entries it must be conjugate-stable and m rational, so the
// union is defined over Q.
class LineTriple {
 public:
  LineTriple(ProjLine l1, ProjLine l2, ProjLine m);

  const ProjLine& l1() const { return l1_; }
  const ProjLine& l2() const { return l2_; }
  const ProjLine& m() const { return m_; }
  bool conjugate_stable() const { return conjugate_stable_; }

 private:
  ProjLine l1_, l2_, m_;
  bool conjugate_stable_ = false;
};

// The linear conditions "S contains the line" for the ordered triple:
// 4 binary-cubic coefficients per line on the 20 cubic monomials.
struct CubicSpace {
  std::vector<CubicSurface> basis;  // over Q when the triple is conjugate-stable
  int dimension = 0;
  int rank = 0;  // of the 12x20 condition matrix; observed, not interpreted
};

CubicSpace cubic_space(const LineTriple& triple);

// The 20 degree-3 exponent vectors over x0..x3 in the fixed graded-lex
// descending order used everywhere a cubic is flattened to coefficients.
const std::vector<std::array<unsigned, 4>>& cubic_monomials();
MPoly cubic_from_coeffs(const std::vector<Scalar>& coeffs);

}  // namespace cusp
